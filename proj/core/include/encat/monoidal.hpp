/* Copyright 2026 The encat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ENCAT_MONOIDAL_HPP
#define ENCAT_MONOIDAL_HPP

#include <map>
#include <optional>

#include "encat/category.hpp"

namespace encat {

/// Tensor product, unit and the coherence isomorphisms
///   a_{X,Y,Z}: (X⊗Y)⊗Z -> X⊗(Y⊗Z),  l_X: I⊗X -> X,  r_X: X⊗I -> X.
/// Components are supplied forward only; inverses are found by search.
struct MonoidalData {
  FinCategory base;
  BifunctorData tensor;
  ObjectRef unit;
  std::map<ObjTriple, MorphismRef> assoc;
  std::map<ObjectRef, MorphismRef> lunit;
  std::map<ObjectRef, MorphismRef> runit;

  const FinCategory& cat() const noexcept { return base; }
  const ObjectRef& t(const ObjectRef& x, const ObjectRef& y) const {
    return tensor(x, y);
  }
  const MorphismRef& t(const MorphismRef& f, const MorphismRef& g) const {
    return tensor(f, g);
  }
  const MorphismRef& id(const ObjectRef& x) const { return base.identity(x); }
  const MorphismRef& a(const ObjectRef& x, const ObjectRef& y,
                       const ObjectRef& z) const;
  const MorphismRef& l(const ObjectRef& x) const;
  const MorphismRef& r(const ObjectRef& x) const;
  MorphismRef a_inv(const ObjectRef& x, const ObjectRef& y,
                    const ObjectRef& z) const;
  MorphismRef l_inv(const ObjectRef& x) const;
  MorphismRef r_inv(const ObjectRef& x) const;

  friend bool operator==(const MonoidalData&, const MonoidalData&) = default;
};

/// Braiding c_{X,Y}: X⊗Y -> Y⊗X.
struct SymmetryData {
  std::map<ObjPair, MorphismRef> braid;

  const MorphismRef& c(const ObjectRef& x, const ObjectRef& y) const;
  friend bool operator==(const SymmetryData&, const SymmetryData&) = default;
};

/// Internal hom V̄(Y,Z) and evaluation ε_{Y,Z}: V̄(Y,Z)⊗Y -> Z. The
/// transpose π is derived from these by exhaustive search.
struct ClosedData {
  std::map<ObjPair, ObjectRef> hom;
  std::map<ObjPair, MorphismRef> eval;

  const ObjectRef& h(const ObjectRef& y, const ObjectRef& z) const;
  const MorphismRef& ev(const ObjectRef& y, const ObjectRef& z) const;
  friend bool operator==(const ClosedData&, const ClosedData&) = default;
};

/// A base of enrichment: monoidal, optionally symmetric and closed.
struct BaseV {
  MonoidalData monoidal;
  std::optional<SymmetryData> symmetry;
  std::optional<ClosedData> closed;

  const FinCategory& cat() const noexcept { return monoidal.base; }
  /// Throw CapabilityError when the structure is absent.
  const ClosedData& closed_or_throw() const;
  const SymmetryData& symmetry_or_throw() const;

  friend bool operator==(const BaseV&, const BaseV&) = default;
};

// ---- checks ---------------------------------------------------------------

/// Category, tensor bifunctoriality, typing/invertibility/naturality of a, l,
/// r, then the pentagon and triangle. When these pass, also evaluates the
/// derived consequences and throws EngineBug if any fails.
Reports check_monoidal(const MonoidalData& m);

/// Consequences of the axioms: r_I = l_I and
/// a_{I,X,Y} then l_{X⊗Y} = l_X ⊗ 1_Y.
Reports check_monoidal_derived(const MonoidalData& m);

/// Typing and naturality of c, then involution, hexagon and unit law.
Reports check_symmetry(const MonoidalData& m, const SymmetryData& s);

/// Typing of V̄/ε, bijectivity of the transpose for every (X,Y,Z) and its
/// naturality. When these pass, evaluates check_closed_derived and throws
/// EngineBug on disagreement.
Reports check_closed(const MonoidalData& m, const ClosedData& cl);

/// Hom bifunctor validity, dinaturality of ε, the transpose of
/// precomposition with r, π̄ against ϖ and against its defining property.
Reports check_closed_derived(const MonoidalData& m, const ClosedData& cl);

/// All applicable checks of a base.
Reports check_base(const BaseV& v);

// ---- closed structure -----------------------------------------------------

/// π(f): X -> V̄(Y,Z) for f: X⊗Y -> Z, the unique g with ε∘(g⊗1_Y) = f.
/// Throws WitnessError if the search finds zero or several candidates.
MorphismRef transpose_pi(const MonoidalData& m, const ClosedData& cl,
                         const MorphismRef& f, const ObjectRef& x,
                         const ObjectRef& y);

/// π⁻¹(g) = ε_{Y,Z}∘(g⊗1_Y) for g: X -> V̄(Y,Z).
MorphismRef transpose_pi_inv(const MonoidalData& m, const ClosedData& cl,
                             const MorphismRef& g, const ObjectRef& y,
                             const ObjectRef& z);

/// V̄(f,h): V̄(X,Z) -> V̄(X',Z') for f: X' -> X and h: Z -> Z'.
MorphismRef hom_on_morphisms(const MonoidalData& m, const ClosedData& cl,
                             const MorphismRef& f, const MorphismRef& h);

/// The hom bifunctor opposite(V) x V -> V, fully tabulated.
BifunctorData hom_bifunctor(const MonoidalData& m, const ClosedData& cl);

/// b̄_{X,Y,Z}: V̄(Y,Z)⊗V̄(X,Y) -> V̄(X,Z), the transpose of
/// ε_{Y,Z}∘(1⊗ε_{X,Y})∘a.
MorphismRef internal_composition_b(const MonoidalData& m, const ClosedData& cl,
                                   const ObjectRef& x, const ObjectRef& y,
                                   const ObjectRef& z);

/// ϖ(f) = π(f∘l_X): I -> V̄(X,Y) for f: X -> Y.
MorphismRef varpi(const MonoidalData& m, const ClosedData& cl,
                  const MorphismRef& f);

/// ϖ⁻¹(g) = ε_{X,Y}∘(g⊗1_X)∘l_X⁻¹ for g: I -> V̄(X,Y).
MorphismRef varpi_inv(const MonoidalData& m, const ClosedData& cl,
                      const MorphismRef& g, const ObjectRef& x,
                      const ObjectRef& y);

/// π̄_{X,Y,Z}: V̄(X⊗Y,Z) -> V̄(X,V̄(Y,Z)), the double transpose of ε∘a.
/// Its defining property is verified by check_closed_derived.
MorphismRef internal_pi_bar(const MonoidalData& m, const ClosedData& cl,
                            const ObjectRef& x, const ObjectRef& y,
                            const ObjectRef& z);

/// i_X = π(r_X): X -> V̄(I,X).
MorphismRef iota(const MonoidalData& m, const ClosedData& cl,
                 const ObjectRef& x);

// ---- products -------------------------------------------------------------

/// Componentwise monoidal structure on the product category.
MonoidalData product_monoidal(const MonoidalData& a, const MonoidalData& b);
SymmetryData product_symmetry(const MonoidalData& a, const SymmetryData& sa,
                              const MonoidalData& b, const SymmetryData& sb);
ClosedData product_closed(const MonoidalData& a, const ClosedData& ca,
                          const MonoidalData& b, const ClosedData& cb);
BaseV product_base(const BaseV& a, const BaseV& b);

}  // namespace encat

#endif  // ENCAT_MONOIDAL_HPP
