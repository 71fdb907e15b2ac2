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

#ifndef ENCAT_VSTRUCT_HPP
#define ENCAT_VSTRUCT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "encat/monoidal.hpp"

namespace encat {

/// A category S with a V-valued hom functor S̄: S^op x S -> V, internal
/// composition b̄_{X,Y,Z}: S̄(Y,Z)⊗S̄(X,Y) -> S̄(X,Z), and bijections
/// φ_{X,Y}: S(X,Y) -> V(I, S̄(X,Y)).
///
/// `hom` is tabulated on pairs (f, g) with f a morphism of S read in S^op,
/// so for f: X' -> X and g: Y -> Y' the entry S̄(f,g) maps S̄(X,Y) to
/// S̄(X',Y').
struct VStructureData {
  FinCategory base;
  BaseV v;
  BifunctorData hom;
  std::map<ObjTriple, MorphismRef> comp;
  std::map<ObjPair, MorphismMap> phi;

  const FinCategory& vcat() const noexcept { return v.monoidal.base; }
  const ObjectRef& h(const ObjectRef& x, const ObjectRef& y) const {
    return hom(x, y);
  }
  const MorphismRef& h(const MorphismRef& f, const MorphismRef& g) const {
    return hom(f, g);
  }
  const MorphismRef& b(const ObjectRef& x, const ObjectRef& y,
                       const ObjectRef& z) const;
  /// φ(f) for f: X -> Y.
  const MorphismRef& phi_of(const MorphismRef& f) const;
  /// φ⁻¹_{X,Y}(g) for g: I -> S̄(X,Y).
  const MorphismRef& phi_inv(const ObjectRef& x, const ObjectRef& y,
                             const MorphismRef& g) const;

  friend bool operator==(const VStructureData&,
                         const VStructureData&) = default;
};

/// One K-cylinder of X: the object K⊗X, α: K -> S̄(X, K⊗X) and the
/// isomorphisms φ̄_Y: S̄(K⊗X, Y) -> V̄(K, S̄(X,Y)).
struct CylinderEntry {
  ObjectRef obj;
  MorphismRef alpha;
  std::map<ObjectRef, MorphismRef> phibar;
  friend bool operator==(const CylinderEntry&, const CylinderEntry&) = default;
};

/// A fixed choice of cylinder for every (K in V, X in S).
struct CylinderAssignment {
  std::map<ObjPair, CylinderEntry> entries;

  const CylinderEntry& at(const ObjectRef& k, const ObjectRef& x) const;
  const MorphismRef& phibar(const ObjectRef& k, const ObjectRef& x,
                            const ObjectRef& y) const;
  friend bool operator==(const CylinderAssignment&,
                         const CylinderAssignment&) = default;
};

/// One path object: K⋔X, β: K -> S̄(K⋔X, X) and the isomorphisms
/// ψ̄_Y: S̄(Y, K⋔X) -> V̄(K, S̄(Y,X)).
struct PathEntry {
  ObjectRef obj;
  MorphismRef beta;
  std::map<ObjectRef, MorphismRef> psibar;
  friend bool operator==(const PathEntry&, const PathEntry&) = default;
};

struct PathAssignment {
  std::map<ObjPair, PathEntry> entries;

  const PathEntry& at(const ObjectRef& k, const ObjectRef& x) const;
  friend bool operator==(const PathAssignment&,
                         const PathAssignment&) = default;
};

/// A brute-force uniqueness count at one site.
struct WitnessCount {
  std::vector<std::string> site;
  std::size_t count = 0;
};

// ---- checks ---------------------------------------------------------------

/// Hom functor, typing of b̄, bijectivity and naturality of φ, the
/// associativity diagram and the two action conditions
///   S̄(f,Z) = b̄∘(1⊗φ(f))∘r⁻¹   (vstructure.right-action)
///   S̄(X,g) = b̄∘(φ(g)⊗1)∘l⁻¹   (vstructure.left-action).
/// When all pass, the composition rule φ(g∘f) = b̄∘(φ(g)⊗φ(f))∘l_I⁻¹ is
/// evaluated and a failure raises EngineBug.
Reports check_vstructure(const VStructureData& vs);
Reports check_vstructure_derived(const VStructureData& vs);

/// Typing and invertibility of φ̄, then
///   (1⊗α) then b̄_{X,K⊗X,Y}  =  (φ̄⊗1) then ε^K_{S̄(X,Y)}
/// for every (K,X,Y). Requires a closed base. When clean, also checks
/// φ̄∘φ(f) = ϖ(S̄(X,f)∘α) for every f: K⊗X -> Y (EngineBug on failure).
Reports check_cylinder(const VStructureData& vs, const CylinderAssignment& cyl);
Reports check_cylinder_derived(const VStructureData& vs,
                               const CylinderAssignment& cyl);

/// Typing and invertibility of ψ̄, then
///   (1⊗β) then c then b̄_{Y,K⋔X,X}  =  (ψ̄⊗1) then ε
/// for every (K,X,Y). Requires a closed symmetric base. The result is
/// compared with check_cylinder on the opposite V-structure and the
/// dualized path; disagreement raises EngineBug.
Reports check_path(const VStructureData& vs, const SymmetryData& sym,
                   const PathAssignment& pth);

// ---- constructions --------------------------------------------------------

/// V over itself: S̄ = V̄, b̄ = internal composition, φ = ϖ.
VStructureData self_vstructure(const BaseV& v);

/// K⊗L with α = π(1_{K⊗L}) and φ̄ = π̄.
CylinderAssignment self_cylinder(const BaseV& v);

/// K⋔L = V̄(K,L), β = π(ε∘c), ψ̄_{K,L,M} = π̄_{K,M,L}∘V̄(c_{K,M},1)∘π̄⁻¹_{M,K,L}.
PathAssignment self_path(const BaseV& v);

/// S̄^op(X,Y) = S̄(Y,X), b̄^op_{X,Y,Z} = b̄_{Z,Y,X}∘c, φ^op_{X,Y} = φ_{Y,X}.
VStructureData opposite_vstructure(const VStructureData& vs,
                                   const SymmetryData& sym);

/// A path of S read as a cylinder of the opposite V-structure.
CylinderAssignment dualize(const PathAssignment& pth);
PathAssignment dualize(const CylinderAssignment& cyl);

/// The unique f: K⊗X -> K⊗'X with S̄(X,f)∘α = α', computed by transport
/// through φ̄ and ϖ and confirmed by exhaustive search. The search count is
/// stored in `witnesses` when given. Throws WitnessError.
MorphismRef cylinder_unique_iso(const VStructureData& vs,
                                const CylinderAssignment& a,
                                const CylinderAssignment& b,
                                const ObjectRef& k, const ObjectRef& x,
                                std::size_t* witnesses = nullptr);

/// The action V x S -> S determined by a cylinder assignment. u⊗X and K⊗v
/// are computed by transport and confirmed as the unique morphisms making
/// the defining squares commute; the per-site search counts are appended to
/// `counts` when given. Bifunctoriality and naturality of φ̄ in K, X and Y
/// are asserted (EngineBug). Throws WitnessError.
BifunctorData induced_tensor_bifunctor(const VStructureData& vs,
                                       const CylinderAssignment& cyl,
                                       std::vector<WitnessCount>* counts =
                                           nullptr);

/// Bifunctor laws and the three naturality squares of φ̄ for a computed
/// action.
Reports check_induced_tensor(const VStructureData& vs,
                             const CylinderAssignment& cyl,
                             const BifunctorData& action);

}  // namespace encat

#endif  // ENCAT_VSTRUCT_HPP
