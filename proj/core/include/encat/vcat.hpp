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

#ifndef ENCAT_VCAT_HPP
#define ENCAT_VCAT_HPP

#include <map>
#include <set>
#include <utility>

#include "encat/monoidal.hpp"
#include "encat/vstruct.hpp"

namespace encat {

/// A V-category: hom objects Ā(A,B), composition
/// b̄_{A,B,C}: Ā(B,C)⊗Ā(A,B) -> Ā(A,C) and units j_A: I -> Ā(A,A).
struct VCategoryData {
  std::set<ObjectRef> objects;
  BaseV v;
  std::map<ObjPair, ObjectRef> hom;
  std::map<ObjTriple, MorphismRef> comp;
  std::map<ObjectRef, MorphismRef> unit;

  const FinCategory& vcat() const noexcept { return v.monoidal.base; }
  const ObjectRef& h(const ObjectRef& a, const ObjectRef& b) const;
  const MorphismRef& b(const ObjectRef& a, const ObjectRef& b,
                       const ObjectRef& c) const;
  const MorphismRef& j(const ObjectRef& a) const;

  friend bool operator==(const VCategoryData&,
                         const VCategoryData&) = default;
};

/// F_{A,B}: Ā(A,B) -> B̄(FA,FB).
struct VFunctorData {
  std::map<ObjectRef, ObjectRef> on_objects;
  std::map<ObjPair, MorphismRef> on_homs;
  friend bool operator==(const VFunctorData&, const VFunctorData&) = default;
};

/// Components α_A: I -> B̄(SA,TA).
struct VNatData {
  std::map<ObjectRef, MorphismRef> components;
  friend bool operator==(const VNatData&, const VNatData&) = default;
};

/// A chosen tensor K⊗X with isomorphisms φ̄_Y: Ā(K⊗X,Y) -> V̄(K,Ā(X,Y)).
struct TensorEntry {
  ObjectRef obj;
  std::map<ObjectRef, MorphismRef> phibar;
  friend bool operator==(const TensorEntry&, const TensorEntry&) = default;
};

struct TensoredData {
  std::map<ObjPair, TensorEntry> entries;

  const TensorEntry& at(const ObjectRef& k, const ObjectRef& x) const;
  friend bool operator==(const TensoredData&, const TensoredData&) = default;
};

// ---- checks ---------------------------------------------------------------

/// Typing, then the associativity and unit diagrams for every tuple.
Reports check_vcategory(const VCategoryData& vc);

/// Typing, composition and unit preservation.
Reports check_vfunctor(const VFunctorData& f, const VCategoryData& a,
                       const VCategoryData& b);

/// Typing and V-naturality
///   b̄∘(α_B⊗S_{A,B})∘l⁻¹ = b̄∘(T_{A,B}⊗α_A)∘r⁻¹.
Reports check_vnat(const VNatData& alpha, const VFunctorData& s,
                   const VFunctorData& t, const VCategoryData& a,
                   const VCategoryData& b);

/// check_vnat into the self V-category of a closed base, cross-checked at
/// every (A,B) against the square
///   V̄(1, ϖ⁻¹(α_B))∘S_{A,B} = V̄(ϖ⁻¹(α_A), 1)∘T_{A,B}.
/// Disagreement raises EngineBug.
Reports check_vnat_into_V(const VNatData& alpha, const VFunctorData& s,
                          const VFunctorData& t, const VCategoryData& a);

/// Tensor objects with φ̄ invertible and V-natural in Y:
///   δ_{Y,Z}∘(1⊗φ̄_Y) = φ̄_Z∘b̄_{K⊗X,Y,Z},
/// with δ = π⁻¹(V̄(K, Ā(X,-))_{Y,Z}). Cross-checked against check_vnat on the
/// components ϖ(φ̄_Y) between Ā(K⊗X,-) and V̄(K, Ā(X,-)).
Reports check_tensored(const VCategoryData& vc, const TensoredData& td);

// ---- constructions --------------------------------------------------------

/// Ā(A,-) with Ā(A,-)_{B,C} = π(b̄_{A,B,C}). Requires a closed base.
VFunctorData hom_vfunctor(const VCategoryData& vc, const ObjectRef& a);

/// G after F, for F defined on `a`.
VFunctorData compose_vfunctors(const VCategoryData& a, const VFunctorData& f,
                               const VFunctorData& g);

VFunctorData identity_vfunctor(const VCategoryData& vc);

/// A closed base as a V-category over itself: Ā = V̄, b̄ internal
/// composition, j_A = ϖ(1_A).
VCategoryData self_vcategory(const BaseV& v);

/// Ā^op(A,B) = Ā(B,A), b̄^op_{A,B,C} = b̄_{C,B,A}∘c, j unchanged.
VCategoryData opposite_vcategory(const VCategoryData& vc,
                                 const SymmetryData& sym);

/// Name of the underlying morphism A -> B with V-witness w: I -> Ā(A,B).
/// The unit j_A is named "id:A".
MorphismRef underlying_name(const ObjectRef& a, const ObjectRef& b,
                            const MorphismRef& w, bool is_unit);

/// The underlying category: S(A,B) = Hom_V(I, Ā(A,B)), g∘f =
/// b̄∘(g⊗f)∘l_I⁻¹, identities j; with its V-structure (φ the identity
/// correspondence).
std::pair<FinCategory, VStructureData> underlying_category(
    const VCategoryData& vc);

/// The V-category of a V-structure: same hom objects and b̄, j_A = φ(1_A).
VCategoryData associated_vcategory(const VStructureData& vs);

/// The same V-structure with every morphism f: A -> B renamed to
/// underlying_name(A, B, φ(f)), the naming used by underlying_category.
VStructureData canonically_renamed(const VStructureData& vs);

}  // namespace encat

#endif  // ENCAT_VCAT_HPP
