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

#ifndef ENCAT_VMODULE_HPP
#define ENCAT_VMODULE_HPP

#include <map>
#include <utility>
#include <vector>

#include "encat/monoidal.hpp"
#include "encat/vstruct.hpp"

namespace encat {

/// A left V-module: an action V x S -> S with
///   a_{K,L,X}: (K⊗L)⊗X -> K⊗(L⊗X)   and   l_X: I⊗X -> X.
struct VModuleData {
  BaseV v;
  FinCategory base;
  BifunctorData action;
  std::map<ObjTriple, MorphismRef> assoc;
  std::map<ObjectRef, MorphismRef> lunit;

  const FinCategory& vcat() const noexcept { return v.monoidal.base; }
  const ObjectRef& act(const ObjectRef& k, const ObjectRef& x) const {
    return action(k, x);
  }
  const MorphismRef& act(const MorphismRef& u, const MorphismRef& f) const {
    return action(u, f);
  }
  const MorphismRef& a(const ObjectRef& k, const ObjectRef& l,
                       const ObjectRef& x) const;
  const MorphismRef& l(const ObjectRef& x) const;
  MorphismRef a_inv(const ObjectRef& k, const ObjectRef& l,
                    const ObjectRef& x) const;
  MorphismRef l_inv(const ObjectRef& x) const;

  friend bool operator==(const VModuleData&, const VModuleData&) = default;
};

/// A V-module with hom objects S̄(X,Y) and bijections
///   φ_{K,X,Y}: S(K⊗X, Y) -> V(K, S̄(X,Y)).
struct TensorClosedModuleData {
  VModuleData module;
  BifunctorData hom;
  std::map<ObjTriple, MorphismMap> phi;

  const FinCategory& base() const noexcept { return module.base; }
  const FinCategory& vcat() const noexcept { return module.vcat(); }
  const ObjectRef& h(const ObjectRef& x, const ObjectRef& y) const {
    return hom(x, y);
  }
  const MorphismRef& h(const MorphismRef& f, const MorphismRef& g) const {
    return hom(f, g);
  }
  const MorphismRef& phi_of(const ObjectRef& k, const ObjectRef& x,
                            const ObjectRef& y, const MorphismRef& f) const;
  const MorphismRef& phi_inv(const ObjectRef& k, const ObjectRef& x,
                             const ObjectRef& y, const MorphismRef& g) const;

  friend bool operator==(const TensorClosedModuleData&,
                         const TensorClosedModuleData&) = default;
};

/// A tensor-closed module with a cotensor V x S^op -> S^op and bijections
///   ψ_{K,X,Y}: S(Y, K⋔X) -> V(K, S̄(Y,X)).
/// `cotensor` is tabulated on (u, v) with v read in S^op: for u: K -> K' and
/// v: X' -> X in S the entry is an S-morphism K'⋔X' -> K⋔X.
struct ClosedVModuleData {
  TensorClosedModuleData tensor_closed;
  BifunctorData cotensor;
  std::map<ObjTriple, MorphismMap> psi;

  const ObjectRef& cot(const ObjectRef& k, const ObjectRef& x) const {
    return cotensor(k, x);
  }
  const MorphismRef& psi_of(const ObjectRef& k, const ObjectRef& x,
                            const ObjectRef& y, const MorphismRef& g) const;
  const MorphismRef& psi_inv(const ObjectRef& k, const ObjectRef& x,
                             const ObjectRef& y, const MorphismRef& h) const;

  friend bool operator==(const ClosedVModuleData&,
                         const ClosedVModuleData&) = default;
};

/// A comodule structure on S: the cotensor with
///   a^op_{K,L,X}: K⋔(L⋔X) -> (K⊗L)⋔X   and   l^op_X: X -> I⋔X,
/// both morphisms of S. Equivalently a module structure on S^op.
struct ComoduleData {
  BaseV v;
  FinCategory base;
  BifunctorData cotensor;
  std::map<ObjTriple, MorphismRef> assoc;
  std::map<ObjectRef, MorphismRef> lunit;

  friend bool operator==(const ComoduleData&, const ComoduleData&) = default;
};

struct ClosedBimoduleData {
  ClosedVModuleData closed_module;
  std::map<ObjTriple, MorphismRef> co_assoc;
  std::map<ObjectRef, MorphismRef> co_lunit;

  friend bool operator==(const ClosedBimoduleData&,
                         const ClosedBimoduleData&) = default;
};

/// (−⊗X)_{K,L}: V̄(K,L) -> S̄(K⊗X, L⊗X), keyed by (K,L,X).
struct EnrichedActionData {
  std::map<ObjTriple, MorphismRef> components;
  friend bool operator==(const EnrichedActionData&,
                         const EnrichedActionData&) = default;
};

// ---- checks ---------------------------------------------------------------

/// Action bifunctor, typing/invertibility/naturality of a and l, then
///   a_{K,L,M⊗X}∘a_{K⊗L,M,X} = (1⊗a_{L,M,X})∘a_{K,L⊗M,X}∘(a⊗1)
///   (1⊗l_X)∘a_{K,I,X} = r_K⊗1.
/// When clean, (l_K⊗1) = l_{K⊗X}∘a_{I,K,X} is asserted (EngineBug).
Reports check_vmodule(const VModuleData& m);

/// check_vmodule, the hom bifunctor, bijectivity of φ and its naturality
/// in K, X and Y. When clean, the dinaturality of the counit and the
/// triangle identities of (−⊗X) ⊣ S̄(X,−) are asserted (EngineBug).
Reports check_tensor_closed(const TensorClosedModuleData& tc);

/// check_tensor_closed plus the cotensor bifunctor, bijectivity of ψ and
/// its naturality in K, X and Y.
Reports check_closed_module(const ClosedVModuleData& cm);

/// The comodule laws (module laws of the dual) under comodule.* names.
Reports check_comodule(const ComoduleData& c);

/// check_closed_module, the comodule laws for (a^op, l^op), the identity
/// induced_vstructure(dual) = opposite_vstructure(induced_vstructure(S)),
/// and the three diagrams relating φ, ψ, a^op and l^op
/// (bimodule.cp2-8-1, bimodule.cp2-8-2, bimodule.cp2-8-3).
Reports check_closed_bimodule(const ClosedBimoduleData& bm,
                              const SymmetryData& sym);

/// Consequences of the axioms for an enriched action: V-functor laws,
/// V-naturality in L, the transport identity E_{K,L}∘ϖ(u) = φ(u⊗X) and
/// V-naturality of the counit in Y.
Reports check_enriched_action(const TensorClosedModuleData& tc,
                              const EnrichedActionData& ea);

// ---- constructions --------------------------------------------------------

/// η_K = φ(1_{K⊗X}): K -> S̄(X, K⊗X) and ε_Y = φ⁻¹(1_{S̄(X,Y)}):
/// S̄(X,Y)⊗X -> Y.
std::pair<MorphismRef, MorphismRef> module_eta_eps(
    const TensorClosedModuleData& tc, const ObjectRef& k, const ObjectRef& x,
    const ObjectRef& y);

/// b̄ = φ(ε_Z∘(1⊗ε_Y)∘a), φ_{X,Y}(f) = φ_{I,X,Y}(f∘l_X).
VStructureData induced_vstructure(const TensorClosedModuleData& tc);

/// (−⊗X)_{K,L} = φ((ε_L⊗1)∘a⁻¹), with check_enriched_action asserted.
EnrichedActionData enriched_action(const TensorClosedModuleData& tc);

/// φ̄_{K,X,Y}: S̄(K⊗X,Y) -> V̄(K,S̄(X,Y)), the inverse of
/// S̄(1,ε_Y)∘(−⊗X)_{K,S̄(X,Y)}, verified against its characterization
///   π(φ(f∘a_{L,K,X})) = φ̄∘φ(f)   for every L and f: L⊗(K⊗X) -> Y.
/// Throws WitnessError when the composite is not invertible; EngineBug when
/// the verification fails.
MorphismRef module_phibar(const TensorClosedModuleData& tc, const ObjectRef& k,
                          const ObjectRef& x, const ObjectRef& y);

/// A module on S read as a comodule on S^op, and back. Both are exact
/// involutions.
ComoduleData dualize_to_comodule(const VModuleData& m);
VModuleData dualize_to_module(const ComoduleData& c);

/// The comodule carried by a bimodule.
ComoduleData bimodule_comodule(const ClosedBimoduleData& bm);

/// The dual side of a bimodule as a tensor-closed module on S^op: action
/// ⋔, a^op, l^op, hom S̄(Y,X), φ = ψ.
TensorClosedModuleData dual_tensor_closed(const ClosedBimoduleData& bm);

}  // namespace encat

#endif  // ENCAT_VMODULE_HPP
