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

// Internal formulas shared by the module checkers and the constructions.
// Not installed.

#ifndef ENCAT_SRC_MODULE_UTIL_HPP
#define ENCAT_SRC_MODULE_UTIL_HPP

#include <optional>

#include "encat/vmodule.hpp"

namespace encat::detail {

/// ε^X_Y = φ⁻¹(1): S̄(X,Y)⊗X -> Y.
MorphismRef module_eps(const TensorClosedModuleData& tc, const ObjectRef& x,
                       const ObjectRef& y);

/// η_K = φ(1): K -> S̄(X, K⊗X).
MorphismRef module_eta(const TensorClosedModuleData& tc, const ObjectRef& k,
                       const ObjectRef& x);

/// The enriched action component (−⊗X)_{K,L}, unverified.
MorphismRef enriched_component(const TensorClosedModuleData& tc,
                               const ObjectRef& k, const ObjectRef& l,
                               const ObjectRef& x);

/// The inverse of S̄(1,ε_Y)∘(−⊗X)_{K,S̄(X,Y)} if it exists, unverified.
std::optional<MorphismRef> phibar_formula(const TensorClosedModuleData& tc,
                                          const ObjectRef& k,
                                          const ObjectRef& x,
                                          const ObjectRef& y);

/// The two sides of the associativity comparison for f: L⊗(K⊗Y) -> X,
/// both landing in S(Y, (K⊗L)⋔X) (the lower side before a^op).
MorphismRef bimodule_upper(const ClosedVModuleData& cm,
                           const SymmetryData& sym, const ObjectRef& k,
                           const ObjectRef& l, const ObjectRef& x,
                           const ObjectRef& y, const MorphismRef& f);
MorphismRef bimodule_lower(const ClosedVModuleData& cm, const ObjectRef& k,
                           const ObjectRef& l, const ObjectRef& x,
                           const ObjectRef& y, const MorphismRef& f);
/// Inverse of bimodule_lower: S(Y, K⋔(L⋔X)) -> S(L⊗(K⊗Y), X).
MorphismRef bimodule_lower_inv(const ClosedVModuleData& cm, const ObjectRef& k,
                               const ObjectRef& l, const ObjectRef& x,
                               const ObjectRef& y, const MorphismRef& g);

}  // namespace encat::detail

#endif  // ENCAT_SRC_MODULE_UTIL_HPP
