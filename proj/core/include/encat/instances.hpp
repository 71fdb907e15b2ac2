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

#ifndef ENCAT_INSTANCES_HPP
#define ENCAT_INSTANCES_HPP

#include <functional>
#include <string>
#include <vector>

#include "encat/monoidal.hpp"
#include "encat/vmodule.hpp"

namespace encat {

/// Name of the unique morphism a -> b in a posetal builtin: "m" + a + b when
/// both names are one character long, "m" + a + "_" + b otherwise;
/// identities are "id:a".
MorphismRef posetal_morphism(const ObjectRef& a, const ObjectRef& b);

/// Thin category on `objects` with a morphism a -> b iff leq(a, b).
FinCategory posetal_category(
    const std::vector<ObjectRef>& objects,
    const std::function<bool(const ObjectRef&, const ObjectRef&)>& leq);

/// The unique morphism a -> b of a thin category. Throws WitnessError.
MorphismRef unique_morphism(const FinCategory& c, const ObjectRef& a,
                            const ObjectRef& b);

/// Objects {0,1}, ⊗ = ∧, I = 1, V̄(a,b) = a ⇒ b.
BaseV build_bool();

/// Objects {0..n-1}, a -> b iff a >= b, a⊗b = min(a+b, n-1), I = 0,
/// V̄(a,b) = max(b-a, 0). Throws ParameterError for n < 2.
BaseV build_trop(int n);

/// One object "*", morphisms "0".."n-1" under addition mod n; every
/// structure component is "0". Throws ParameterError for n < 1.
BaseV build_cyc(int n);

/// A finite partial order with bottom and top, as an explicit relation.
struct PosetSpec {
  std::vector<ObjectRef> elements;
  std::vector<std::pair<ObjectRef, ObjectRef>> leq;  // generating pairs
};

/// The four-element diamond bot < x, y < top.
PosetSpec poset_diamond();

/// The poset as a closed module over BOOL: 1⊗X = X, 0⊗X = ⊥, 1⋔X = X,
/// 0⋔X = ⊤, S̄(X,Y) = 1 iff X <= Y. Throws ParameterError when the relation
/// is not a partial order with bottom and top.
ClosedVModuleData build_poset_module(const PosetSpec& p);

/// A closed symmetric base as a closed module over itself: action = ⊗,
/// hom = V̄, φ = π, cotensor = V̄ with ψ obtained from π and the symmetry.
ClosedVModuleData module_self(const BaseV& v);

}  // namespace encat

#endif  // ENCAT_INSTANCES_HPP
