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

#ifndef ENCAT_EQUIV_HPP
#define ENCAT_EQUIV_HPP

#include <string>
#include <utility>
#include <vector>

#include "encat/compare.hpp"
#include "encat/vcat.hpp"
#include "encat/vmodule.hpp"
#include "encat/vstruct.hpp"

namespace encat {

/// A V-structure together with a chosen cylinder for every (K,X).
struct CylinderSide {
  VStructureData vs;
  CylinderAssignment cyl;
  friend bool operator==(const CylinderSide&, const CylinderSide&) = default;
};

/// Outcome of a round trip: equal tables, or the first differing entry.
struct RoundTrip {
  bool equal = true;
  std::string difference;
  explicit operator bool() const noexcept { return equal; }
};

// ---- cylinders and tensors ------------------------------------------------

/// Tensors of associated_vcategory(vs) read off the cylinders: same K⊗X,
/// same φ̄.
TensoredData cylinder_to_tensored(const VStructureData& vs,
                                  const CylinderAssignment& cyl);

/// α_{K,X} = ϖ⁻¹(φ̄_{K⊗X}∘j_{K⊗X}), φ̄ unchanged.
CylinderAssignment tensored_to_cylinder(const VCategoryData& vc,
                                        const TensoredData& td);

/// tensored_to_cylinder(associated_vcategory(vs), cylinder_to_tensored(..))
/// compared with cyl.
RoundTrip roundtrip_cylinder_tensored(const VStructureData& vs,
                                      const CylinderAssignment& cyl);

// ---- modules and cylinders ------------------------------------------------

/// Φ: the induced V-structure with K⊗X from the action, α = φ(1_{K⊗X}) and
/// φ̄ = module_phibar.
CylinderSide module_to_cylinder(const TensorClosedModuleData& tc);

/// Ψ: action = induced_tensor_bifunctor, φ(f) = ϖ⁻¹(φ̄∘φ(f)) (cross-checked
/// against b̄∘(φ(f)⊗α)∘l⁻¹), and a, l extracted by evaluating their natural
/// families at identities. Every extraction is confirmed by enumerating the
/// hom-set; `counts` receives the witness count per site. Throws
/// WitnessError when a count is not 1, EngineBug when the result fails
/// check_tensor_closed or the two routes for φ disagree.
TensorClosedModuleData cylinder_to_module(const VStructureData& vs,
                                          const CylinderAssignment& cyl,
                                          std::vector<WitnessCount>* counts =
                                              nullptr);

/// Ψ(Φ(tc)) against tc.
RoundTrip roundtrip_module_cylinder(const TensorClosedModuleData& tc);

/// Φ(Ψ(vs, cyl)) against (vs, cyl).
RoundTrip roundtrip_cylinder_module(const VStructureData& vs,
                                    const CylinderAssignment& cyl);

// ---- bimodules ------------------------------------------------------------

/// The forced comodule structure of a closed module over a closed symmetric
/// base: a^op_{K,L,X} is the value at 1_{K⋔(L⋔X)} of the family relating
/// φ and ψ through c and a, and l^op_X = ψ⁻¹(φ(l_X)). Both are confirmed on
/// every hom-set and counted against all candidates. Throws WitnessError when
/// a count is not 1, EngineBug when the result fails check_closed_bimodule.
ClosedBimoduleData bimodule_completion(const ClosedVModuleData& cm,
                                       const SymmetryData& sym,
                                       std::vector<WitnessCount>* counts =
                                           nullptr);

}  // namespace encat

#endif  // ENCAT_EQUIV_HPP
