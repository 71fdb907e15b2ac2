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

#ifndef ENCAT_COMPARE_HPP
#define ENCAT_COMPARE_HPP

#include <string>

#include "encat/vcat.hpp"
#include "encat/vmodule.hpp"
#include "encat/vstruct.hpp"

namespace encat {

/// First differing table entry in canonical order, or "" when the two
/// structures are equal. Used for round-trip diagnostics.
std::string first_difference(const FinCategory& a, const FinCategory& b);
std::string first_difference(const BifunctorData& a, const BifunctorData& b);
std::string first_difference(const VStructureData& a, const VStructureData& b);
std::string first_difference(const CylinderAssignment& a,
                             const CylinderAssignment& b);
std::string first_difference(const VCategoryData& a, const VCategoryData& b);
std::string first_difference(const TensorClosedModuleData& a,
                             const TensorClosedModuleData& b);
std::string first_difference(const ClosedVModuleData& a,
                             const ClosedVModuleData& b);
std::string first_difference(const ClosedBimoduleData& a,
                             const ClosedBimoduleData& b);

}  // namespace encat

#endif  // ENCAT_COMPARE_HPP
