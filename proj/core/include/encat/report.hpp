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

#ifndef ENCAT_REPORT_HPP
#define ENCAT_REPORT_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "encat/ref.hpp"

namespace encat {

/// One failed instance of a law.
///
/// `site` lists the objects/morphisms instantiating the diagram. When the
/// law compares two composites, `lhs` and `rhs` hold them (and differ).
/// Existence/uniqueness failures carry `witnesses` instead.
struct CheckReport {
  std::string law;
  std::vector<std::string> site;
  std::optional<MorphismRef> lhs;
  std::optional<MorphismRef> rhs;
  std::optional<std::size_t> witnesses;
  std::string detail;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

std::ostream& operator<<(std::ostream& os, const CheckReport& r);

using Reports = std::vector<CheckReport>;

/// Laws of the public registry. These names are a stable interface shared by
/// the checkers, the CLI `--laws` filter, and the documentation.
namespace law {
inline constexpr std::string_view kPentagon = "pentagon";
inline constexpr std::string_view kTriangle = "triangle";
inline constexpr std::string_view kSymInvol = "symmetry.invol";
inline constexpr std::string_view kSymHexagon = "symmetry.hexagon";
inline constexpr std::string_view kSymUnit = "symmetry.unit";
inline constexpr std::string_view kClosedBijection = "closed.bijection";
inline constexpr std::string_view kVcatAssoc = "vcat.assoc";
inline constexpr std::string_view kVcatUnit = "vcat.unit";
inline constexpr std::string_view kVsAssoc = "vstructure.assoc";
inline constexpr std::string_view kVsLeftAction = "vstructure.left-action";
inline constexpr std::string_view kVsRightAction = "vstructure.right-action";
inline constexpr std::string_view kCylinder = "cylinder.cp1-1";
inline constexpr std::string_view kPath = "path.cp2-1-25";
inline constexpr std::string_view kModuleAssoc = "module.assoc";
inline constexpr std::string_view kModuleUnit = "module.unit";
inline constexpr std::string_view kModuleClosedNat = "moduleclosed.naturality";
inline constexpr std::string_view kBimoduleHexagon = "bimodule.cp2-8-1";
inline constexpr std::string_view kBimoduleAssoc = "bimodule.cp2-8-2";
inline constexpr std::string_view kBimoduleUnit = "bimodule.cp2-8-3";
inline constexpr std::string_view kComoduleAssoc = "comodule.assoc";
inline constexpr std::string_view kComoduleUnit = "comodule.unit";
}  // namespace law

/// The 21 registry laws, in registry order.
std::span<const std::string_view> registry_laws();

/// Registry laws plus the auxiliary laws (typing, naturality, derived
/// consequences) that checkers may also emit.
std::span<const std::string_view> known_laws();

bool is_known_law(std::string_view name);

/// Reports whose law name is in `laws` (all reports when `laws` is empty).
Reports filter_reports(const Reports& reports,
                       std::span<const std::string> laws);

}  // namespace encat

#endif  // ENCAT_REPORT_HPP
