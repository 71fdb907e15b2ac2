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

#include "encat/report.hpp"

#include <algorithm>
#include <iterator>

#include "encat/errors.hpp"

namespace encat {

EngineBug::EngineBug(const std::string& what, std::vector<CheckReport> reports)
    : Error(what),
      reports_(std::make_shared<const std::vector<CheckReport>>(
          std::move(reports))) {}

std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
  os << r.law << " at (";
  for (std::size_t i = 0; i < r.site.size(); ++i) {
    if (i) os << ", ";
    os << r.site[i];
  }
  os << ")";
  if (r.lhs && r.rhs) os << ": " << *r.lhs << " != " << *r.rhs;
  if (r.witnesses) os << ": " << *r.witnesses << " witnesses";
  if (!r.detail.empty()) os << " [" << r.detail << "]";
  return os;
}

namespace {

constexpr std::string_view kRegistry[] = {
    law::kPentagon,        law::kTriangle,         law::kSymInvol,
    law::kSymHexagon,      law::kSymUnit,          law::kClosedBijection,
    law::kVcatAssoc,       law::kVcatUnit,         law::kVsAssoc,
    law::kVsLeftAction,    law::kVsRightAction,    law::kCylinder,
    law::kPath,            law::kModuleAssoc,      law::kModuleUnit,
    law::kModuleClosedNat, law::kBimoduleHexagon,  law::kBimoduleAssoc,
    law::kBimoduleUnit,    law::kComoduleAssoc,    law::kComoduleUnit,
};

constexpr std::string_view kKnown[] = {
    law::kPentagon, law::kTriangle, law::kSymInvol, law::kSymHexagon,
    law::kSymUnit, law::kClosedBijection, law::kVcatAssoc, law::kVcatUnit,
    law::kVsAssoc, law::kVsLeftAction, law::kVsRightAction, law::kCylinder,
    law::kPath, law::kModuleAssoc, law::kModuleUnit, law::kModuleClosedNat,
    law::kBimoduleHexagon, law::kBimoduleAssoc, law::kBimoduleUnit,
    law::kComoduleAssoc, law::kComoduleUnit,
    // Ordinary category and functor laws.
    "category.typing", "category.total", "category.unit", "category.assoc",
    "functor.typing", "functor.identity", "functor.composition",
    "bifunctor.typing", "bifunctor.identity", "bifunctor.composition",
    "nat.typing", "nat.naturality",
    // Monoidal structure beyond the coherence diagrams.
    "monoidal.typing", "monoidal.bifunctor", "monoidal.iso",
    "monoidal.naturality", "symmetry.typing", "symmetry.naturality",
    "closed.typing", "closed.naturality",
    // Enriched structure.
    "vcat.typing", "vfunctor.typing", "vfunctor.composition", "vfunctor.unit",
    "vnat.typing", "vnat.naturality", "vstructure.typing",
    "vstructure.hom-functor", "vstructure.phi-bijection",
    "vstructure.phi-natural", "cylinder.typing", "cylinder.iso",
    "path.typing", "path.iso", "tensored.typing", "tensored.iso",
    "tensored.vnatural",
    // Modules.
    "module.typing", "module.bifunctor", "module.iso", "module.naturality",
    "moduleclosed.hom-functor", "moduleclosed.bijection",
    "moduleclosed.cotensor-functor", "comodule.typing", "comodule.bifunctor",
    "comodule.iso", "comodule.naturality", "bimodule.opposite-structure",
    // Consequences of the axioms; a failure here is an engine bug.
    "derived.unitor-agree", "derived.left-unitor-assoc",
    "derived.hom-functor", "derived.eval-dinatural", "derived.iota-transpose",
    "derived.pibar-varpi", "derived.pibar-characterization",
    "derived.double-eval", "derived.phi-composition", "derived.varpi-action",
    "derived.cylinder-transport", "derived.induced-tensor",
    "derived.phibar-natural",
    "derived.module-left-unitor-assoc", "derived.module-eval-dinatural",
    "derived.adjunction-triangle", "derived.module-phibar",
    "derived.enriched-composition", "derived.enriched-unit",
    "derived.enriched-remark", "derived.enriched-natural",
    "derived.eval-vnatural",
};

}  // namespace

std::span<const std::string_view> registry_laws() { return kRegistry; }

std::span<const std::string_view> known_laws() { return kKnown; }

bool is_known_law(std::string_view name) {
  return std::find(std::begin(kKnown), std::end(kKnown), name) !=
         std::end(kKnown);
}

Reports filter_reports(const Reports& reports,
                       std::span<const std::string> laws) {
  if (laws.empty()) return reports;
  Reports out;
  for (const auto& r : reports)
    if (std::find(laws.begin(), laws.end(), r.law) != laws.end())
      out.push_back(r);
  return out;
}

}  // namespace encat
