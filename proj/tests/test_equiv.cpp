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

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "encat/equiv.hpp"
#include "encat/instances.hpp"
#include "encat/vcat.hpp"
#include "encat/vmodule.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

std::vector<std::pair<std::string, BaseV>> bases() {
  return {{"BOOL", build_bool()},
          {"TROP3", build_trop(3)},
          {"TROP4", build_trop(4)},
          {"CYC1", build_cyc(1)},
          {"CYC2", build_cyc(2)},
          {"CYC3", build_cyc(3)},
          {"CYC3xBOOL", product_base(build_cyc(3), build_bool())}};
}

std::vector<std::pair<std::string, ClosedVModuleData>> modules() {
  return {{"POSET", build_poset_module(poset_diamond())},
          {"TROP3", module_self(build_trop(3))},
          {"CYC3", module_self(build_cyc(3))}};
}

bool all_ones(const std::vector<WitnessCount>& counts) {
  for (const auto& c : counts)
    if (c.count != 1) return false;
  return !counts.empty();
}

}  // namespace

TEST_SUITE("equiv") {
  TEST_CASE("cylinders and tensors round trip") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      VStructureData vs = self_vstructure(v);
      CylinderAssignment cyl = self_cylinder(v);
      RoundTrip rt = roundtrip_cylinder_tensored(vs, cyl);
      CHECK_MESSAGE(rt.equal, rt.difference);
      TensoredData td = cylinder_to_tensored(vs, cyl);
      CHECK(tensored_to_cylinder(associated_vcategory(vs), td) == cyl);
    }
  }

  TEST_CASE("modules and cylinders round trip") {
    for (const auto& [name, pm] : modules()) {
      CAPTURE(name);
      RoundTrip a = roundtrip_module_cylinder(pm.tensor_closed);
      CHECK_MESSAGE(a.equal, a.difference);
      CylinderSide side = module_to_cylinder(pm.tensor_closed);
      CHECK(check_cylinder(side.vs, side.cyl).empty());
      RoundTrip b = roundtrip_cylinder_module(side.vs, side.cyl);
      CHECK_MESSAGE(b.equal, b.difference);
    }
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      RoundTrip rt =
          roundtrip_cylinder_module(self_vstructure(v), self_cylinder(v));
      CHECK_MESSAGE(rt.equal, rt.difference);
    }
  }

  TEST_CASE("the self module corresponds to the self cylinder") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      CylinderSide side = module_to_cylinder(module_self(v).tensor_closed);
      CHECK(side.vs == self_vstructure(v));
      CHECK(side.cyl == self_cylinder(v));
    }
  }

  TEST_CASE("modules from cylinders") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      std::vector<WitnessCount> counts;
      TensorClosedModuleData tc =
          cylinder_to_module(self_vstructure(v), self_cylinder(v), &counts);
      CHECK(all_ones(counts));
      CHECK(check_tensor_closed(tc).empty());
      CHECK(tc.module.action == v.monoidal.tensor);
    }
    // The strict base gives identity structure maps.
    BaseV t = build_trop(3);
    TensorClosedModuleData tc =
        cylinder_to_module(self_vstructure(t), self_cylinder(t));
    for (const auto& [key, f] : tc.module.assoc) CHECK(t.cat().is_identity(f));
    for (const auto& [key, f] : tc.module.lunit) CHECK(t.cat().is_identity(f));
  }

  TEST_CASE("bimodule completion") {
    std::vector<std::pair<std::string, ClosedVModuleData>> ms = modules();
    ms.emplace_back("BOOL", module_self(build_bool()));
    ms.emplace_back("CYC3xBOOL",
                    module_self(product_base(build_cyc(3), build_bool())));
    for (const auto& [name, cm] : ms) {
      CAPTURE(name);
      const SymmetryData& sym = *cm.tensor_closed.module.v.symmetry;
      std::vector<WitnessCount> counts;
      ClosedBimoduleData bm = bimodule_completion(cm, sym, &counts);
      CHECK(all_ones(counts));
      CHECK(check_closed_bimodule(bm, sym).empty());
      CHECK(bm.closed_module == cm);
      CHECK(bimodule_completion(bm.closed_module, sym) == bm);
    }
  }

  TEST_CASE("posetal completion is made of identities") {
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    ClosedBimoduleData bm =
        bimodule_completion(pm, *pm.tensor_closed.module.v.symmetry);
    const FinCategory& s = pm.tensor_closed.base();
    // K⋔(L⋔X) and (K∧L)⋔X coincide in the diamond.
    for (const auto& [key, f] : bm.co_assoc) CHECK(s.is_identity(f));
    for (const auto& [x, f] : bm.co_lunit) CHECK(f == s.identity(x));
  }
}
