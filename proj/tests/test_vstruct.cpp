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
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "encat/vmodule.hpp"
#include "encat/vstruct.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

std::vector<std::pair<std::string, BaseV>> bases() {
  return {{"BOOL", build_bool()},   {"TROP3", build_trop(3)},
          {"TROP4", build_trop(4)}, {"CYC1", build_cyc(1)},
          {"CYC2", build_cyc(2)},   {"CYC3", build_cyc(3)}};
}

}  // namespace

TEST_SUITE("vstruct") {
  TEST_CASE("self structures pass") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      VStructureData vs = self_vstructure(v);
      CHECK(check_vstructure(vs).empty());
      CHECK(check_vstructure_derived(vs).empty());
      CHECK(check_cylinder(vs, self_cylinder(v)).empty());
      CHECK(check_cylinder_derived(vs, self_cylinder(v)).empty());
      CHECK(check_path(vs, *v.symmetry, self_path(v)).empty());
    }
  }

  TEST_CASE("self structure values") {
    VStructureData t3 = self_vstructure(build_trop(3));
    for (const auto& [key, table] : t3.phi) CHECK(table.size() <= 1);

    CylinderAssignment ct = self_cylinder(build_trop(3));
    // α: 2 -> V̄(2, 2⊕2) = V̄(2,2) = 0, the unique morphism 2 -> 0.
    CHECK(ct.at("2"_o, "2"_o).obj == "2"_o);
    CHECK(ct.at("2"_o, "2"_o).alpha == "m20"_m);

    CylinderAssignment cc = self_cylinder(build_cyc(3));
    for (const auto& [key, e] : cc.entries) CHECK(e.alpha == "0"_m);

    PathAssignment pb = self_path(build_bool());
    CHECK(pb.at("0"_o, "1"_o).obj == "1"_o);
    for (int k = 0; k < 2; ++k)
      for (int x = 0; x < 2; ++x)
        CHECK(pb.at(oracle::obj(k), oracle::obj(x)).obj ==
              oracle::obj(oracle::bool_imp(k, x)));
  }

  TEST_CASE("composition mutation on CYC3 breaks the action laws") {
    // b̄ occurs twice on each side of the associativity square, so shifting
    // it by 1 cancels there; the action conditions see it once.
    VStructureData vs = self_vstructure(build_cyc(3));
    vs.comp[{"*"_o, "*"_o, "*"_o}] = "1"_m;
    Reports r = check_vstructure(vs);
    auto l = oracle::laws(r);
    CHECK(l.count("vstructure.left-action"));
    CHECK(l.count("vstructure.right-action"));
    CHECK_FALSE(l.count("vstructure.assoc"));
    for (const auto& x : r) CHECK(oracle::well_formed(x));
  }

  TEST_CASE("cylinder mutations on CYC3") {
    BaseV v = build_cyc(3);
    VStructureData vs = self_vstructure(v);
    CylinderAssignment cyl = self_cylinder(v);

    // Moving α alone breaks the defining square: 1 + b̄ against φ̄ + ε.
    CylinderAssignment moved = cyl;
    moved.entries.at({"*"_o, "*"_o}).alpha = "1"_m;
    Reports ra = check_cylinder(vs, moved);
    CHECK(oracle::laws(ra) == std::set<std::string>{"cylinder.cp1-1"});

    // Moving α and φ̄ together gives another valid cylinder.
    CylinderAssignment shifted = moved;
    shifted.entries.at({"*"_o, "*"_o}).phibar["*"_o] = "1"_m;
    CHECK(check_cylinder(vs, shifted).empty());
    std::size_t count = 0;
    CHECK(cylinder_unique_iso(vs, cyl, shifted, "*"_o, "*"_o, &count) ==
          "1"_m);
    CHECK(count == 1);

    // Moving φ̄ instead breaks the defining square.
    CylinderAssignment bad = cyl;
    bad.entries.at({"*"_o, "*"_o}).phibar["*"_o] = "1"_m;
    Reports r = check_cylinder(vs, bad);
    REQUIRE(oracle::fires(r, "cylinder.cp1-1"));
    for (const auto& x : r)
      if (x.law == "cylinder.cp1-1") CHECK(oracle::well_formed(x));

    PathAssignment pth = self_path(v);
    pth.entries.at({"*"_o, "*"_o}).psibar["*"_o] = "2"_m;
    CHECK(oracle::fires(check_path(vs, *v.symmetry, pth), "path.cp2-1-25"));
  }

  TEST_CASE("cylinder uniqueness counts") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      VStructureData vs = self_vstructure(v);
      CylinderAssignment cyl = self_cylinder(v);
      for (const auto& [key, e] : cyl.entries) {
        std::size_t n = 0;
        MorphismRef f =
            cylinder_unique_iso(vs, cyl, cyl, key.first, key.second, &n);
        CHECK(n == 1);
        CHECK(f == vs.base.identity(e.obj));
      }
      std::vector<WitnessCount> counts;
      BifunctorData act = induced_tensor_bifunctor(vs, cyl, &counts);
      CHECK_FALSE(counts.empty());
      for (const auto& c : counts) CHECK(c.count == 1);
      CHECK(act == v.monoidal.tensor);
      CHECK(check_induced_tensor(vs, cyl, act).empty());
    }
  }

  TEST_CASE("induced action values") {
    BaseV b = build_bool();
    BifunctorData ab =
        induced_tensor_bifunctor(self_vstructure(b), self_cylinder(b));
    CHECK(ab("m01"_m, "id:1"_m) == "m01"_m);
    CHECK(ab("id:1"_m, "id:1"_m) == "id:1"_m);
    BaseV t = build_trop(3);
    BifunctorData at =
        induced_tensor_bifunctor(self_vstructure(t), self_cylinder(t));
    CHECK(at("m21"_m, "id:1"_m) == "id:2"_m);
  }

  TEST_CASE("opposites and duals") {
    for (const auto& [name, v] : bases()) {
      CAPTURE(name);
      VStructureData vs = self_vstructure(v);
      VStructureData op = opposite_vstructure(vs, *v.symmetry);
      CHECK(check_vstructure(op).empty());
      CHECK(opposite_vstructure(op, *v.symmetry) == vs);
      CylinderAssignment cyl = self_cylinder(v);
      CHECK(dualize(dualize(cyl)) == cyl);
      PathAssignment pth = self_path(v);
      CHECK(dualize(dualize(pth)) == pth);
      CHECK(check_cylinder(op, dualize(pth)).empty());
    }
    VStructureData c3 = self_vstructure(build_cyc(3));
    CHECK(opposite_vstructure(c3, *build_cyc(3).symmetry) == c3);
  }

  TEST_CASE("the opposite of a module's structure is its cotensor side") {
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    const SymmetryData& sym = *pm.tensor_closed.module.v.symmetry;
    ClosedBimoduleData bm = bimodule_completion(pm, sym);
    VStructureData primal = induced_vstructure(pm.tensor_closed);
    VStructureData dual = induced_vstructure(dual_tensor_closed(bm));
    CHECK(opposite_vstructure(primal, sym) == dual);
  }

  TEST_CASE("typing failures are reported, not thrown") {
    VStructureData vs = self_vstructure(build_bool());
    vs.comp[{"0"_o, "1"_o, "0"_o}] = "id:1"_m;
    Reports r;
    CHECK_NOTHROW(r = check_vstructure(vs));
    CHECK_FALSE(r.empty());
  }
}
