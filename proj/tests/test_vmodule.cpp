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

#include "doctest.h"
#include "encat/equiv.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "encat/vmodule.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

const ObjectRef kStar("*");

}  // namespace

TEST_SUITE("vmodule") {
  TEST_CASE("builtin modules pass") {
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    CHECK(check_vmodule(pm.tensor_closed.module).empty());
    CHECK(check_tensor_closed(pm.tensor_closed).empty());
    CHECK(check_closed_module(pm).empty());
    for (BaseV v : {build_bool(), build_trop(3), build_trop(4), build_cyc(1),
                    build_cyc(2), build_cyc(3)}) {
      ClosedVModuleData cm = module_self(v);
      CHECK(check_closed_module(cm).empty());
      CHECK(check_enriched_action(cm.tensor_closed,
                                  enriched_action(cm.tensor_closed))
                .empty());
    }
  }

  TEST_CASE("induced V-structures") {
    BaseV t = build_trop(3);
    CHECK(induced_vstructure(module_self(t).tensor_closed) ==
          self_vstructure(t));
    VStructureData c3 = induced_vstructure(module_self(build_cyc(3)).tensor_closed);
    for (const auto& [key, b] : c3.comp) CHECK(b == "0"_m);
    CHECK(check_vstructure(c3).empty());
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    CHECK(check_vstructure(induced_vstructure(pm.tensor_closed)).empty());
  }

  TEST_CASE("unit and counit") {
    auto [e3, c3] =
        module_eta_eps(module_self(build_cyc(3)).tensor_closed, kStar, kStar, kStar);
    CHECK(e3 == "0"_m);
    CHECK(c3 == "0"_m);

    // η: 1 -> S̄(1, 1⊕1) = 1 and ε: S̄(1,2)⊕1 = 2 -> 2 in TROP3.
    auto [et, ct] =
        module_eta_eps(module_self(build_trop(3)).tensor_closed, "1"_o, "1"_o, "2"_o);
    CHECK(et == "id:1"_m);
    CHECK(ct == "id:2"_m);

    ClosedVModuleData pm = build_poset_module(poset_diamond());
    auto [ep, cp] = module_eta_eps(pm.tensor_closed, "1"_o, "bot"_o, "top"_o);
    CHECK(ep == "id:1"_m);  // 1 -> S̄(bot, bot) = 1
    CHECK(cp == "mbot_top"_m);
  }

  TEST_CASE("enriched action values") {
    EnrichedActionData c3 = enriched_action(module_self(build_cyc(3)).tensor_closed);
    CHECK_FALSE(c3.components.empty());
    for (const auto& [key, e] : c3.components) CHECK(e == "0"_m);

    ClosedVModuleData pm = build_poset_module(poset_diamond());
    EnrichedActionData ep = enriched_action(pm.tensor_closed);
    // V̄(0,1) = 1 -> S̄(bot, x) = 1.
    for (const char* x : {"bot", "x", "y", "top"})
      CHECK(ep.components.at({"0"_o, "1"_o, ObjectRef(x)}) == "id:1"_m);
    CHECK(check_enriched_action(pm.tensor_closed, ep).empty());
  }

  TEST_CASE("module phibar values") {
    CHECK(module_phibar(module_self(build_trop(3)).tensor_closed, "1"_o, "1"_o,
                        "2"_o) == "id:0"_m);
    CHECK(module_phibar(module_self(build_cyc(3)).tensor_closed, kStar, kStar,
                        kStar) == "0"_m);
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    // S̄(bot, y) = 1 -> V̄(0, S̄(x,y)) = 1.
    CHECK(module_phibar(pm.tensor_closed, "0"_o, "x"_o, "y"_o) == "id:1"_m);
  }

  TEST_CASE("comodules and duals") {
    for (BaseV v : {build_bool(), build_trop(3), build_cyc(3)}) {
      VModuleData m = module_self(v).tensor_closed.module;
      CHECK(dualize_to_module(dualize_to_comodule(m)) == m);
      CHECK(check_comodule(dualize_to_comodule(m)).empty());
    }
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    const SymmetryData& sym = *pm.tensor_closed.module.v.symmetry;
    ClosedBimoduleData bm = bimodule_completion(pm, sym);
    ComoduleData co = bimodule_comodule(bm);
    CHECK(check_comodule(co).empty());
    CHECK(dualize_to_comodule(dualize_to_module(co)) == co);
    CHECK(check_tensor_closed(dual_tensor_closed(bm)).empty());
  }

  TEST_CASE("module mutations") {
    ClosedVModuleData c3 = module_self(build_cyc(3));
    ClosedVModuleData u = c3;
    u.tensor_closed.module.lunit[kStar] = "1"_m;
    Reports ru = check_closed_module(u);
    REQUIRE(oracle::fires(ru, "module.unit"));
    for (const auto& x : ru)
      if (x.law == "module.unit") CHECK(oracle::well_formed(x));

    // One φ entry moved: no longer a bijection, and the naturality squares
    // through that entry fail.
    ClosedVModuleData p = c3;
    p.tensor_closed.phi.at({kStar, kStar, kStar})["0"_m] = "1"_m;
    Reports rp = check_closed_module(p);
    CHECK(oracle::laws(rp) == std::set<std::string>{"moduleclosed.bijection",
                                                    "moduleclosed.naturality"});
    for (const auto& x : rp)
      if (x.law == "moduleclosed.naturality") CHECK(oracle::well_formed(x));

    ClosedVModuleData q = c3;
    q.psi.at({kStar, kStar, kStar})["2"_m] = "0"_m;
    CHECK(oracle::fires(check_closed_module(q), "moduleclosed.naturality"));
  }

  TEST_CASE("module associator mutation over a product base") {
    BaseV p = product_base(build_cyc(3), build_bool());
    ClosedVModuleData cm = module_self(p);
    const ObjectRef x("(*,0)");
    cm.tensor_closed.module.assoc[{x, x, x}] = MorphismRef("(1,id:0)");
    Reports r = check_closed_module(cm);
    REQUIRE(oracle::fires(r, "module.assoc"));
    for (const auto& e : r)
      if (e.law == "module.assoc") CHECK(oracle::well_formed(e));
  }

  TEST_CASE("posetal tables only admit typing failures") {
    // Every hom-set of the diamond has at most one element, so a misassigned
    // a_{0,1,x} cannot be a different morphism of the same type.
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    auto& m = pm.tensor_closed.module;
    const FinCategory& s = m.base;
    const MorphismRef old = m.a("0"_o, "1"_o, "x"_o);
    CHECK(s.hom(s.src(old), s.dst(old)).size() == 1);
    m.assoc[{"0"_o, "1"_o, "x"_o}] = "id:top"_m;
    Reports r;
    CHECK_NOTHROW(r = check_vmodule(m));
    CHECK_FALSE(r.empty());
  }
}
