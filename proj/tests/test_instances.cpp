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

#include "doctest.h"
#include "encat/equiv.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

// Every structure component of a strict builtin is an identity.
bool strict(const BaseV& v) {
  const auto& m = v.monoidal;
  for (const auto& [k, f] : m.assoc)
    if (!m.base.is_identity(f)) return false;
  for (const auto& [k, f] : m.lunit)
    if (!m.base.is_identity(f)) return false;
  for (const auto& [k, f] : m.runit)
    if (!m.base.is_identity(f)) return false;
  return true;
}

}  // namespace

TEST_SUITE("instances") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_trop(1), ParameterError);
    CHECK_THROWS_AS(build_trop(0), ParameterError);
    CHECK_THROWS_AS(build_cyc(0), ParameterError);
    CHECK_NOTHROW(build_cyc(1));
    CHECK_NOTHROW(build_trop(2));

    PosetSpec no_top{{"a"_o, "b"_o, "c"_o}, {{"a"_o, "b"_o}, {"a"_o, "c"_o}}};
    CHECK_THROWS_AS(build_poset_module(no_top), ParameterError);
    PosetSpec cycle{{"a"_o, "b"_o}, {{"a"_o, "b"_o}, {"b"_o, "a"_o}}};
    CHECK_THROWS_AS(build_poset_module(cycle), ParameterError);
    PosetSpec unknown{{"a"_o}, {{"a"_o, "z"_o}}};
    CHECK_THROWS_AS(build_poset_module(unknown), ParameterError);
  }

  TEST_CASE("morphism naming") {
    CHECK(posetal_morphism("0"_o, "1"_o) == "m01"_m);
    CHECK(posetal_morphism("bot"_o, "x"_o) == "mbot_x"_m);
    CHECK(posetal_morphism("x"_o, "x"_o) == "id:x"_m);
    FinCategory t3 = build_trop(3).monoidal.base;
    CHECK(unique_morphism(t3, "2"_o, "0"_o) == "m20"_m);
    CHECK_THROWS_AS(unique_morphism(t3, "0"_o, "2"_o), WitnessError);
  }

  TEST_CASE("builtins are strict") {
    CHECK(strict(build_bool()));
    for (int n = 2; n <= 5; ++n) CHECK(strict(build_trop(n)));
    for (int n = 1; n <= 5; ++n) CHECK(strict(build_cyc(n)));
  }

  TEST_CASE("BOOL values") {
    BaseV b = build_bool();
    CHECK(b.closed->h("1"_o, "0"_o) == "0"_o);
    CHECK(b.closed->h("0"_o, "0"_o) == "1"_o);
    CHECK(b.closed->h("0"_o, "1"_o) == "1"_o);
    CHECK(b.monoidal.unit == "1"_o);
    CHECK(check_closed(b.monoidal, *b.closed).empty());
  }

  TEST_CASE("CYC(1) is terminal") {
    BaseV c = build_cyc(1);
    CHECK(c.cat().morphisms().size() == 1);
    CHECK(check_base(c).empty());
    CHECK(check_closed_module(module_self(c)).empty());
  }

  TEST_CASE("poset module over BOOL") {
    ClosedVModuleData pm = build_poset_module(poset_diamond());
    const auto& tc = pm.tensor_closed;
    const auto& m = tc.module;
    CHECK(m.base.objects().size() == 4);
    CHECK(check_closed_module(pm).empty());
    for (const auto& x : m.base.objects()) {
      CHECK(m.act("1"_o, x) == x);
      CHECK(m.act("0"_o, x) == "bot"_o);
      CHECK(pm.cot("1"_o, x) == x);
      CHECK(pm.cot("0"_o, x) == "top"_o);
      CHECK(m.l(x) == identity_name(x));
    }
    // S̄(X,Y) = 1 iff X <= Y in the diamond.
    auto leq = [](const std::string& a, const std::string& b) {
      return a == b || a == "bot" || b == "top";
    };
    for (const auto& x : m.base.objects())
      for (const auto& y : m.base.objects())
        CHECK(tc.h(x, y) == ObjectRef(leq(x.str(), y.str()) ? "1" : "0"));
    // S(0⊗x, y) = S(bot, y) and V(0, S̄(x,y)) = V(0, 0) are singletons.
    CHECK(m.base.hom(m.act("0"_o, "x"_o), "y"_o).size() == 1);
    CHECK(m.vcat().hom("0"_o, tc.h("x"_o, "y"_o)).size() == 1);
    CHECK(m.act(m.v.monoidal.t("0"_o, "1"_o), "x"_o) ==
          m.act("0"_o, m.act("1"_o, "x"_o)));
  }

  TEST_CASE("module over itself") {
    for (BaseV v : {build_bool(), build_trop(3), build_cyc(3)}) {
      ClosedVModuleData cm = module_self(v);
      CHECK(check_closed_module(cm).empty());
      CHECK(cm.tensor_closed.hom == hom_bifunctor(v.monoidal, *v.closed));
      CHECK(cm.tensor_closed.module.action == v.monoidal.tensor);
    }
    ClosedVModuleData t3 = module_self(build_trop(3));
    for (int x = 0; x < 3; ++x)
      CHECK(t3.cot("0"_o, oracle::obj(x)) == oracle::obj(x));
    ClosedVModuleData c3 = module_self(build_cyc(3));
    for (const auto& [key, table] : c3.psi)
      for (const auto& [g, h] : table) CHECK(g == h);
  }
}
