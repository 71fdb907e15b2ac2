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
#include "encat/category.hpp"
#include "encat/compare.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

FinCategory bool_cat() { return build_bool().monoidal.base; }

FinCategory terminal() {
  return FinCategory({"x"_o}, {{"id:x"_m, {"x"_o, "x"_o}}}, {{"x"_o, "id:x"_m}},
                     {{{"id:x"_m, "id:x"_m}, "id:x"_m}});
}

}  // namespace

TEST_SUITE("category") {
  TEST_CASE("builtin shapes match independently built categories") {
    CHECK(bool_cat() ==
          oracle::chain_category(2, [](int a, int b) { return a <= b; }));
    CHECK(build_trop(3).monoidal.base ==
          oracle::chain_category(3, [](int a, int b) { return a >= b; }));
    for (int n = 1; n <= 5; ++n)
      CHECK(build_cyc(n).monoidal.base == oracle::cyclic_group_category(n));
  }

  TEST_CASE("valid categories have no reports") {
    CHECK(validate_category(bool_cat()).empty());
    CHECK(validate_category(terminal()).empty());
    CHECK(validate_category(build_trop(4).monoidal.base).empty());
    CHECK(validate_category(build_cyc(3).monoidal.base).empty());
  }

  TEST_CASE("redirected composite breaks the unit law at that pair") {
    FinCategory bad = bool_cat().with_composite("m01"_m, "id:1"_m, "id:0"_m);
    Reports r = validate_category(bad);
    REQUIRE_FALSE(r.empty());
    CHECK(oracle::fires(r, "category.unit"));
    bool at_site = false;
    for (const auto& x : r)
      if (x.law == "category.unit" &&
          x.site == std::vector<std::string>{"m01", "id:1"})
        at_site = true;
    CHECK(at_site);
  }

  TEST_CASE("associativity failure is found") {
    // 1+(1+1) vs (1+1)+1 after corrupting one entry of Z/3.
    FinCategory bad =
        oracle::cyclic_group_category(3).with_composite("1"_m, "1"_m, "0"_m);
    CHECK(oracle::fires(validate_category(bad), "category.assoc"));
  }

  TEST_CASE("construction rejects dangling ids") {
    CHECK_THROWS_AS(FinCategory({"x"_o}, {{"f"_m, {"x"_o, "y"_o}}},
                                {{"x"_o, "f"_m}}, {}),
                    MalformedReference);
    CHECK_THROWS_AS(FinCategory({"x"_o}, {{"id:x"_m, {"x"_o, "x"_o}}}, {}, {}),
                    MalformedReference);
    CHECK_THROWS_AS(
        FinCategory({"x"_o, "y"_o},
                    {{"id:x"_m, {"x"_o, "x"_o}}, {"id:y"_m, {"y"_o, "y"_o}}},
                    {{"x"_o, "id:y"_m}, {"y"_o, "id:x"_m}}, {}),
        MalformedReference);
  }

  TEST_CASE("compose_path") {
    FinCategory b = bool_cat();
    CHECK(compose_path(b, {"id:0"_m}) == "id:0"_m);
    CHECK(compose_path(b, {"m01"_m, "id:1"_m}) == "m01"_m);
    FinCategory z3 = build_cyc(3).monoidal.base;
    CHECK(compose_path(z3, {"1"_m, "2"_m}) == "0"_m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          CHECK(compose_path(z3, {oracle::cyc(i, 3), oracle::cyc(j, 3),
                                  oracle::cyc(k, 3)}) ==
                oracle::cyc(i + j + k, 3));
    try {
      compose_path(b, {"id:0"_m, "m01"_m, "m01"_m});
      FAIL("expected NonComposable");
    } catch (const NonComposable& e) {
      CHECK(e.index() == 1);
    }
  }

  TEST_CASE("opposite and product") {
    FinCategory op = opposite_category(bool_cat());
    CHECK(op.src("m01"_m) == "1"_o);
    CHECK(op.dst("m01"_m) == "0"_o);
    CHECK(validate_category(op).empty());
    FinCategory t3 = build_trop(3).monoidal.base;
    CHECK(opposite_category(opposite_category(t3)) == t3);

    FinCategory p = product_category(bool_cat(), bool_cat());
    CHECK(p.objects().size() == 4);
    CHECK(p.morphisms().size() == 9);
    CHECK(validate_category(p).empty());
    CHECK(p.comp(MorphismRef("(m01,id:0)"), MorphismRef("(id:1,m01)")) ==
          MorphismRef("(m01,m01)"));
  }

  TEST_CASE("inverses") {
    FinCategory b = bool_cat();
    CHECK(morphism_inverse(b, "id:1"_m) == "id:1"_m);
    CHECK_FALSE(morphism_inverse(b, "m01"_m).has_value());
    CHECK_THROWS_AS(inverse_or_throw(b, "m01"_m), WitnessError);
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k < n; ++k)
        CHECK(morphism_inverse(build_cyc(n).monoidal.base, oracle::cyc(k, n)) ==
              oracle::cyc(-k, n));
  }

  TEST_CASE("structural equality compares ids") {
    CHECK(bool_cat() == bool_cat());
    CHECK(first_difference(bool_cat(), bool_cat()).empty());
    FinCategory renamed(
        {"0"_o, "1"_o},
        {{"id:0"_m, {"0"_o, "0"_o}},
         {"id:1"_m, {"1"_o, "1"_o}},
         {"le"_m, {"0"_o, "1"_o}}},
        {{"0"_o, "id:0"_m}, {"1"_o, "id:1"_m}},
        {{{"id:0"_m, "id:0"_m}, "id:0"_m},
         {{"id:1"_m, "id:1"_m}, "id:1"_m},
         {{"id:0"_m, "le"_m}, "le"_m},
         {{"le"_m, "id:1"_m}, "le"_m}});
    CHECK(validate_category(renamed).empty());
    CHECK_FALSE(renamed == bool_cat());
    CHECK_FALSE(first_difference(renamed, bool_cat()).empty());
  }

  TEST_CASE("functors and natural transformations") {
    FinCategory z6 = build_cyc(6).monoidal.base;
    FinCategory z3 = build_cyc(3).monoidal.base;
    FunctorData mod3;
    mod3.on_objects["*"_o] = "*"_o;
    for (int k = 0; k < 6; ++k)
      mod3.on_morphisms[oracle::cyc(k, 6)] = oracle::cyc(k, 3);
    CHECK(check_functor(mod3, z6, z3).empty());
    FunctorData bad = mod3;
    bad.on_morphisms["1"_m] = "2"_m;
    CHECK_FALSE(check_functor(bad, z6, z3).empty());

    FunctorData id = identity_functor(z3);
    CHECK(compose_functors(id, id) == id);
    NatTransData t{id, id, {{"*"_o, "1"_m}}};
    CHECK(check_nat_trans(t, z3, z3).empty());  // abelian: every element works
  }
}
