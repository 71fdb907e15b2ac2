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

// Independent reference computations for the builtin instances. Nothing here
// calls the library's searches; values come from plain arithmetic on the
// integers the object and morphism names encode.

#ifndef ENCAT_TESTS_ORACLES_HPP
#define ENCAT_TESTS_ORACLES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "encat/category.hpp"
#include "encat/monoidal.hpp"
#include "encat/report.hpp"

namespace oracle {

using encat::MorphismRef;
using encat::ObjectRef;

inline ObjectRef obj(int i) { return ObjectRef(std::to_string(i)); }

// ---- BOOL -----------------------------------------------------------------
inline int bool_and(int a, int b) { return a & b; }
inline int bool_imp(int a, int b) { return (!a || b) ? 1 : 0; }

// ---- TROP(n): a -> b iff a >= b ---------------------------------------------
inline int trop_tensor(int n, int a, int b) { return std::min(a + b, n - 1); }
inline int trop_hom(int a, int b) { return std::max(b - a, 0); }

/// Least x with x⊕a >= b, found by scanning every object. This is the value
/// the internal hom must take if it is right adjoint to (-⊕a).
inline int trop_hom_by_scan(int n, int a, int b) {
  for (int x = 0; x < n; ++x)
    if (trop_tensor(n, x, a) >= b) return x;
  return -1;
}

// ---- CYC(n) -----------------------------------------------------------------
inline MorphismRef cyc(int k, int n) {
  return MorphismRef(std::to_string(((k % n) + n) % n));
}
inline int cyc_value(const MorphismRef& m) { return std::stoi(m.str()); }

/// Z/n as a one-object category, built from scratch.
inline encat::FinCategory cyclic_group_category(int n) {
  ObjectRef star("*");
  std::map<MorphismRef, encat::Arrow> mor;
  std::map<encat::MorPair, MorphismRef> comp;
  for (int i = 0; i < n; ++i) {
    mor[cyc(i, n)] = {star, star};
    for (int j = 0; j < n; ++j) comp[{cyc(i, n), cyc(j, n)}] = cyc(i + j, n);
  }
  return encat::FinCategory({star}, mor, {{star, cyc(0, n)}}, comp);
}

/// The thin category of a total order {0..n-1}; a -> b iff rel(a, b).
template <class Rel>
encat::FinCategory chain_category(int n, Rel rel) {
  std::set<ObjectRef> objs;
  std::map<MorphismRef, encat::Arrow> mor;
  std::map<ObjectRef, MorphismRef> ids;
  auto name = [](int a, int b) {
    return a == b ? encat::identity_name(obj(a))
                  : MorphismRef("m" + std::to_string(a) + std::to_string(b));
  };
  for (int a = 0; a < n; ++a) {
    objs.insert(obj(a));
    ids[obj(a)] = name(a, a);
    for (int b = 0; b < n; ++b)
      if (rel(a, b)) mor[name(a, b)] = {obj(a), obj(b)};
  }
  std::map<encat::MorPair, MorphismRef> comp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel(a, b) && rel(b, c)) comp[{name(a, b), name(b, c)}] = name(a, c);
  return encat::FinCategory(objs, mor, ids, comp);
}

// ---- brute force ------------------------------------------------------------

/// Number of g: X -> V̄(Y,Z) with ε∘(g⊗1_Y) = f. Uses only table lookups.
inline std::size_t transpose_candidates(const encat::MonoidalData& m,
                                        const encat::ClosedData& cl,
                                        const MorphismRef& f,
                                        const ObjectRef& x, const ObjectRef& y,
                                        const ObjectRef& z) {
  const auto& c = m.base;
  std::size_t n = 0;
  for (const auto& g : c.hom(x, cl.hom.at({y, z}))) {
    MorphismRef gy = m.tensor.on_morphisms.at({g, c.identity(y)});
    if (c.comp_table().at({gy, cl.eval.at({y, z})}) == f) ++n;
  }
  return n;
}

// ---- report helpers ---------------------------------------------------------

inline std::set<std::string> laws(const encat::Reports& r) {
  std::set<std::string> out;
  for (const auto& x : r) out.insert(x.law);
  return out;
}

inline bool fires(const encat::Reports& r, const std::string& law) {
  return laws(r).count(law) != 0;
}

/// A failure comparing two composites must carry the site and both sides.
inline bool well_formed(const encat::CheckReport& r) {
  if (r.site.empty()) return false;
  if (r.witnesses) return true;
  return r.lhs && r.rhs && *r.lhs != *r.rhs;
}

}  // namespace oracle

#endif  // ENCAT_TESTS_ORACLES_HPP
