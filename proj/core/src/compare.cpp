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

#include "encat/compare.hpp"

#include <map>
#include <tuple>

namespace encat {

namespace {

std::string key_str(const ObjectRef& x) { return x.str(); }
std::string key_str(const MorphismRef& f) { return f.str(); }
template <class A, class B>
std::string key_str(const std::pair<A, B>& p) {
  return pair_name(key_str(p.first), key_str(p.second));
}
std::string key_str(const ObjTriple& t) {
  return "(" + std::get<0>(t).str() + "," + std::get<1>(t).str() + "," +
         std::get<2>(t).str() + ")";
}
std::string key_str(const Arrow& a) {
  return a.src.str() + " -> " + a.dst.str();
}

template <class V>
std::string value_str(const V& v) {
  return key_str(v);
}

// Walks both maps in key order. Values are compared with `inner`, which
// returns "" when equal.
template <class K, class V, class Inner>
std::string diff_maps(const std::string& table, const std::map<K, V>& a,
                      const std::map<K, V>& b, Inner inner) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      return table + " at " + key_str(ia->first) + ": only on the left";
    if (ia == a.end() || ib->first < ia->first)
      return table + " at " + key_str(ib->first) + ": only on the right";
    std::string d = inner(ia->second, ib->second);
    if (!d.empty()) return table + " at " + key_str(ia->first) + ": " + d;
    ++ia;
    ++ib;
  }
  return {};
}

template <class K, class V>
std::string diff_maps(const std::string& table, const std::map<K, V>& a,
                      const std::map<K, V>& b) {
  return diff_maps(table, a, b, [](const V& x, const V& y) -> std::string {
    if (x == y) return {};
    return value_str(x) + " vs " + value_str(y);
  });
}

std::string diff_tables(const std::string& table,
                        const std::map<ObjTriple, MorphismMap>& a,
                        const std::map<ObjTriple, MorphismMap>& b) {
  return diff_maps(table, a, b, [](const MorphismMap& x, const MorphismMap& y) {
    return diff_maps("entry", x, y);
  });
}

std::string first_of(std::initializer_list<std::string> ds) {
  for (const auto& d : ds)
    if (!d.empty()) return d;
  return {};
}

}  // namespace

std::string first_difference(const FinCategory& a, const FinCategory& b) {
  std::map<ObjectRef, ObjectRef> oa, ob;
  for (const auto& x : a.objects()) oa[x] = x;
  for (const auto& x : b.objects()) ob[x] = x;
  return first_of({diff_maps("object", oa, ob),
                   diff_maps("morphism", a.morphisms(), b.morphisms()),
                   diff_maps("identity", a.identities(), b.identities()),
                   diff_maps("composite", a.comp_table(), b.comp_table())});
}

std::string first_difference(const BifunctorData& a, const BifunctorData& b) {
  return first_of({diff_maps("on objects", a.on_objects, b.on_objects),
                   diff_maps("on morphisms", a.on_morphisms, b.on_morphisms)});
}

std::string first_difference(const VStructureData& a, const VStructureData& b) {
  std::string d = first_difference(a.base, b.base);
  if (!d.empty()) return "category: " + d;
  if (!(a.v == b.v)) return "base of enrichment differs";
  d = first_difference(a.hom, b.hom);
  if (!d.empty()) return "hom " + d;
  return first_of(
      {diff_maps("composition", a.comp, b.comp),
       diff_maps("φ", a.phi, b.phi,
                 [](const MorphismMap& x, const MorphismMap& y) {
                   return diff_maps("entry", x, y);
                 })});
}

std::string first_difference(const CylinderAssignment& a,
                             const CylinderAssignment& b) {
  return diff_maps("cylinder", a.entries, b.entries,
                   [](const CylinderEntry& x, const CylinderEntry& y) {
                     if (x.obj != y.obj)
                       return "object " + x.obj.str() + " vs " + y.obj.str();
                     if (x.alpha != y.alpha)
                       return "α " + x.alpha.str() + " vs " + y.alpha.str();
                     return diff_maps("φ̄", x.phibar, y.phibar);
                   });
}

std::string first_difference(const VCategoryData& a, const VCategoryData& b) {
  std::map<ObjectRef, ObjectRef> oa, ob;
  for (const auto& x : a.objects) oa[x] = x;
  for (const auto& x : b.objects) ob[x] = x;
  std::string d = diff_maps("object", oa, ob);
  if (!d.empty()) return d;
  if (!(a.v == b.v)) return "base of enrichment differs";
  return first_of({diff_maps("hom", a.hom, b.hom),
                   diff_maps("composition", a.comp, b.comp),
                   diff_maps("unit", a.unit, b.unit)});
}

std::string first_difference(const TensorClosedModuleData& a,
                             const TensorClosedModuleData& b) {
  const VModuleData& ma = a.module;
  const VModuleData& mb = b.module;
  std::string d = first_difference(ma.base, mb.base);
  if (!d.empty()) return "category: " + d;
  if (!(ma.v == mb.v)) return "base of enrichment differs";
  d = first_difference(ma.action, mb.action);
  if (!d.empty()) return "action " + d;
  d = first_of({diff_maps("a", ma.assoc, mb.assoc),
                diff_maps("l", ma.lunit, mb.lunit)});
  if (!d.empty()) return d;
  d = first_difference(a.hom, b.hom);
  if (!d.empty()) return "hom " + d;
  return diff_tables("φ", a.phi, b.phi);
}

std::string first_difference(const ClosedVModuleData& a,
                             const ClosedVModuleData& b) {
  std::string d = first_difference(a.tensor_closed, b.tensor_closed);
  if (!d.empty()) return d;
  d = first_difference(a.cotensor, b.cotensor);
  if (!d.empty()) return "cotensor " + d;
  return diff_tables("ψ", a.psi, b.psi);
}

std::string first_difference(const ClosedBimoduleData& a,
                             const ClosedBimoduleData& b) {
  return first_of({first_difference(a.closed_module, b.closed_module),
                   diff_maps("a^op", a.co_assoc, b.co_assoc),
                   diff_maps("l^op", a.co_lunit, b.co_lunit)});
}

}  // namespace encat
