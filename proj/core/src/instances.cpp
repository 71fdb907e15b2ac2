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

#include "encat/instances.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "encat/errors.hpp"

namespace encat {

MorphismRef posetal_morphism(const ObjectRef& a, const ObjectRef& b) {
  if (a == b) return identity_name(a);
  if (a.str().size() == 1 && b.str().size() == 1)
    return MorphismRef("m" + a.str() + b.str());
  return MorphismRef("m" + a.str() + "_" + b.str());
}

FinCategory posetal_category(
    const std::vector<ObjectRef>& objects,
    const std::function<bool(const ObjectRef&, const ObjectRef&)>& leq) {
  std::set<ObjectRef> objs(objects.begin(), objects.end());
  std::map<MorphismRef, Arrow> mors;
  std::map<ObjectRef, MorphismRef> ids;
  std::map<MorPair, MorphismRef> comp;
  for (const auto& a : objs) {
    ids[a] = identity_name(a);
    for (const auto& b : objs)
      if (leq(a, b)) mors[posetal_morphism(a, b)] = Arrow{a, b};
  }
  for (const auto& a : objs)
    for (const auto& b : objs) {
      if (!leq(a, b)) continue;
      for (const auto& c : objs)
        if (leq(b, c))
          comp[{posetal_morphism(a, b), posetal_morphism(b, c)}] =
              posetal_morphism(a, c);
    }
  return FinCategory(std::move(objs), std::move(mors), std::move(ids),
                     std::move(comp));
}

MorphismRef unique_morphism(const FinCategory& c, const ObjectRef& a,
                            const ObjectRef& b) {
  const auto& h = c.hom(a, b);
  if (h.size() != 1)
    throw WitnessError(h.size(), "expected exactly one morphism " + a.str() +
                                     " -> " + b.str());
  return h.front();
}

namespace {

using ObjFn2 = std::function<ObjectRef(const ObjectRef&, const ObjectRef&)>;

// A bifunctor between thin categories is determined by its object map.
BifunctorData thin_bifunctor(const FinCategory& a, const FinCategory& b,
                             const FinCategory& c, const ObjFn2& on_obj) {
  BifunctorData f;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) f.on_objects[{x, y}] = on_obj(x, y);
  for (const auto& [u, au] : a.morphisms())
    for (const auto& [v, av] : b.morphisms())
      f.on_morphisms[{u, v}] = unique_morphism(
          c, on_obj(au.src, av.src), on_obj(au.dst, av.dst));
  return f;
}

// Closed symmetric structure on a thin category; every structure morphism is
// the unique one of its type.
BaseV thin_base(const FinCategory& cat, const ObjFn2& tensor,
                const ObjectRef& unit, const ObjFn2& hom) {
  BaseV v;
  MonoidalData& m = v.monoidal;
  m.base = cat;
  m.tensor = thin_bifunctor(cat, cat, cat, tensor);
  m.unit = unit;
  SymmetryData sym;
  ClosedData cl;
  for (const auto& x : cat.objects()) {
    m.lunit[x] = unique_morphism(cat, tensor(unit, x), x);
    m.runit[x] = unique_morphism(cat, tensor(x, unit), x);
    for (const auto& y : cat.objects()) {
      sym.braid[{x, y}] = unique_morphism(cat, tensor(x, y), tensor(y, x));
      cl.hom[{x, y}] = hom(x, y);
      cl.eval[{x, y}] = unique_morphism(cat, tensor(hom(x, y), x), y);
      for (const auto& z : cat.objects())
        m.assoc[{x, y, z}] = unique_morphism(cat, tensor(tensor(x, y), z),
                                             tensor(x, tensor(y, z)));
    }
  }
  v.symmetry = std::move(sym);
  v.closed = std::move(cl);
  return v;
}

int as_int(const ObjectRef& x) { return std::stoi(x.str()); }

}  // namespace

BaseV build_bool() {
  std::vector<ObjectRef> objs{ObjectRef("0"), ObjectRef("1")};
  FinCategory cat = posetal_category(
      objs, [](const ObjectRef& a, const ObjectRef& b) { return a <= b; });
  return thin_base(
      cat,
      [](const ObjectRef& a, const ObjectRef& b) {
        return ObjectRef(a.str() == "1" && b.str() == "1" ? "1" : "0");
      },
      ObjectRef("1"),
      [](const ObjectRef& a, const ObjectRef& b) {
        return ObjectRef(a.str() == "1" && b.str() == "0" ? "0" : "1");
      });
}

BaseV build_trop(int n) {
  if (n < 2) throw ParameterError("TROP(n) needs n >= 2, got " + std::to_string(n));
  std::vector<ObjectRef> objs;
  for (int i = 0; i < n; ++i) objs.emplace_back(std::to_string(i));
  FinCategory cat =
      posetal_category(objs, [](const ObjectRef& a, const ObjectRef& b) {
        return as_int(a) >= as_int(b);
      });
  return thin_base(
      cat,
      [n](const ObjectRef& a, const ObjectRef& b) {
        return ObjectRef(std::to_string(std::min(as_int(a) + as_int(b), n - 1)));
      },
      ObjectRef("0"),
      [](const ObjectRef& a, const ObjectRef& b) {
        return ObjectRef(std::to_string(std::max(as_int(b) - as_int(a), 0)));
      });
}

BaseV build_cyc(int n) {
  if (n < 1) throw ParameterError("CYC(n) needs n >= 1, got " + std::to_string(n));
  const ObjectRef star("*");
  const MorphismRef zero("0");
  auto mor = [](int i) { return MorphismRef(std::to_string(i)); };
  std::map<MorphismRef, Arrow> mors;
  std::map<MorPair, MorphismRef> comp;
  for (int i = 0; i < n; ++i) {
    mors[mor(i)] = Arrow{star, star};
    for (int j = 0; j < n; ++j) comp[{mor(i), mor(j)}] = mor((i + j) % n);
  }
  BaseV v;
  MonoidalData& m = v.monoidal;
  m.base = FinCategory({star}, std::move(mors), {{star, zero}}, comp);
  m.tensor.on_objects[{star, star}] = star;
  m.tensor.on_morphisms = comp;
  m.unit = star;
  m.assoc[{star, star, star}] = zero;
  m.lunit[star] = zero;
  m.runit[star] = zero;
  v.symmetry = SymmetryData{{{{star, star}, zero}}};
  v.closed = ClosedData{{{{star, star}, star}}, {{{star, star}, zero}}};
  return v;
}

PosetSpec poset_diamond() {
  const ObjectRef bot("bot"), x("x"), y("y"), top("top");
  return PosetSpec{{bot, x, y, top}, {{bot, x}, {bot, y}, {x, top}, {y, top}}};
}

ClosedVModuleData build_poset_module(const PosetSpec& p) {
  std::set<ObjectRef> elems(p.elements.begin(), p.elements.end());
  if (elems.size() != p.elements.size())
    throw ParameterError("poset has repeated elements");
  std::set<std::pair<ObjectRef, ObjectRef>> le;
  for (const auto& a : elems) le.insert({a, a});
  for (const auto& [a, b] : p.leq) {
    if (!elems.count(a) || !elems.count(b))
      throw ParameterError("poset relation mentions an unknown element");
    le.insert({a, b});
  }
  // Transitive closure; the element count is tiny.
  for (const auto& k : elems)
    for (const auto& i : elems)
      for (const auto& j : elems)
        if (le.count({i, k}) && le.count({k, j})) le.insert({i, j});
  for (const auto& [a, b] : le)
    if (a != b && le.count({b, a}))
      throw ParameterError("poset relation is not antisymmetric at " + a.str() +
                           ", " + b.str());
  auto leq = [&le](const ObjectRef& a, const ObjectRef& b) {
    return le.count({a, b}) != 0;
  };
  std::optional<ObjectRef> bot, top;
  for (const auto& a : elems) {
    if (std::all_of(elems.begin(), elems.end(),
                    [&](const ObjectRef& b) { return leq(a, b); }))
      bot = a;
    if (std::all_of(elems.begin(), elems.end(),
                    [&](const ObjectRef& b) { return leq(b, a); }))
      top = a;
  }
  if (!bot || !top) throw ParameterError("poset needs a bottom and a top");

  const BaseV v = build_bool();
  const FinCategory& vc = v.monoidal.base;
  const FinCategory s = posetal_category(p.elements, leq);
  const FinCategory sop = opposite_category(s);
  const ObjectRef one("1");
  auto act = [&](const ObjectRef& k, const ObjectRef& x) {
    return k == one ? x : *bot;
  };
  auto cot = [&](const ObjectRef& k, const ObjectRef& x) {
    return k == one ? x : *top;
  };
  auto hom = [&](const ObjectRef& x, const ObjectRef& y) {
    return ObjectRef(leq(x, y) ? "1" : "0");
  };

  ClosedVModuleData cm;
  TensorClosedModuleData& tc = cm.tensor_closed;
  VModuleData& m = tc.module;
  m.v = v;
  m.base = s;
  m.action = thin_bifunctor(vc, s, s, act);
  tc.hom = thin_bifunctor(sop, s, vc, hom);
  cm.cotensor = thin_bifunctor(vc, sop, sop, cot);
  const MonoidalData& mv = v.monoidal;
  for (const auto& x : s.objects()) {
    m.lunit[x] = unique_morphism(s, act(mv.unit, x), x);
    for (const auto& k : vc.objects()) {
      for (const auto& l : vc.objects())
        m.assoc[{k, l, x}] =
            unique_morphism(s, act(mv.t(k, l), x), act(k, act(l, x)));
      for (const auto& y : s.objects()) {
        // Both sides have at most one element; φ and ψ pair them up.
        const auto& src = s.hom(act(k, x), y);
        const auto& dst = vc.hom(k, hom(x, y));
        MorphismMap& phi = tc.phi[{k, x, y}];
        if (!src.empty() && !dst.empty()) phi[src.front()] = dst.front();
        const auto& psrc = s.hom(y, cot(k, x));
        const auto& pdst = vc.hom(k, hom(y, x));
        MorphismMap& psi = cm.psi[{k, x, y}];
        if (!psrc.empty() && !pdst.empty()) psi[psrc.front()] = pdst.front();
      }
    }
  }
  return cm;
}

ClosedVModuleData module_self(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  const ClosedData& cl = v.closed_or_throw();
  const SymmetryData& sym = v.symmetry_or_throw();
  const FinCategory& vc = m.base;

  ClosedVModuleData cm;
  TensorClosedModuleData& tc = cm.tensor_closed;
  tc.module = VModuleData{v, vc, m.tensor, m.assoc, m.lunit};
  tc.hom = hom_bifunctor(m, cl);
  for (const auto& [key, h] : tc.hom.on_objects)
    cm.cotensor.on_objects[key] = h;
  for (const auto& [u, au] : vc.morphisms())
    for (const auto& [w, aw] : vc.morphisms())
      cm.cotensor.on_morphisms[{u, w}] = hom_on_morphisms(m, cl, u, w);
  for (const auto& k : vc.objects())
    for (const auto& x : vc.objects())
      for (const auto& y : vc.objects()) {
        MorphismMap& phi = tc.phi[{k, x, y}];
        for (const auto& f : vc.hom(m.t(k, x), y))
          phi[f] = transpose_pi(m, cl, f, k, x);
        MorphismMap& psi = cm.psi[{k, x, y}];
        for (const auto& g : vc.hom(y, cl.h(k, x))) {
          MorphismRef flat =
              vc.comp(sym.c(k, y), transpose_pi_inv(m, cl, g, k, x));
          psi[g] = transpose_pi(m, cl, flat, k, y);
        }
      }
  return cm;
}

}  // namespace encat
