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

#include "encat/vcat.hpp"

#include <string>

#include "check_util.hpp"
#include "encat/errors.hpp"

namespace encat {

using detail::check_arrow;
using detail::expect_equal;
using detail::fail;
using detail::site;

namespace {

template <class K, class V>
const V& must_find(const std::map<K, V>& table, const K& key, const char* what,
                   const std::string& where) {
  auto it = table.find(key);
  if (it == table.end())
    throw MissingComponent(std::string(what) + " has no entry at " + where);
  return it->second;
}

const ObjectRef& fobj(const VFunctorData& f, const ObjectRef& a) {
  return must_find(f.on_objects, a, "V-functor", a.str());
}

const MorphismRef& fhom(const VFunctorData& f, const ObjectRef& a,
                        const ObjectRef& b) {
  return must_find(f.on_homs, ObjPair{a, b}, "V-functor",
                   pair_name(a.str(), b.str()));
}

}  // namespace

const ObjectRef& VCategoryData::h(const ObjectRef& a,
                                  const ObjectRef& b) const {
  return must_find(hom, ObjPair{a, b}, "hom object",
                   pair_name(a.str(), b.str()));
}

const MorphismRef& VCategoryData::b(const ObjectRef& a, const ObjectRef& b,
                                    const ObjectRef& c) const {
  return must_find(comp, ObjTriple{a, b, c}, "composition",
                   "(" + a.str() + "," + b.str() + "," + c.str() + ")");
}

const MorphismRef& VCategoryData::j(const ObjectRef& a) const {
  return must_find(unit, a, "unit", a.str());
}

const TensorEntry& TensoredData::at(const ObjectRef& k,
                                    const ObjectRef& x) const {
  return must_find(entries, ObjPair{k, x}, "tensor",
                   pair_name(k.str(), x.str()));
}

// ---- checks ---------------------------------------------------------------

Reports check_vcategory(const VCategoryData& vc) {
  const FinCategory& c = vc.vcat();
  const MonoidalData& m = vc.v.monoidal;
  Reports out;
  const auto& obj = vc.objects;
  for (const auto& a : obj)
    for (const auto& b : obj)
      if (!c.has_object(vc.h(a, b)))
        fail(out, "vcat.typing", site(a, b),
             vc.h(a, b).str() + " is not an object of V");
  if (!out.empty()) return out;
  for (const auto& a : obj) {
    check_arrow(out, c, "vcat.typing", site("j", a), vc.j(a), m.unit,
                vc.h(a, a));
    for (const auto& b : obj)
      for (const auto& cc : obj)
        check_arrow(out, c, "vcat.typing", site(a, b, cc), vc.b(a, b, cc),
                    m.t(vc.h(b, cc), vc.h(a, b)), vc.h(a, cc));
  }
  if (!out.empty()) return out;

  for (const auto& a : obj)
    for (const auto& b : obj)
      for (const auto& cc : obj)
        for (const auto& d : obj) {
          MorphismRef top = c.comp(m.t(vc.b(b, cc, d), m.id(vc.h(a, b))),
                                   vc.b(a, b, d));
          MorphismRef bottom = compose_path(
              c, {m.a(vc.h(cc, d), vc.h(b, cc), vc.h(a, b)),
                  m.t(m.id(vc.h(cc, d)), vc.b(a, b, cc)), vc.b(a, cc, d)});
          expect_equal(out, law::kVcatAssoc, site(a, b, cc, d), top, bottom);
        }
  for (const auto& a : obj)
    for (const auto& b : obj) {
      const ObjectRef& hab = vc.h(a, b);
      expect_equal(out, law::kVcatUnit, site("left", a, b),
                   c.comp(m.t(vc.j(b), m.id(hab)), vc.b(a, b, b)), m.l(hab));
      expect_equal(out, law::kVcatUnit, site("right", a, b),
                   c.comp(m.t(m.id(hab), vc.j(a)), vc.b(a, a, b)), m.r(hab));
    }
  return out;
}

Reports check_vfunctor(const VFunctorData& f, const VCategoryData& a,
                       const VCategoryData& b) {
  const FinCategory& c = a.vcat();
  const MonoidalData& m = a.v.monoidal;
  Reports out;
  for (const auto& x : a.objects) {
    if (!b.objects.count(fobj(f, x)))
      fail(out, "vfunctor.typing", site(x),
           fobj(f, x).str() + " is not an object of the target");
  }
  if (!out.empty()) return out;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      check_arrow(out, c, "vfunctor.typing", site(x, y), fhom(f, x, y),
                  a.h(x, y), b.h(fobj(f, x), fobj(f, y)));
  if (!out.empty()) return out;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      for (const auto& z : a.objects)
        expect_equal(out, "vfunctor.composition", site(x, y, z),
                     c.comp(a.b(x, y, z), fhom(f, x, z)),
                     c.comp(m.t(fhom(f, y, z), fhom(f, x, y)),
                            b.b(fobj(f, x), fobj(f, y), fobj(f, z))));
  for (const auto& x : a.objects)
    expect_equal(out, "vfunctor.unit", site(x),
                 c.comp(a.j(x), fhom(f, x, x)), b.j(fobj(f, x)));
  return out;
}

Reports check_vnat(const VNatData& alpha, const VFunctorData& s,
                   const VFunctorData& t, const VCategoryData& a,
                   const VCategoryData& b) {
  const FinCategory& c = a.vcat();
  const MonoidalData& m = a.v.monoidal;
  Reports out;
  for (const auto& x : a.objects) {
    auto it = alpha.components.find(x);
    if (it == alpha.components.end()) {
      fail(out, "vnat.typing", site(x), "missing component");
      continue;
    }
    check_arrow(out, c, "vnat.typing", site(x), it->second, m.unit,
                b.h(fobj(s, x), fobj(t, x)));
  }
  if (!out.empty()) return out;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      const ObjectRef& hxy = a.h(x, y);
      const ObjectRef &sx = fobj(s, x), &sy = fobj(s, y);
      const ObjectRef &tx = fobj(t, x), &ty = fobj(t, y);
      MorphismRef lhs = compose_path(
          c, {m.l_inv(hxy), m.t(alpha.components.at(y), fhom(s, x, y)),
              b.b(sx, sy, ty)});
      MorphismRef rhs = compose_path(
          c, {m.r_inv(hxy), m.t(fhom(t, x, y), alpha.components.at(x)),
              b.b(sx, tx, ty)});
      expect_equal(out, "vnat.naturality", site(x, y), lhs, rhs);
    }
  return out;
}

Reports check_vnat_into_V(const VNatData& alpha, const VFunctorData& s,
                          const VFunctorData& t, const VCategoryData& a) {
  const MonoidalData& m = a.v.monoidal;
  const ClosedData& cl = a.v.closed_or_throw();
  const FinCategory& c = m.base;
  VCategoryData target = self_vcategory(a.v);
  Reports out = check_vnat(alpha, s, t, a, target);
  bool typed = true;
  for (const auto& r : out)
    if (r.law == "vnat.typing") typed = false;
  if (!typed) return out;

  Reports square;
  for (const auto& x : a.objects)
    for (const auto& y : a.objects) {
      const ObjectRef &sx = fobj(s, x), &sy = fobj(s, y);
      const ObjectRef &tx = fobj(t, x), &ty = fobj(t, y);
      MorphismRef ax = varpi_inv(m, cl, alpha.components.at(x), sx, tx);
      MorphismRef ay = varpi_inv(m, cl, alpha.components.at(y), sy, ty);
      expect_equal(square, "vnat.naturality", site(x, y),
                   c.comp(fhom(s, x, y), hom_on_morphisms(m, cl, m.id(sx), ay)),
                   c.comp(fhom(t, x, y), hom_on_morphisms(m, cl, ax, m.id(ty))));
    }
  auto sites = [](const Reports& rs) {
    std::set<std::vector<std::string>> out;
    for (const auto& r : rs) out.insert(r.site);
    return out;
  };
  if (sites(square) != sites(out)) {
    Reports both = out;
    for (auto r : square) {
      r.detail = "square characterization";
      both.push_back(std::move(r));
    }
    throw EngineBug("V-naturality and its square characterization disagree",
                    both);
  }
  return out;
}

Reports check_tensored(const VCategoryData& vc, const TensoredData& td) {
  const MonoidalData& m = vc.v.monoidal;
  const ClosedData& cl = vc.v.closed_or_throw();
  const FinCategory& c = m.base;
  Reports out;
  for (const auto& k : c.objects())
    for (const auto& x : vc.objects) {
      const TensorEntry& e = td.at(k, x);
      if (!vc.objects.count(e.obj)) {
        fail(out, "tensored.typing", site(k, x),
             e.obj.str() + " is not an object");
        continue;
      }
      for (const auto& y : vc.objects) {
        auto it = e.phibar.find(y);
        if (it == e.phibar.end()) {
          fail(out, "tensored.typing", site(k, x, y), "missing component");
          continue;
        }
        if (!check_arrow(out, c, "tensored.typing", site(k, x, y), it->second,
                         vc.h(e.obj, y), cl.h(k, vc.h(x, y))))
          continue;
        if (!morphism_inverse(c, it->second))
          fail(out, "tensored.iso", site(k, x, y),
               it->second.str() + " is not invertible");
      }
    }
  if (!out.empty()) return out;

  VCategoryData self = self_vcategory(vc.v);
  std::map<ObjectRef, VFunctorData> homs;
  for (const auto& x : vc.objects) homs[x] = hom_vfunctor(vc, x);
  for (const auto& k : c.objects()) {
    const VFunctorData hom_k = hom_vfunctor(self, k);
    for (const auto& x : vc.objects) {
      const TensorEntry& e = td.at(k, x);
      const VFunctorData& hom_kx = homs.at(e.obj);
      const VFunctorData target = compose_vfunctors(vc, homs.at(x), hom_k);
      Reports direct;
      for (const auto& y : vc.objects)
        for (const auto& z : vc.objects) {
          const ObjectRef& p = cl.h(k, vc.h(x, y));
          const ObjectRef& q = cl.h(k, vc.h(x, z));
          MorphismRef delta = transpose_pi_inv(m, cl, fhom(target, y, z), p, q);
          MorphismRef lhs =
              c.comp(m.t(m.id(vc.h(y, z)), e.phibar.at(y)), delta);
          MorphismRef rhs = c.comp(vc.b(e.obj, y, z), e.phibar.at(z));
          expect_equal(direct, "tensored.vnatural", site(k, x, y, z), lhs, rhs);
        }
      VNatData alpha;
      for (const auto& y : vc.objects)
        alpha.components[y] = varpi(m, cl, e.phibar.at(y));
      Reports oracle = check_vnat(alpha, hom_kx, target, vc, self);
      if (direct.empty() != oracle.empty()) {
        Reports both = direct;
        detail::append(both, oracle);
        throw EngineBug("V-naturality of φ̄ disagrees with its V-natural "
                        "transformation form",
                        both);
      }
      detail::append(out, std::move(direct));
    }
  }
  return out;
}

// ---- constructions --------------------------------------------------------

VFunctorData hom_vfunctor(const VCategoryData& vc, const ObjectRef& a) {
  const MonoidalData& m = vc.v.monoidal;
  const ClosedData& cl = vc.v.closed_or_throw();
  VFunctorData f;
  for (const auto& b : vc.objects) f.on_objects[b] = vc.h(a, b);
  for (const auto& b : vc.objects)
    for (const auto& c : vc.objects)
      f.on_homs[{b, c}] =
          transpose_pi(m, cl, vc.b(a, b, c), vc.h(b, c), vc.h(a, b));
  return f;
}

VFunctorData compose_vfunctors(const VCategoryData& a, const VFunctorData& f,
                               const VFunctorData& g) {
  const FinCategory& c = a.vcat();
  VFunctorData h;
  for (const auto& x : a.objects) h.on_objects[x] = fobj(g, fobj(f, x));
  for (const auto& x : a.objects)
    for (const auto& y : a.objects)
      h.on_homs[{x, y}] =
          c.comp(fhom(f, x, y), fhom(g, fobj(f, x), fobj(f, y)));
  return h;
}

VFunctorData identity_vfunctor(const VCategoryData& vc) {
  const FinCategory& c = vc.vcat();
  VFunctorData f;
  for (const auto& x : vc.objects) f.on_objects[x] = x;
  for (const auto& x : vc.objects)
    for (const auto& y : vc.objects)
      f.on_homs[{x, y}] = c.identity(vc.h(x, y));
  return f;
}

VCategoryData self_vcategory(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  const ClosedData& cl = v.closed_or_throw();
  VCategoryData vc;
  vc.objects = m.base.objects();
  vc.v = v;
  for (const auto& x : vc.objects)
    for (const auto& y : vc.objects) vc.hom[{x, y}] = cl.h(x, y);
  for (const auto& x : vc.objects)
    for (const auto& y : vc.objects)
      for (const auto& z : vc.objects)
        vc.comp[{x, y, z}] = internal_composition_b(m, cl, x, y, z);
  for (const auto& x : vc.objects) vc.unit[x] = varpi(m, cl, m.id(x));
  return vc;
}

VCategoryData opposite_vcategory(const VCategoryData& vc,
                                 const SymmetryData& sym) {
  const FinCategory& c = vc.vcat();
  VCategoryData op;
  op.objects = vc.objects;
  op.v = vc.v;
  for (const auto& [ab, h] : vc.hom) op.hom[{ab.second, ab.first}] = h;
  for (const auto& a : vc.objects)
    for (const auto& b : vc.objects)
      for (const auto& cc : vc.objects)
        op.comp[{a, b, cc}] =
            c.comp(sym.c(vc.h(cc, b), vc.h(b, a)), vc.b(cc, b, a));
  op.unit = vc.unit;
  return op;
}

MorphismRef underlying_name(const ObjectRef& a, const ObjectRef& b,
                            const MorphismRef& w, bool is_unit) {
  if (is_unit) return identity_name(a);
  return MorphismRef("u(" + a.str() + "," + b.str() + ";" + w.str() + ")");
}

std::pair<FinCategory, VStructureData> underlying_category(
    const VCategoryData& vc) {
  const FinCategory& c = vc.vcat();
  const MonoidalData& m = vc.v.monoidal;

  struct Elem {
    ObjectRef src, dst;
    MorphismRef w;
  };
  std::map<MorphismRef, Elem> elems;
  std::map<MorphismRef, Arrow> morphisms;
  std::map<ObjectRef, MorphismRef> identity;
  auto name_of = [&](const ObjectRef& a, const ObjectRef& b,
                     const MorphismRef& w) {
    return underlying_name(a, b, w, a == b && w == vc.j(a));
  };
  for (const auto& a : vc.objects)
    for (const auto& b : vc.objects)
      for (const auto& w : c.hom(m.unit, vc.h(a, b))) {
        MorphismRef f = name_of(a, b, w);
        elems[f] = Elem{a, b, w};
        morphisms[f] = Arrow{a, b};
        if (a == b && w == vc.j(a)) identity[a] = f;
      }
  const MorphismRef l_i_inv = m.l_inv(m.unit);
  std::map<MorPair, MorphismRef> comp;
  for (const auto& [f, ef] : elems)
    for (const auto& [g, eg] : elems) {
      if (ef.dst != eg.src) continue;
      MorphismRef w = compose_path(
          c, {l_i_inv, m.t(eg.w, ef.w), vc.b(ef.src, ef.dst, eg.dst)});
      comp[{f, g}] = name_of(ef.src, eg.dst, w);
    }
  FinCategory s(vc.objects, morphisms, identity, comp);

  VStructureData vs;
  vs.base = s;
  vs.v = vc.v;
  vs.hom.on_objects = vc.hom;
  vs.comp = vc.comp;
  for (const auto& [f, ef] : elems) vs.phi[{ef.src, ef.dst}][f] = ef.w;
  for (const auto& a : vc.objects)
    for (const auto& b : vc.objects)
      vs.phi.try_emplace({a, b});
  // S̄(f,g) = S̄(f,B')∘S̄(A,g) for f: A' -> A and g: B -> B'.
  for (const auto& [f, ef] : elems)
    for (const auto& [g, eg] : elems) {
      const ObjectRef& hab = vc.h(ef.dst, eg.src);
      const ObjectRef& hab2 = vc.h(ef.dst, eg.dst);
      MorphismRef post = compose_path(
          c, {m.l_inv(hab), m.t(eg.w, m.id(hab)),
              vc.b(ef.dst, eg.src, eg.dst)});
      MorphismRef pre = compose_path(
          c, {m.r_inv(hab2), m.t(m.id(hab2), ef.w),
              vc.b(ef.src, ef.dst, eg.dst)});
      vs.hom.on_morphisms[{f, g}] = c.comp(post, pre);
    }
  return {s, vs};
}

VCategoryData associated_vcategory(const VStructureData& vs) {
  VCategoryData vc;
  vc.objects = vs.base.objects();
  vc.v = vs.v;
  vc.hom = vs.hom.on_objects;
  vc.comp = vs.comp;
  for (const auto& x : vc.objects)
    vc.unit[x] = vs.phi_of(vs.base.identity(x));
  return vc;
}

VStructureData canonically_renamed(const VStructureData& vs) {
  const FinCategory& s = vs.base;
  std::map<MorphismRef, MorphismRef> rename;
  for (const auto& [f, af] : s.morphisms())
    rename[f] = underlying_name(af.src, af.dst, vs.phi_of(f),
                                s.is_identity(f));
  std::map<MorphismRef, Arrow> morphisms;
  for (const auto& [f, af] : s.morphisms()) morphisms[rename.at(f)] = af;
  std::map<ObjectRef, MorphismRef> identity;
  for (const auto& [x, f] : s.identities()) identity[x] = rename.at(f);
  std::map<MorPair, MorphismRef> comp;
  for (const auto& [fg, h] : s.comp_table())
    comp[{rename.at(fg.first), rename.at(fg.second)}] = rename.at(h);

  VStructureData out;
  out.base = FinCategory(s.objects(), morphisms, identity, comp);
  out.v = vs.v;
  out.hom.on_objects = vs.hom.on_objects;
  for (const auto& [fg, h] : vs.hom.on_morphisms)
    out.hom.on_morphisms[{rename.at(fg.first), rename.at(fg.second)}] = h;
  out.comp = vs.comp;
  for (const auto& [xy, table] : vs.phi) {
    MorphismMap& t = out.phi[xy];
    for (const auto& [f, w] : table) t[rename.at(f)] = w;
  }
  return out;
}

}  // namespace encat
