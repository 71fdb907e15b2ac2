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

#include "encat/vstruct.hpp"

#include <optional>
#include <set>
#include <string>

#include "check_util.hpp"
#include "encat/errors.hpp"

namespace encat {

using detail::append;
using detail::check_arrow;
using detail::expect_equal;
using detail::fail;
using detail::fail_count;
using detail::relabel;
using detail::site;

namespace {

std::string triple_str(const ObjectRef& x, const ObjectRef& y,
                       const ObjectRef& z) {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

const MorphismRef& phibar_at(const std::map<ObjectRef, MorphismRef>& table,
                             const ObjectRef& y, const char* what,
                             const ObjectRef& k, const ObjectRef& x) {
  auto it = table.find(y);
  if (it == table.end())
    throw MissingComponent(std::string(what) + " has no component at " +
                           triple_str(k, x, y));
  return it->second;
}

// φ-table bijectivity: keys are exactly Hom_S(X,Y), values enumerate
// Hom_V(I, S̄(X,Y)) without repetition.
void check_bijection_table(Reports& out, std::string_view law,
                           const std::vector<std::string>& where,
                           const MorphismMap& table,
                           const std::vector<MorphismRef>& domain,
                           const std::vector<MorphismRef>& codomain) {
  std::set<MorphismRef> dom(domain.begin(), domain.end());
  std::set<MorphismRef> cod(codomain.begin(), codomain.end());
  std::set<MorphismRef> image;
  bool ok = table.size() == dom.size();
  for (const auto& [f, g] : table) {
    if (!dom.count(f) || !cod.count(g) || !image.insert(g).second) ok = false;
  }
  if (image.size() != cod.size()) ok = false;
  if (!ok)
    fail_count(out, law, where, image.size(),
               "table is not a bijection between " +
                   std::to_string(dom.size()) + " and " +
                   std::to_string(cod.size()) + " morphisms");
}

// Typing and invertibility of a family of V-isos indexed by Y.
void check_iso_family(Reports& out, const std::string& prefix,
                      const FinCategory& vc,
                      const std::map<ObjectRef, MorphismRef>& family,
                      const ObjectRef& k, const ObjectRef& x,
                      const ObjectRef& y, const ObjectRef& src,
                      const ObjectRef& dst) {
  auto it = family.find(y);
  if (it == family.end()) {
    fail(out, prefix + ".typing", site(k, x, y), "missing component");
    return;
  }
  if (!check_arrow(out, vc, prefix + ".typing", site(k, x, y), it->second, src,
                   dst))
    return;
  if (!morphism_inverse(vc, it->second))
    fail(out, prefix + ".iso", site(k, x, y),
         it->second.str() + " is not invertible");
}

}  // namespace

const MorphismRef& VStructureData::b(const ObjectRef& x, const ObjectRef& y,
                                     const ObjectRef& z) const {
  auto it = comp.find({x, y, z});
  if (it == comp.end())
    throw MissingComponent("internal composition has no component at " +
                           triple_str(x, y, z));
  return it->second;
}

const MorphismRef& VStructureData::phi_of(const MorphismRef& f) const {
  const Arrow& ar = base.arrow(f);
  auto it = phi.find({ar.src, ar.dst});
  if (it == phi.end())
    throw MissingComponent("φ has no table at " +
                           pair_name(ar.src.str(), ar.dst.str()));
  auto jt = it->second.find(f);
  if (jt == it->second.end())
    throw MissingComponent("φ has no entry for " + f.str());
  return jt->second;
}

const MorphismRef& VStructureData::phi_inv(const ObjectRef& x,
                                           const ObjectRef& y,
                                           const MorphismRef& g) const {
  auto it = phi.find({x, y});
  if (it == phi.end())
    throw MissingComponent("φ has no table at " +
                           pair_name(x.str(), y.str()));
  for (const auto& [f, h] : it->second)
    if (h == g) return f;
  throw WitnessError(0, "no preimage of " + g.str() + " under φ at " +
                            pair_name(x.str(), y.str()));
}

const CylinderEntry& CylinderAssignment::at(const ObjectRef& k,
                                            const ObjectRef& x) const {
  auto it = entries.find({k, x});
  if (it == entries.end())
    throw MissingComponent("no cylinder at " + pair_name(k.str(), x.str()));
  return it->second;
}

const MorphismRef& CylinderAssignment::phibar(const ObjectRef& k,
                                              const ObjectRef& x,
                                              const ObjectRef& y) const {
  return phibar_at(at(k, x).phibar, y, "φ̄", k, x);
}

const PathEntry& PathAssignment::at(const ObjectRef& k,
                                    const ObjectRef& x) const {
  auto it = entries.find({k, x});
  if (it == entries.end())
    throw MissingComponent("no path object at " + pair_name(k.str(), x.str()));
  return it->second;
}

// ---- V-structure ------------------------------------------------------------

Reports check_vstructure(const VStructureData& vs) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  Reports out = validate_category(s);
  if (!out.empty()) return out;
  append(out, relabel(check_bifunctor(vs.hom, opposite_category(s), s, vc),
                      "vstructure.hom-functor"));
  if (!out.empty()) return out;

  const auto& obj = s.objects();
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        check_arrow(out, vc, "vstructure.typing", site(x, y, z),
                    vs.b(x, y, z), m.t(vs.h(y, z), vs.h(x, y)), vs.h(x, z));
  for (const auto& x : obj)
    for (const auto& y : obj) {
      auto it = vs.phi.find({x, y});
      if (it == vs.phi.end())
        throw MissingComponent("φ has no table at " +
                               pair_name(x.str(), y.str()));
      check_bijection_table(out, "vstructure.phi-bijection", site(x, y),
                            it->second, s.hom(x, y), vc.hom(m.unit, vs.h(x, y)));
    }
  if (!out.empty()) return out;

  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        for (const auto& w : obj) {
          MorphismRef top = vc.comp(m.t(vs.b(y, z, w), m.id(vs.h(x, y))),
                                    vs.b(x, y, w));
          MorphismRef bottom = compose_path(
              vc, {m.a(vs.h(z, w), vs.h(y, z), vs.h(x, y)),
                   m.t(m.id(vs.h(z, w)), vs.b(x, y, z)), vs.b(x, z, w)});
          expect_equal(out, law::kVsAssoc, site(x, y, z, w), top, bottom);
        }

  for (const auto& [f, af] : s.morphisms())
    for (const auto& z : obj) {
      // f: X -> Y acting on the right of S̄(Y,Z).
      const ObjectRef& hyz = vs.h(af.dst, z);
      MorphismRef rhs =
          compose_path(vc, {m.r_inv(hyz), m.t(m.id(hyz), vs.phi_of(f)),
                            vs.b(af.src, af.dst, z)});
      expect_equal(out, law::kVsRightAction, site(f, z),
                   vs.h(f, s.identity(z)), rhs);
    }
  for (const auto& [g, ag] : s.morphisms())
    for (const auto& x : obj) {
      // g: Y -> Z acting on the left of S̄(X,Y).
      const ObjectRef& hxy = vs.h(x, ag.src);
      MorphismRef rhs =
          compose_path(vc, {m.l_inv(hxy), m.t(vs.phi_of(g), m.id(hxy)),
                            vs.b(x, ag.src, ag.dst)});
      expect_equal(out, law::kVsLeftAction, site(x, g),
                   vs.h(s.identity(x), g), rhs);
    }

  for (const auto& [f, af] : s.morphisms()) {
    for (const auto& [h, ah] : s.morphisms()) {
      if (ah.dst == af.src)
        expect_equal(out, "vstructure.phi-natural", site(h, f),
                     vs.phi_of(s.comp(h, f)),
                     vc.comp(vs.phi_of(f), vs.h(h, s.identity(af.dst))));
      if (ah.src == af.dst)
        expect_equal(out, "vstructure.phi-natural", site(f, h),
                     vs.phi_of(s.comp(f, h)),
                     vc.comp(vs.phi_of(f), vs.h(s.identity(af.src), h)));
    }
  }
  if (!out.empty()) return out;
  detail::raise_if_engine_bug(check_vstructure_derived(vs), "check_vstructure");
  return out;
}

Reports check_vstructure_derived(const VStructureData& vs) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  Reports out;
  const MorphismRef l_i_inv = m.l_inv(m.unit);
  for (const auto& [f, af] : s.morphisms())
    for (const auto& g : s.morphisms()) {
      if (g.second.src != af.dst) continue;
      MorphismRef rhs = compose_path(
          vc, {l_i_inv, m.t(vs.phi_of(g.first), vs.phi_of(f)),
               vs.b(af.src, af.dst, g.second.dst)});
      expect_equal(out, "derived.phi-composition", site(f, g.first),
                   vs.phi_of(s.comp(f, g.first)), rhs);
    }
  if (vs.v.closed) {
    const ClosedData& cl = *vs.v.closed;
    for (const auto& [g, ag] : s.morphisms())
      for (const auto& a : s.objects()) {
        // ϖ(S̄(A,g)) = S̄(A,-)_{B,C} after φ(g).
        MorphismRef hom_a = transpose_pi(m, cl, vs.b(a, ag.src, ag.dst),
                                         vs.h(ag.src, ag.dst),
                                         vs.h(a, ag.src));
        expect_equal(out, "derived.varpi-action", site(a, g),
                     varpi(m, cl, vs.h(s.identity(a), g)),
                     vc.comp(vs.phi_of(g), hom_a));
      }
  }
  return out;
}

// ---- cylinders and paths ----------------------------------------------------

namespace {

Reports cylinder_axioms(const VStructureData& vs, const CylinderAssignment& cyl) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();
  Reports out;
  for (const auto& k : vc.objects())
    for (const auto& x : s.objects()) {
      const CylinderEntry& e = cyl.at(k, x);
      if (!s.has_object(e.obj)) {
        fail(out, "cylinder.typing", site(k, x),
             e.obj.str() + " is not an object");
        continue;
      }
      check_arrow(out, vc, "cylinder.typing", site(k, x), e.alpha, k,
                  vs.h(x, e.obj));
      for (const auto& y : s.objects())
        check_iso_family(out, "cylinder", vc, e.phibar, k, x, y,
                         vs.h(e.obj, y), cl.h(k, vs.h(x, y)));
    }
  if (!out.empty()) return out;
  for (const auto& k : vc.objects())
    for (const auto& x : s.objects()) {
      const CylinderEntry& e = cyl.at(k, x);
      for (const auto& y : s.objects()) {
        MorphismRef lhs = vc.comp(m.t(m.id(vs.h(e.obj, y)), e.alpha),
                                  vs.b(x, e.obj, y));
        MorphismRef rhs = vc.comp(m.t(e.phibar.at(y), m.id(k)),
                                  cl.ev(k, vs.h(x, y)));
        expect_equal(out, law::kCylinder, site(k, x, y), lhs, rhs);
      }
    }
  return out;
}

}  // namespace

Reports check_cylinder(const VStructureData& vs,
                       const CylinderAssignment& cyl) {
  Reports out = cylinder_axioms(vs, cyl);
  if (!out.empty()) return out;
  detail::raise_if_engine_bug(check_cylinder_derived(vs, cyl),
                              "check_cylinder");
  return out;
}

Reports check_cylinder_derived(const VStructureData& vs,
                               const CylinderAssignment& cyl) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();
  Reports out;
  for (const auto& k : vc.objects())
    for (const auto& x : s.objects()) {
      const CylinderEntry& e = cyl.at(k, x);
      for (const auto& y : s.objects())
        for (const auto& f : s.hom(e.obj, y)) {
          MorphismRef lhs = vc.comp(vs.phi_of(f), e.phibar.at(y));
          MorphismRef rhs =
              varpi(m, cl, vc.comp(e.alpha, vs.h(s.identity(x), f)));
          expect_equal(out, "derived.cylinder-transport", site(k, x, f), lhs,
                       rhs);
        }
    }
  return out;
}

Reports check_path(const VStructureData& vs, const SymmetryData& sym,
                   const PathAssignment& pth) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();
  Reports out;
  for (const auto& k : vc.objects())
    for (const auto& x : s.objects()) {
      const PathEntry& e = pth.at(k, x);
      if (!s.has_object(e.obj)) {
        fail(out, "path.typing", site(k, x), e.obj.str() + " is not an object");
        continue;
      }
      check_arrow(out, vc, "path.typing", site(k, x), e.beta, k,
                  vs.h(e.obj, x));
      for (const auto& y : s.objects())
        check_iso_family(out, "path", vc, e.psibar, k, x, y, vs.h(y, e.obj),
                         cl.h(k, vs.h(y, x)));
    }
  if (out.empty()) {
    for (const auto& k : vc.objects())
      for (const auto& x : s.objects()) {
        const PathEntry& e = pth.at(k, x);
        for (const auto& y : s.objects()) {
          const ObjectRef& hy = vs.h(y, e.obj);
          MorphismRef lhs = compose_path(
              vc, {m.t(m.id(hy), e.beta), sym.c(hy, vs.h(e.obj, x)),
                   vs.b(y, e.obj, x)});
          MorphismRef rhs =
              vc.comp(m.t(e.psibar.at(y), m.id(k)), cl.ev(k, vs.h(y, x)));
          expect_equal(out, law::kPath, site(k, x, y), lhs, rhs);
        }
      }
  }

  // Oracle: the same data read as a cylinder of the opposite V-structure.
  // The composites coincide literally, so the reports must agree after
  // renaming the laws.
  Reports dual = cylinder_axioms(opposite_vstructure(vs, sym), dualize(pth));
  for (auto& r : dual) {
    if (r.law == law::kCylinder)
      r.law = std::string(law::kPath);
    else if (r.law.rfind("cylinder.", 0) == 0)
      r.law = "path." + r.law.substr(9);
  }
  if (dual != out) {
    Reports both = out;
    for (auto& r : dual) {
      r.detail = "opposite-side: " + r.detail;
      both.push_back(std::move(r));
    }
    throw EngineBug(
        "check_path disagrees with check_cylinder on the opposite V-structure",
        both);
  }
  if (out.empty())
    detail::raise_if_engine_bug(
        check_cylinder_derived(opposite_vstructure(vs, sym), dualize(pth)),
        "check_path");
  return out;
}

// ---- constructions ------------------------------------------------------------

VStructureData self_vstructure(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  const ClosedData& cl = v.closed_or_throw();
  VStructureData vs;
  vs.base = m.base;
  vs.v = v;
  vs.hom = hom_bifunctor(m, cl);
  const auto& obj = m.base.objects();
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        vs.comp[{x, y, z}] = internal_composition_b(m, cl, x, y, z);
  for (const auto& x : obj)
    for (const auto& y : obj) {
      MorphismMap& t = vs.phi[{x, y}];
      for (const auto& f : m.base.hom(x, y)) t[f] = varpi(m, cl, f);
    }
  return vs;
}

CylinderAssignment self_cylinder(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  const ClosedData& cl = v.closed_or_throw();
  CylinderAssignment cyl;
  const auto& obj = m.base.objects();
  for (const auto& k : obj)
    for (const auto& l : obj) {
      CylinderEntry e;
      e.obj = m.t(k, l);
      e.alpha = transpose_pi(m, cl, m.id(e.obj), k, l);
      for (const auto& n : obj) e.phibar[n] = internal_pi_bar(m, cl, k, l, n);
      cyl.entries[{k, l}] = std::move(e);
    }
  return cyl;
}

PathAssignment self_path(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  const ClosedData& cl = v.closed_or_throw();
  const SymmetryData& sym = v.symmetry_or_throw();
  const FinCategory& c = m.base;
  PathAssignment pth;
  const auto& obj = c.objects();
  for (const auto& k : obj)
    for (const auto& l : obj) {
      PathEntry e;
      e.obj = cl.h(k, l);
      e.beta = transpose_pi(m, cl, c.comp(sym.c(k, e.obj), cl.ev(k, l)), k,
                            e.obj);
      for (const auto& n : obj) {
        MorphismRef pb_inv = inverse_or_throw(c, internal_pi_bar(m, cl, n, k, l));
        e.psibar[n] = compose_path(
            c, {pb_inv, hom_on_morphisms(m, cl, sym.c(k, n), m.id(l)),
                internal_pi_bar(m, cl, k, n, l)});
      }
      pth.entries[{k, l}] = std::move(e);
    }
  return pth;
}

VStructureData opposite_vstructure(const VStructureData& vs,
                                   const SymmetryData& sym) {
  const MonoidalData& m = vs.v.monoidal;
  VStructureData op;
  op.base = opposite_category(vs.base);
  op.v = vs.v;
  for (const auto& [xy, h] : vs.hom.on_objects)
    op.hom.on_objects[{xy.second, xy.first}] = h;
  for (const auto& [fg, h] : vs.hom.on_morphisms)
    op.hom.on_morphisms[{fg.second, fg.first}] = h;
  const auto& obj = vs.base.objects();
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        op.comp[{x, y, z}] = m.base.comp(sym.c(vs.h(z, y), vs.h(y, x)),
                                         vs.b(z, y, x));
  for (const auto& [xy, t] : vs.phi) op.phi[{xy.second, xy.first}] = t;
  return op;
}

CylinderAssignment dualize(const PathAssignment& pth) {
  CylinderAssignment cyl;
  for (const auto& [kx, e] : pth.entries)
    cyl.entries[kx] = CylinderEntry{e.obj, e.beta, e.psibar};
  return cyl;
}

PathAssignment dualize(const CylinderAssignment& cyl) {
  PathAssignment pth;
  for (const auto& [kx, e] : cyl.entries)
    pth.entries[kx] = PathEntry{e.obj, e.alpha, e.phibar};
  return pth;
}

// ---- uniqueness and the induced action ----------------------------------------

namespace {

// The unique f: K⊗X -> T with S̄(X,f)∘α_{K,X} = target, where target is a
// V-morphism K -> S̄(X,T). Transport first, then exhaustive confirmation.
MorphismRef transport_unique(const VStructureData& vs, const CylinderEntry& e,
                             const ObjectRef& k, const ObjectRef& x,
                             const ObjectRef& t, const MorphismRef& target,
                             std::size_t& count) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();
  MorphismRef pb_inv = inverse_or_throw(vc, e.phibar.at(t));
  MorphismRef f =
      vs.phi_inv(e.obj, t, vc.comp(varpi(m, cl, target), pb_inv));
  count = 0;
  std::optional<MorphismRef> found;
  const MorphismRef& id_x = s.identity(x);
  for (const auto& g : s.hom(e.obj, t))
    if (vc.comp(e.alpha, vs.h(id_x, g)) == target) {
      ++count;
      found = g;
    }
  if (count != 1)
    throw WitnessError(count, "cylinder comparison at " +
                                  pair_name(k.str(), x.str()) + " into " +
                                  t.str() + " has " + std::to_string(count) +
                                  " witnesses");
  if (*found != f)
    throw EngineBug("transport through φ̄ gives " + f.str() +
                        " but the unique witness is " + found->str(),
                    {});
  return f;
}

}  // namespace

MorphismRef cylinder_unique_iso(const VStructureData& vs,
                                const CylinderAssignment& a,
                                const CylinderAssignment& b,
                                const ObjectRef& k, const ObjectRef& x,
                                std::size_t* witnesses) {
  const CylinderEntry& ea = a.at(k, x);
  const CylinderEntry& eb = b.at(k, x);
  std::size_t count = 0;
  MorphismRef f = transport_unique(vs, ea, k, x, eb.obj, eb.alpha, count);
  if (witnesses) *witnesses = count;
  if (!morphism_inverse(vs.base, f))
    throw EngineBug("cylinder comparison " + f.str() + " is not invertible",
                    {});
  return f;
}

BifunctorData induced_tensor_bifunctor(const VStructureData& vs,
                                       const CylinderAssignment& cyl,
                                       std::vector<WitnessCount>* counts) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  BifunctorData act;
  for (const auto& [kx, e] : cyl.entries) act.on_objects[kx] = e.obj;

  // u⊗X for u: K -> L, and K⊗v for v: X -> Y.
  std::map<MorPair, MorphismRef> left, right;
  std::size_t n = 0;
  for (const auto& [u, au] : vc.morphisms())
    for (const auto& x : s.objects()) {
      const CylinderEntry& ek = cyl.at(au.src, x);
      const CylinderEntry& el = cyl.at(au.dst, x);
      left[{u, s.identity(x)}] = transport_unique(
          vs, ek, au.src, x, el.obj, vc.comp(u, el.alpha), n);
      if (counts) counts->push_back({site("u⊗X", u, x), n});
    }
  for (const auto& k : vc.objects())
    for (const auto& [v, av] : s.morphisms()) {
      const CylinderEntry& ex = cyl.at(k, av.src);
      const CylinderEntry& ey = cyl.at(k, av.dst);
      MorphismRef target = vc.comp(ey.alpha, vs.h(v, s.identity(ey.obj)));
      right[{vc.identity(k), v}] =
          transport_unique(vs, ex, k, av.src, ey.obj, target, n);
      if (counts) counts->push_back({site("K⊗v", k, v), n});
    }
  for (const auto& [u, au] : vc.morphisms())
    for (const auto& [v, av] : s.morphisms())
      act.on_morphisms[{u, v}] =
          s.comp(right.at({vc.identity(au.src), v}),
                 left.at({u, s.identity(av.dst)}));

  detail::raise_if_engine_bug(check_induced_tensor(vs, cyl, act),
                              "induced_tensor_bifunctor");
  return act;
}

Reports check_induced_tensor(const VStructureData& vs,
                             const CylinderAssignment& cyl,
                             const BifunctorData& act) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& m = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();
  Reports out = relabel(check_bifunctor(act, vc, s, s), "derived.induced-tensor");
  if (!out.empty()) return out;
  for (const auto& [u, au] : vc.morphisms())
    for (const auto& [v, av] : s.morphisms())
      expect_equal(out, "derived.induced-tensor", site(u, v),
                   act(u, v),
                   s.comp(act(u, s.identity(av.src)),
                          act(vc.identity(au.dst), v)),
                   "interchange");

  const auto& sobj = s.objects();
  for (const auto& k : vc.objects())
    for (const auto& x : sobj) {
      const ObjectRef& kx = act(k, x);
      const MorphismRef& id_k = vc.identity(k);
      // In Y.
      for (const auto& [w, aw] : s.morphisms())
        expect_equal(
            out, "derived.phibar-natural", site(k, x, w),
            vc.comp(vs.h(s.identity(kx), w), cyl.phibar(k, x, aw.dst)),
            vc.comp(cyl.phibar(k, x, aw.src),
                    hom_on_morphisms(m, cl, id_k,
                                     vs.h(s.identity(x), w))));
      // In X, for v: X' -> X.
      for (const auto& [v, av] : s.morphisms()) {
        if (av.dst != x) continue;
        for (const auto& y : sobj)
          expect_equal(
              out, "derived.phibar-natural", site(k, v, y),
              vc.comp(vs.h(act(id_k, v), s.identity(y)),
                      cyl.phibar(k, av.src, y)),
              vc.comp(cyl.phibar(k, x, y),
                      hom_on_morphisms(m, cl, id_k,
                                       vs.h(v, s.identity(y)))));
      }
    }
  // In K, for u: K -> L.
  for (const auto& [u, au] : vc.morphisms())
    for (const auto& x : sobj)
      for (const auto& y : sobj)
        expect_equal(
            out, "derived.phibar-natural", site(u, x, y),
            vc.comp(vs.h(act(u, s.identity(x)), s.identity(y)),
                    cyl.phibar(au.src, x, y)),
            vc.comp(cyl.phibar(au.dst, x, y),
                    hom_on_morphisms(m, cl, u, vc.identity(vs.h(x, y)))));
  return out;
}

}  // namespace encat
