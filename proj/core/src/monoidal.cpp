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

#include "encat/monoidal.hpp"

#include <string>

#include "check_util.hpp"
#include "encat/errors.hpp"

namespace encat {

using detail::append;
using detail::check_arrow;
using detail::relabel;
using detail::expect_equal;
using detail::fail;
using detail::fail_count;
using detail::site;

namespace {

template <class K>
const MorphismRef& lookup(const std::map<K, MorphismRef>& table, const K& key,
                          const char* what, const std::string& where) {
  auto it = table.find(key);
  if (it == table.end())
    throw MissingComponent(std::string(what) + " has no component at " +
                           where);
  return it->second;
}

std::string tuple_str(const ObjectRef& x, const ObjectRef& y,
                      const ObjectRef& z) {
  return "(" + x.str() + "," + y.str() + "," + z.str() + ")";
}

}  // namespace

const MorphismRef& MonoidalData::a(const ObjectRef& x, const ObjectRef& y,
                                   const ObjectRef& z) const {
  return lookup(assoc, ObjTriple{x, y, z}, "associator", tuple_str(x, y, z));
}

const MorphismRef& MonoidalData::l(const ObjectRef& x) const {
  return lookup(lunit, x, "left unitor", x.str());
}

const MorphismRef& MonoidalData::r(const ObjectRef& x) const {
  return lookup(runit, x, "right unitor", x.str());
}

MorphismRef MonoidalData::a_inv(const ObjectRef& x, const ObjectRef& y,
                                const ObjectRef& z) const {
  return inverse_or_throw(base, a(x, y, z));
}

MorphismRef MonoidalData::l_inv(const ObjectRef& x) const {
  return inverse_or_throw(base, l(x));
}

MorphismRef MonoidalData::r_inv(const ObjectRef& x) const {
  return inverse_or_throw(base, r(x));
}

const MorphismRef& SymmetryData::c(const ObjectRef& x,
                                   const ObjectRef& y) const {
  return lookup(braid, ObjPair{x, y}, "braiding", pair_name(x.str(), y.str()));
}

const ObjectRef& ClosedData::h(const ObjectRef& y, const ObjectRef& z) const {
  auto it = hom.find({y, z});
  if (it == hom.end())
    throw MissingComponent("internal hom undefined at " +
                           pair_name(y.str(), z.str()));
  return it->second;
}

const MorphismRef& ClosedData::ev(const ObjectRef& y,
                                  const ObjectRef& z) const {
  return lookup(eval, ObjPair{y, z}, "evaluation", pair_name(y.str(), z.str()));
}

const ClosedData& BaseV::closed_or_throw() const {
  if (!closed) throw CapabilityError("operation requires a closed base");
  return *closed;
}

const SymmetryData& BaseV::symmetry_or_throw() const {
  if (!symmetry) throw CapabilityError("operation requires a symmetric base");
  return *symmetry;
}

// ---- checks ---------------------------------------------------------------

Reports check_monoidal(const MonoidalData& m) {
  const FinCategory& c = m.base;
  Reports out = validate_category(c);
  if (!out.empty()) return out;
  if (!c.has_object(m.unit)) {
    fail(out, "monoidal.typing", site(m.unit), "unit is not an object");
    return out;
  }
  append(out, relabel(check_bifunctor(m.tensor, c, c, c), "monoidal.bifunctor"));
  if (!out.empty()) return out;

  const auto& obj = c.objects();
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        check_arrow(out, c, "monoidal.typing", site("a", x, y, z), m.a(x, y, z),
                    m.t(m.t(x, y), z), m.t(x, m.t(y, z)));
  for (const auto& x : obj) {
    check_arrow(out, c, "monoidal.typing", site("l", x), m.l(x),
                m.t(m.unit, x), x);
    check_arrow(out, c, "monoidal.typing", site("r", x), m.r(x),
                m.t(x, m.unit), x);
  }
  if (!out.empty()) return out;

  auto iso = [&](const std::vector<std::string>& where, const MorphismRef& f) {
    if (!morphism_inverse(c, f))
      fail(out, "monoidal.iso", where, f.str() + " is not invertible");
  };
  for (const auto& [k, f] : m.assoc)
    iso(site("a", std::get<0>(k), std::get<1>(k), std::get<2>(k)), f);
  for (const auto& [x, f] : m.lunit) iso(site("l", x), f);
  for (const auto& [x, f] : m.runit) iso(site("r", x), f);

  const auto& mor = c.morphisms();
  for (const auto& [f, af] : mor)
    for (const auto& [g, ag] : mor)
      for (const auto& [h, ah] : mor)
        expect_equal(out, "monoidal.naturality", site("a", f, g, h),
                     c.comp(m.t(m.t(f, g), h), m.a(af.dst, ag.dst, ah.dst)),
                     c.comp(m.a(af.src, ag.src, ah.src), m.t(f, m.t(g, h))));
  const MorphismRef& id_i = m.id(m.unit);
  for (const auto& [f, af] : mor) {
    expect_equal(out, "monoidal.naturality", site("l", f),
                 c.comp(m.t(id_i, f), m.l(af.dst)), c.comp(m.l(af.src), f));
    expect_equal(out, "monoidal.naturality", site("r", f),
                 c.comp(m.t(f, id_i), m.r(af.dst)), c.comp(m.r(af.src), f));
  }

  for (const auto& w : obj)
    for (const auto& x : obj)
      for (const auto& y : obj)
        for (const auto& z : obj) {
          MorphismRef top = c.comp(m.a(m.t(w, x), y, z), m.a(w, x, m.t(y, z)));
          MorphismRef bottom = compose_path(
              c, {m.t(m.a(w, x, y), m.id(z)), m.a(w, m.t(x, y), z),
                  m.t(m.id(w), m.a(x, y, z))});
          expect_equal(out, law::kPentagon, site(w, x, y, z), top, bottom);
        }
  for (const auto& x : obj)
    for (const auto& y : obj)
      expect_equal(out, law::kTriangle, site(x, y),
                   c.comp(m.a(x, m.unit, y), m.t(m.id(x), m.l(y))),
                   m.t(m.r(x), m.id(y)));
  if (!out.empty()) return out;
  detail::raise_if_engine_bug(check_monoidal_derived(m), "check_monoidal");
  return out;
}

Reports check_monoidal_derived(const MonoidalData& m) {
  const FinCategory& c = m.base;
  Reports out;
  expect_equal(out, "derived.unitor-agree", site(m.unit), m.r(m.unit),
               m.l(m.unit));
  for (const auto& x : c.objects())
    for (const auto& y : c.objects())
      expect_equal(out, "derived.left-unitor-assoc", site(x, y),
                   c.comp(m.a(m.unit, x, y), m.l(m.t(x, y))),
                   m.t(m.l(x), m.id(y)));
  return out;
}

Reports check_symmetry(const MonoidalData& m, const SymmetryData& s) {
  const FinCategory& c = m.base;
  Reports out;
  const auto& obj = c.objects();
  for (const auto& x : obj)
    for (const auto& y : obj)
      check_arrow(out, c, "symmetry.typing", site(x, y), s.c(x, y), m.t(x, y),
                  m.t(y, x));
  if (!out.empty()) return out;
  for (const auto& [f, af] : c.morphisms())
    for (const auto& [g, ag] : c.morphisms())
      expect_equal(out, "symmetry.naturality", site(f, g),
                   c.comp(m.t(f, g), s.c(af.dst, ag.dst)),
                   c.comp(s.c(af.src, ag.src), m.t(g, f)));
  for (const auto& x : obj)
    for (const auto& y : obj)
      expect_equal(out, law::kSymInvol, site(x, y),
                   c.comp(s.c(x, y), s.c(y, x)), m.id(m.t(x, y)));
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj) {
        MorphismRef top = compose_path(
            c, {m.a(x, y, z), s.c(x, m.t(y, z)), m.a(y, z, x)});
        MorphismRef bottom =
            compose_path(c, {m.t(s.c(x, y), m.id(z)), m.a(y, x, z),
                             m.t(m.id(y), s.c(x, z))});
        expect_equal(out, law::kSymHexagon, site(x, y, z), top, bottom);
      }
  for (const auto& x : obj)
    expect_equal(out, law::kSymUnit, site(x),
                 c.comp(s.c(m.unit, x), m.r(x)), m.l(x));
  return out;
}

Reports check_closed(const MonoidalData& m, const ClosedData& cl) {
  const FinCategory& c = m.base;
  Reports out;
  const auto& obj = c.objects();
  for (const auto& y : obj)
    for (const auto& z : obj) {
      const ObjectRef& h = cl.h(y, z);
      if (!c.has_object(h)) {
        fail(out, "closed.typing", site(y, z), "internal hom " + h.str() +
                                                   " is not an object");
        continue;
      }
      check_arrow(out, c, "closed.typing", site(y, z), cl.ev(y, z),
                  m.t(h, y), z);
    }
  // Cardinality first: it is meaningful even where ε is ill-typed.
  bool counts_ok = true;
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj) {
        if (!c.has_object(cl.h(y, z))) continue;
        std::size_t n = c.hom(x, cl.h(y, z)).size();
        std::size_t k = c.hom(m.t(x, y), z).size();
        if (n != k) {
          counts_ok = false;
          fail_count(out, law::kClosedBijection, site(x, y, z), n,
                     "|Hom(X, V̄(Y,Z))| = " + std::to_string(n) +
                         " but |Hom(X⊗Y, Z)| = " + std::to_string(k));
        }
      }
  if (!out.empty()) return out;
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj) {
        std::map<MorphismRef, MorphismRef> seen;
        for (const auto& g : c.hom(x, cl.h(y, z))) {
          MorphismRef f = transpose_pi_inv(m, cl, g, y, z);
          auto [it, fresh] = seen.emplace(f, g);
          if (!fresh)
            expect_equal(out, law::kClosedBijection, site(x, y, z), it->second,
                         g, "distinct transposes with equal image " + f.str());
        }
      }
  if (!out.empty() || !counts_ok) return out;
  // Naturality in X and Z; in Y it is carried by the hom bifunctor.
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj)
        for (const auto& f : c.hom(m.t(x, y), z)) {
          MorphismRef pf = transpose_pi(m, cl, f, x, y);
          for (const auto& x2 : obj)
            for (const auto& u : c.hom(x2, x))
              expect_equal(
                  out, "closed.naturality", site(f, u),
                  transpose_pi(m, cl, c.comp(m.t(u, m.id(y)), f), x2, y),
                  c.comp(u, pf));
          for (const auto& z2 : obj)
            for (const auto& w : c.hom(z, z2))
              expect_equal(out, "closed.naturality", site(f, w),
                           transpose_pi(m, cl, c.comp(f, w), x, y),
                           c.comp(pf, hom_on_morphisms(m, cl, m.id(y), w)));
        }
  if (!out.empty()) return out;
  detail::raise_if_engine_bug(check_closed_derived(m, cl), "check_closed");
  return out;
}

Reports check_closed_derived(const MonoidalData& m, const ClosedData& cl) {
  const FinCategory& c = m.base;
  const FinCategory op = opposite_category(c);
  Reports out = relabel(check_bifunctor(hom_bifunctor(m, cl), op, c, c),
                        "derived.hom-functor");
  const auto& obj = c.objects();
  for (const auto& [f, af] : c.morphisms())
    for (const auto& z : obj) {
      // f: X -> Y.
      const ObjectRef& x = af.src;
      const ObjectRef& y = af.dst;
      expect_equal(
          out, "derived.eval-dinatural", site(f, z),
          c.comp(m.t(m.id(cl.h(y, z)), f), cl.ev(y, z)),
          c.comp(m.t(hom_on_morphisms(m, cl, f, m.id(z)), m.id(x)),
                 cl.ev(x, z)));
    }
  for (const auto& k : obj)
    for (const auto& l : obj)
      for (const auto& n : obj) {
        // ε^{K⊗L}_N after (π̄⁻¹⊗1) equals ε^L_N after (ε^K⊗1) after a⁻¹.
        auto pb_inv = morphism_inverse(c, internal_pi_bar(m, cl, k, l, n));
        if (!pb_inv) {
          fail(out, "derived.double-eval", site(k, l, n),
               "internal π̄ is not invertible");
          continue;
        }
        const ObjectRef& src = cl.h(k, cl.h(l, n));
        MorphismRef lhs = c.comp(m.t(*pb_inv, m.id(m.t(k, l))),
                                 cl.ev(m.t(k, l), n));
        MorphismRef rhs = compose_path(
            c, {m.a_inv(src, k, l), m.t(cl.ev(k, cl.h(l, n)), m.id(l)),
                cl.ev(l, n)});
        expect_equal(out, "derived.double-eval", site(k, l, n), lhs, rhs);
      }
  for (const auto& [f, af] : c.morphisms())
    expect_equal(out, "derived.iota-transpose", site(f),
                 transpose_pi(m, cl, c.comp(m.r(af.src), f), af.src, m.unit),
                 c.comp(f, iota(m, cl, af.dst)));
  for (const auto& x : obj)
    for (const auto& y : obj)
      for (const auto& z : obj) {
        MorphismRef pb = internal_pi_bar(m, cl, x, y, z);
        for (const auto& f : c.hom(m.t(x, y), z))
          expect_equal(out, "derived.pibar-varpi", site(x, y, z, f),
                       c.comp(varpi(m, cl, f), pb),
                       varpi(m, cl, transpose_pi(m, cl, f, x, y)));
        for (const auto& w : obj)
          for (const auto& f : c.hom(m.t(w, m.t(x, y)), z)) {
            MorphismRef lhs = transpose_pi(
                m, cl,
                transpose_pi(m, cl, c.comp(m.a(w, x, y), f), m.t(w, x), y), w,
                x);
            MorphismRef rhs =
                c.comp(transpose_pi(m, cl, f, w, m.t(x, y)), pb);
            expect_equal(out, "derived.pibar-characterization",
                         site(w, x, y, z, f), lhs, rhs);
          }
      }
  return out;
}

Reports check_base(const BaseV& v) {
  Reports out = check_monoidal(v.monoidal);
  if (!out.empty()) return out;
  if (v.symmetry) append(out, check_symmetry(v.monoidal, *v.symmetry));
  if (v.closed) append(out, check_closed(v.monoidal, *v.closed));
  return out;
}

// ---- closed structure -----------------------------------------------------

MorphismRef transpose_pi(const MonoidalData& m, const ClosedData& cl,
                         const MorphismRef& f, const ObjectRef& x,
                         const ObjectRef& y) {
  const FinCategory& c = m.base;
  const ObjectRef& z = c.dst(f);
  if (c.src(f) != m.t(x, y))
    throw NonComposable(0, "transpose: " + f.str() + " does not start at " +
                               x.str() + "⊗" + y.str());
  const MorphismRef& ev = cl.ev(y, z);
  const MorphismRef& id_y = m.id(y);
  std::optional<MorphismRef> found;
  std::size_t count = 0;
  for (const auto& g : c.hom(x, cl.h(y, z))) {
    if (c.comp(m.t(g, id_y), ev) == f) {
      if (!found) found = g;
      ++count;
    }
  }
  if (count != 1)
    throw WitnessError(count, "transpose of " + f.str() + " at (" + x.str() +
                                  "," + y.str() + "," + z.str() + ") has " +
                                  std::to_string(count) + " candidates");
  return *found;
}

MorphismRef transpose_pi_inv(const MonoidalData& m, const ClosedData& cl,
                             const MorphismRef& g, const ObjectRef& y,
                             const ObjectRef& z) {
  return m.base.comp(m.t(g, m.id(y)), cl.ev(y, z));
}

MorphismRef hom_on_morphisms(const MonoidalData& m, const ClosedData& cl,
                             const MorphismRef& f, const MorphismRef& h) {
  const FinCategory& c = m.base;
  const ObjectRef& x2 = c.src(f);
  const ObjectRef& x = c.dst(f);
  const ObjectRef& z = c.src(h);
  const ObjectRef& hom_xz = cl.h(x, z);
  MorphismRef body =
      compose_path(c, {m.t(m.id(hom_xz), f), cl.ev(x, z), h});
  return transpose_pi(m, cl, body, hom_xz, x2);
}

BifunctorData hom_bifunctor(const MonoidalData& m, const ClosedData& cl) {
  BifunctorData b;
  const FinCategory& c = m.base;
  for (const auto& y : c.objects())
    for (const auto& z : c.objects()) b.on_objects[{y, z}] = cl.h(y, z);
  for (const auto& [f, _] : c.morphisms())
    for (const auto& [h, __] : c.morphisms())
      b.on_morphisms[{f, h}] = hom_on_morphisms(m, cl, f, h);
  return b;
}

MorphismRef internal_composition_b(const MonoidalData& m, const ClosedData& cl,
                                   const ObjectRef& x, const ObjectRef& y,
                                   const ObjectRef& z) {
  const ObjectRef& yz = cl.h(y, z);
  const ObjectRef& xy = cl.h(x, y);
  MorphismRef body = compose_path(
      m.base, {m.a(yz, xy, x), m.t(m.id(yz), cl.ev(x, y)), cl.ev(y, z)});
  return transpose_pi(m, cl, body, m.t(yz, xy), x);
}

MorphismRef varpi(const MonoidalData& m, const ClosedData& cl,
                  const MorphismRef& f) {
  const ObjectRef& x = m.base.src(f);
  return transpose_pi(m, cl, m.base.comp(m.l(x), f), m.unit, x);
}

MorphismRef varpi_inv(const MonoidalData& m, const ClosedData& cl,
                      const MorphismRef& g, const ObjectRef& x,
                      const ObjectRef& y) {
  return compose_path(m.base,
                      {m.l_inv(x), m.t(g, m.id(x)), cl.ev(x, y)});
}

MorphismRef internal_pi_bar(const MonoidalData& m, const ClosedData& cl,
                            const ObjectRef& x, const ObjectRef& y,
                            const ObjectRef& z) {
  const ObjectRef& xy = m.t(x, y);
  const ObjectRef& h = cl.h(xy, z);
  MorphismRef body = m.base.comp(m.a(h, x, y), cl.ev(xy, z));
  MorphismRef once = transpose_pi(m, cl, body, m.t(h, x), y);
  return transpose_pi(m, cl, once, h, x);
}

MorphismRef iota(const MonoidalData& m, const ClosedData& cl,
                 const ObjectRef& x) {
  return transpose_pi(m, cl, m.r(x), x, m.unit);
}

// ---- products -------------------------------------------------------------

namespace {

ObjectRef pobj(const ObjectRef& x, const ObjectRef& y) {
  return ObjectRef(pair_name(x.str(), y.str()));
}

MorphismRef pmor(const MorphismRef& f, const MorphismRef& g) {
  return MorphismRef(pair_name(f.str(), g.str()));
}

}  // namespace

MonoidalData product_monoidal(const MonoidalData& a, const MonoidalData& b) {
  MonoidalData m;
  m.base = product_category(a.base, b.base);
  m.unit = pobj(a.unit, b.unit);
  for (const auto& [xx, xt] : a.tensor.on_objects)
    for (const auto& [yy, yt] : b.tensor.on_objects)
      m.tensor.on_objects[{pobj(xx.first, yy.first),
                           pobj(xx.second, yy.second)}] = pobj(xt, yt);
  for (const auto& [ff, ft] : a.tensor.on_morphisms)
    for (const auto& [gg, gt] : b.tensor.on_morphisms)
      m.tensor.on_morphisms[{pmor(ff.first, gg.first),
                             pmor(ff.second, gg.second)}] = pmor(ft, gt);
  for (const auto& [k, f] : a.assoc)
    for (const auto& [k2, g] : b.assoc)
      m.assoc[{pobj(std::get<0>(k), std::get<0>(k2)),
               pobj(std::get<1>(k), std::get<1>(k2)),
               pobj(std::get<2>(k), std::get<2>(k2))}] = pmor(f, g);
  for (const auto& [x, f] : a.lunit)
    for (const auto& [y, g] : b.lunit) m.lunit[pobj(x, y)] = pmor(f, g);
  for (const auto& [x, f] : a.runit)
    for (const auto& [y, g] : b.runit) m.runit[pobj(x, y)] = pmor(f, g);
  return m;
}

SymmetryData product_symmetry(const MonoidalData&, const SymmetryData& sa,
                              const MonoidalData&, const SymmetryData& sb) {
  SymmetryData s;
  for (const auto& [xx, f] : sa.braid)
    for (const auto& [yy, g] : sb.braid)
      s.braid[{pobj(xx.first, yy.first), pobj(xx.second, yy.second)}] =
          pmor(f, g);
  return s;
}

ClosedData product_closed(const MonoidalData&, const ClosedData& ca,
                          const MonoidalData&, const ClosedData& cb) {
  ClosedData cl;
  for (const auto& [xx, h] : ca.hom)
    for (const auto& [yy, k] : cb.hom)
      cl.hom[{pobj(xx.first, yy.first), pobj(xx.second, yy.second)}] =
          pobj(h, k);
  for (const auto& [xx, f] : ca.eval)
    for (const auto& [yy, g] : cb.eval)
      cl.eval[{pobj(xx.first, yy.first), pobj(xx.second, yy.second)}] =
          pmor(f, g);
  return cl;
}

BaseV product_base(const BaseV& a, const BaseV& b) {
  BaseV v;
  v.monoidal = product_monoidal(a.monoidal, b.monoidal);
  if (a.symmetry && b.symmetry)
    v.symmetry = product_symmetry(a.monoidal, *a.symmetry, b.monoidal,
                                  *b.symmetry);
  if (a.closed && b.closed)
    v.closed =
        product_closed(a.monoidal, *a.closed, b.monoidal, *b.closed);
  return v;
}

}  // namespace encat
