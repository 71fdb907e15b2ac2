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

#include "encat/equiv.hpp"

#include <optional>
#include <string>

#include "check_util.hpp"
#include "encat/errors.hpp"
#include "module_util.hpp"

namespace encat {

namespace {

std::string triple_str(const ObjectRef& k, const ObjectRef& l,
                       const ObjectRef& x) {
  return "(" + k.str() + "," + l.str() + "," + x.str() + ")";
}

void record(std::vector<WitnessCount>* counts, std::vector<std::string> site,
            std::size_t n) {
  if (counts) counts->push_back(WitnessCount{std::move(site), n});
}

RoundTrip compare(const std::string& diff) {
  return RoundTrip{diff.empty(), diff};
}

}  // namespace

// ---- cylinders and tensors ------------------------------------------------------

TensoredData cylinder_to_tensored(const VStructureData& vs,
                                  const CylinderAssignment& cyl) {
  (void)vs;
  TensoredData td;
  for (const auto& [kx, e] : cyl.entries)
    td.entries[kx] = TensorEntry{e.obj, e.phibar};
  return td;
}

CylinderAssignment tensored_to_cylinder(const VCategoryData& vc,
                                        const TensoredData& td) {
  const MonoidalData& m = vc.v.monoidal;
  const ClosedData& cl = vc.v.closed_or_throw();
  CylinderAssignment cyl;
  for (const auto& [kx, e] : td.entries) {
    const auto& [k, x] = kx;
    auto it = e.phibar.find(e.obj);
    if (it == e.phibar.end())
      throw MissingComponent("tensor " + pair_name(k.str(), x.str()) +
                             " has no φ̄ at its own object");
    MorphismRef g = m.base.comp(vc.j(e.obj), it->second);
    cyl.entries[kx] = CylinderEntry{
        e.obj, varpi_inv(m, cl, g, k, vc.h(x, e.obj)), e.phibar};
  }
  return cyl;
}

RoundTrip roundtrip_cylinder_tensored(const VStructureData& vs,
                                      const CylinderAssignment& cyl) {
  CylinderAssignment back = tensored_to_cylinder(
      associated_vcategory(vs), cylinder_to_tensored(vs, cyl));
  return compare(first_difference(back, cyl));
}

// ---- modules and cylinders ----------------------------------------------------

CylinderSide module_to_cylinder(const TensorClosedModuleData& tc) {
  CylinderSide out{induced_vstructure(tc), {}};
  const VModuleData& m = tc.module;
  for (const auto& k : tc.vcat().objects())
    for (const auto& x : tc.base().objects()) {
      CylinderEntry e{m.act(k, x), detail::module_eta(tc, k, x), {}};
      for (const auto& y : tc.base().objects())
        e.phibar[y] = module_phibar(tc, k, x, y);
      out.cyl.entries[{k, x}] = std::move(e);
    }
  return out;
}

TensorClosedModuleData cylinder_to_module(const VStructureData& vs,
                                          const CylinderAssignment& cyl,
                                          std::vector<WitnessCount>* counts) {
  const FinCategory& s = vs.base;
  const FinCategory& vc = vs.vcat();
  const MonoidalData& mv = vs.v.monoidal;
  const ClosedData& cl = vs.v.closed_or_throw();

  TensorClosedModuleData tc;
  VModuleData& m = tc.module;
  m.v = vs.v;
  m.base = s;
  m.action = induced_tensor_bifunctor(vs, cyl, counts);
  tc.hom = vs.hom;

  // φ through φ̄, cross-checked against b̄∘(φ(f)⊗α)∘l⁻¹.
  for (const auto& k : vc.objects())
    for (const auto& x : s.objects()) {
      const CylinderEntry& e = cyl.at(k, x);
      for (const auto& y : s.objects()) {
        MorphismMap& t = tc.phi[{k, x, y}];
        for (const auto& f : s.hom(e.obj, y)) {
          MorphismRef via_phibar = varpi_inv(
              mv, cl, vc.comp(vs.phi_of(f), e.phibar.at(y)), k, vs.h(x, y));
          MorphismRef via_alpha = compose_path(
              vc, {mv.l_inv(k), mv.t(vs.phi_of(f), e.alpha),
                   vs.b(x, e.obj, y)});
          if (via_phibar != via_alpha)
            throw EngineBug("the two routes for φ" + triple_str(k, x, y) +
                                " disagree at " + f.str() + ": " +
                                via_phibar.str() + " vs " + via_alpha.str(),
                            {});
          t[f] = via_phibar;
        }
      }
    }

  // a_{K,L,X}: the natural family S(K⊗(L⊗X), -) -> S((K⊗L)⊗X, -) at 1.
  auto tau_a = [&](const ObjectRef& k, const ObjectRef& l, const ObjectRef& x,
                   const ObjectRef& y, const MorphismRef& f) {
    const ObjectRef& lx = m.act(l, x);
    MorphismRef g = vc.comp(tc.phi_of(k, lx, y, f), cyl.phibar(l, x, y));
    return tc.phi_inv(mv.t(k, l), x, y,
                      transpose_pi_inv(mv, cl, g, l, vs.h(x, y)));
  };
  for (const auto& k : vc.objects())
    for (const auto& l : vc.objects())
      for (const auto& x : s.objects()) {
        const ObjectRef src = m.act(mv.t(k, l), x);
        const ObjectRef dst = m.act(k, m.act(l, x));
        MorphismRef a = tau_a(k, l, x, dst, s.identity(dst));
        std::size_t n = 0;
        for (const auto& cand : s.hom(src, dst)) {
          bool all = true;
          for (const auto& y : s.objects())
            for (const auto& f : s.hom(dst, y))
              if (all && s.comp(cand, f) != tau_a(k, l, x, y, f)) all = false;
          if (all) ++n;
        }
        record(counts, detail::site("a", k, l, x), n);
        if (n != 1)
          throw WitnessError(n, "module associator at " + triple_str(k, l, x) +
                                    " has " + std::to_string(n) +
                                    " witnesses");
        for (const auto& y : s.objects())
          for (const auto& f : s.hom(dst, y))
            if (s.comp(a, f) != tau_a(k, l, x, y, f))
              throw EngineBug("extracted associator " + a.str() +
                                  " does not induce its family",
                              {});
        m.assoc[{k, l, x}] = a;
      }

  // l_X: the family S(X, -) -> S(I⊗X, -), g ↦ φ⁻¹(φ(g)), at 1.
  const ObjectRef& unit = mv.unit;
  auto tau_l = [&](const ObjectRef& x, const ObjectRef& y,
                   const MorphismRef& g) {
    return tc.phi_inv(unit, x, y, vs.phi_of(g));
  };
  for (const auto& x : s.objects()) {
    const ObjectRef ix = m.act(unit, x);
    MorphismRef l = tau_l(x, x, s.identity(x));
    std::size_t n = 0;
    for (const auto& cand : s.hom(ix, x)) {
      bool all = true;
      for (const auto& y : s.objects())
        for (const auto& g : s.hom(x, y))
          if (all && s.comp(cand, g) != tau_l(x, y, g)) all = false;
      if (all) ++n;
    }
    record(counts, detail::site("l", x), n);
    if (n != 1)
      throw WitnessError(n, "module unitor at " + x.str() + " has " +
                                std::to_string(n) + " witnesses");
    for (const auto& y : s.objects())
      for (const auto& g : s.hom(x, y))
        if (s.comp(l, g) != tau_l(x, y, g))
          throw EngineBug("extracted unitor " + l.str() +
                              " does not induce its family",
                          {});
    m.lunit[x] = l;
  }

  detail::raise_if_engine_bug(check_tensor_closed(tc), "cylinder_to_module");
  return tc;
}

RoundTrip roundtrip_module_cylinder(const TensorClosedModuleData& tc) {
  CylinderSide side = module_to_cylinder(tc);
  return compare(first_difference(cylinder_to_module(side.vs, side.cyl), tc));
}

RoundTrip roundtrip_cylinder_module(const VStructureData& vs,
                                    const CylinderAssignment& cyl) {
  CylinderSide back = module_to_cylinder(cylinder_to_module(vs, cyl));
  std::string d = first_difference(back.vs, vs);
  if (!d.empty()) return compare("V-structure " + d);
  return compare(first_difference(back.cyl, cyl));
}

// ---- bimodules ----------------------------------------------------------------

ClosedBimoduleData bimodule_completion(const ClosedVModuleData& cm,
                                       const SymmetryData& sym,
                                       std::vector<WitnessCount>* counts) {
  const TensorClosedModuleData& tc = cm.tensor_closed;
  const VModuleData& m = tc.module;
  const FinCategory& s = m.base;
  const FinCategory& vc = m.vcat();
  const MonoidalData& mv = m.v.monoidal;

  ClosedBimoduleData bm;
  bm.closed_module = cm;

  for (const auto& k : vc.objects())
    for (const auto& l : vc.objects())
      for (const auto& x : s.objects()) {
        const ObjectRef y0 = cm.cot(k, cm.cot(l, x));
        const ObjectRef dst = cm.cot(mv.t(k, l), x);
        MorphismRef f0 =
            detail::bimodule_lower_inv(cm, k, l, x, y0, s.identity(y0));
        MorphismRef aop = detail::bimodule_upper(cm, sym, k, l, x, y0, f0);
        auto induces = [&](const MorphismRef& cand) {
          for (const auto& y : s.objects())
            for (const auto& f : s.hom(m.act(l, m.act(k, y)), x))
              if (detail::bimodule_upper(cm, sym, k, l, x, y, f) !=
                  s.comp(detail::bimodule_lower(cm, k, l, x, y, f), cand))
                return false;
          return true;
        };
        std::size_t n = 0;
        for (const auto& cand : s.hom(y0, dst))
          if (induces(cand)) ++n;
        record(counts, detail::site("a^op", k, l, x), n);
        if (n != 1)
          throw WitnessError(n, "comodule associator at " +
                                    triple_str(k, l, x) + " has " +
                                    std::to_string(n) + " witnesses");
        if (!induces(aop))
          throw EngineBug("extracted a^op " + aop.str() +
                              " does not induce its family",
                          {});
        bm.co_assoc[{k, l, x}] = aop;
      }

  const ObjectRef& unit = mv.unit;
  for (const auto& x : s.objects()) {
    const ObjectRef ix = cm.cot(unit, x);
    MorphismRef lop =
        cm.psi_inv(unit, x, x, tc.phi_of(unit, x, x, m.l(x)));
    auto induces = [&](const MorphismRef& cand) {
      for (const auto& y : s.objects())
        for (const auto& g : s.hom(y, x))
          if (tc.phi_of(unit, y, x, s.comp(m.l(y), g)) !=
              cm.psi_of(unit, x, y, s.comp(g, cand)))
            return false;
      return true;
    };
    std::size_t n = 0;
    for (const auto& cand : s.hom(x, ix))
      if (induces(cand)) ++n;
    record(counts, detail::site("l^op", x), n);
    if (n != 1)
      throw WitnessError(n, "comodule unitor at " + x.str() + " has " +
                                std::to_string(n) + " witnesses");
    if (!induces(lop))
      throw EngineBug("extracted l^op " + lop.str() +
                          " does not induce its family",
                      {});
    bm.co_lunit[x] = lop;
  }

  detail::raise_if_engine_bug(check_closed_bimodule(bm, sym),
                              "bimodule_completion");
  return bm;
}

}  // namespace encat
