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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cli.hpp"
#include "encat/compare.hpp"
#include "encat/document.hpp"
#include "encat/equiv.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "encat/vcat.hpp"
#include "encat/vmodule.hpp"
#include "encat/vstruct.hpp"
#include "oracles.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

// Collects the failures of one criterion.
struct Verdict {
  std::vector<std::string> problems;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::vector<std::pair<std::string, BaseV>> coherence_bases() {
  return {{"BOOL", build_bool()},   {"TROP3", build_trop(3)},
          {"TROP4", build_trop(4)}, {"CYC1", build_cyc(1)},
          {"CYC2", build_cyc(2)},   {"CYC3", build_cyc(3)}};
}

std::vector<std::pair<std::string, ClosedVModuleData>> criterion5_modules() {
  return {{"POSET-diamond", build_poset_module(poset_diamond())},
          {"module_self(TROP3)", module_self(build_trop(3))},
          {"module_self(CYC3)", module_self(build_cyc(3))}};
}

bool counts_are_one(const std::vector<WitnessCount>& counts) {
  if (counts.empty()) return false;
  for (const auto& c : counts)
    if (c.count != 1) return false;
  return true;
}

void criterion1(Verdict& v) {
  for (const auto& [name, b] : coherence_bases()) {
    v.require(check_monoidal(b.monoidal).empty(), name + " check_monoidal");
    v.require(check_symmetry(b.monoidal, *b.symmetry).empty(),
              name + " check_symmetry");
    v.require(check_closed(b.monoidal, *b.closed).empty(),
              name + " check_closed");
  }
}

void criterion2(Verdict& v) {
  std::size_t instances = 0;
  for (const auto& [name, b] : coherence_bases()) {
    v.require(check_monoidal_derived(b.monoidal).empty(), name + " monoidal");
    v.require(check_closed_derived(b.monoidal, *b.closed).empty(),
              name + " closed");
    VStructureData vs = self_vstructure(b);
    v.require(check_vstructure_derived(vs).empty(), name + " vstructure");
    v.require(check_cylinder_derived(vs, self_cylinder(b)).empty(),
              name + " cylinder");
    v.require(check_induced_tensor(vs, self_cylinder(b),
                                   induced_tensor_bifunctor(vs, self_cylinder(b)))
                  .empty(),
              name + " induced tensor");
    ClosedVModuleData cm = module_self(b);
    // The module checks assert their own consequences and throw EngineBug.
    v.require(check_closed_module(cm).empty(), name + " module");
    v.require(check_enriched_action(cm.tensor_closed,
                                    enriched_action(cm.tensor_closed))
                  .empty(),
              name + " enriched action");
    instances += 1;
  }
  ClosedVModuleData pm = build_poset_module(poset_diamond());
  v.require(check_closed_module(pm).empty(), "POSET module");
  v.require(check_enriched_action(pm.tensor_closed,
                                  enriched_action(pm.tensor_closed))
                .empty(),
            "POSET enriched action");
  CylinderSide side = module_to_cylinder(pm.tensor_closed);
  v.require(check_vstructure_derived(side.vs).empty(), "POSET vstructure");
  v.require(check_cylinder_derived(side.vs, side.cyl).empty(),
            "POSET cylinder");
  v.notes.push_back(std::to_string(instances + 1) + " instances");
}

void criterion3(Verdict& v) {
  for (auto [name, b] : std::vector<std::pair<std::string, BaseV>>{
           {"BOOL", build_bool()},
           {"TROP3", build_trop(3)},
           {"CYC3", build_cyc(3)}}) {
    VStructureData vs = self_vstructure(b);
    VCategoryData vc = associated_vcategory(vs);
    auto [cat, uvs] = underlying_category(vc);
    std::string diff = first_difference(uvs, canonically_renamed(vs));
    v.require(diff.empty(), name + ": " + diff);
    v.require(associated_vcategory(uvs) == vc, name + " associated again");
  }
}

void criterion4(Verdict& v) {
  std::vector<std::pair<std::string, BaseV>> bs = coherence_bases();
  bs.emplace_back("CYC3xBOOL", product_base(build_cyc(3), build_bool()));
  for (const auto& [name, b] : bs) {
    RoundTrip rt = roundtrip_cylinder_tensored(self_vstructure(b),
                                               self_cylinder(b));
    v.require(rt.equal, name + ": " + rt.difference);
  }
}

void criterion5(Verdict& v) {
  for (const auto& [name, cm] : criterion5_modules()) {
    RoundTrip a = roundtrip_module_cylinder(cm.tensor_closed);
    v.require(a.equal, name + " module-cylinder: " + a.difference);
    CylinderSide side = module_to_cylinder(cm.tensor_closed);
    RoundTrip b = roundtrip_cylinder_module(side.vs, side.cyl);
    v.require(b.equal, name + " cylinder-module: " + b.difference);
  }
}

void criterion6(Verdict& v) {
  for (const auto& [name, cm] : std::vector<std::pair<std::string, ClosedVModuleData>>{
           {"POSET-diamond", build_poset_module(poset_diamond())},
           {"module_self(TROP3)", module_self(build_trop(3))}}) {
    const SymmetryData& sym = *cm.tensor_closed.module.v.symmetry;
    std::vector<WitnessCount> counts;
    ClosedBimoduleData bm = bimodule_completion(cm, sym, &counts);
    v.require(check_closed_bimodule(bm, sym).empty(), name + " check");
    v.require(counts_are_one(counts), name + " witness counts");
    v.require(bimodule_completion(bm.closed_module, sym) == bm,
              name + " idempotent");
  }
}

void criterion7(Verdict& v) {
  std::vector<std::pair<std::string, CylinderSide>> sides;
  for (const auto& [name, b] : coherence_bases())
    sides.push_back({name, {self_vstructure(b), self_cylinder(b)}});
  BaseV p = product_base(build_cyc(3), build_bool());
  sides.push_back({"CYC3xBOOL", {self_vstructure(p), self_cylinder(p)}});
  for (const auto& [name, cm] : criterion5_modules())
    sides.push_back({name, module_to_cylinder(cm.tensor_closed)});
  std::size_t sites = 0;
  for (const auto& [name, side] : sides) {
    for (const auto& [key, e] : side.cyl.entries) {
      std::size_t n = 0;
      cylinder_unique_iso(side.vs, side.cyl, side.cyl, key.first, key.second,
                          &n);
      v.require(n == 1, name + " cylinder_unique_iso at (" + key.first.str() +
                            "," + key.second.str() + ")");
      ++sites;
    }
    std::vector<WitnessCount> counts;
    induced_tensor_bifunctor(side.vs, side.cyl, &counts);
    v.require(counts_are_one(counts), name + " induced_tensor_bifunctor");
    sites += counts.size();
  }
  v.notes.push_back(std::to_string(sites) + " sites");
}

// ---- criterion 8 ----------------------------------------------------------

struct Fixture {
  std::string law;
  std::string description;
  std::function<Reports()> run;
};

VCategoryData product_vcategory() {
  return self_vcategory(product_base(build_cyc(3), build_bool()));
}

ClosedBimoduleData completed(const ClosedVModuleData& cm) {
  return bimodule_completion(cm, *cm.tensor_closed.module.v.symmetry);
}

const ObjectRef kStar("*");
const ObjectRef kP0("(*,0)"), kP1("(*,1)");

std::vector<Fixture> fixtures() {
  std::vector<Fixture> f;
  f.push_back({"pentagon", "CYC3 a = 1", [] {
                 MonoidalData m = build_cyc(3).monoidal;
                 m.assoc[{kStar, kStar, kStar}] = "1"_m;
                 return check_monoidal(m);
               }});
  f.push_back({"triangle", "CYC3 l = 1", [] {
                 MonoidalData m = build_cyc(3).monoidal;
                 m.lunit[kStar] = "1"_m;
                 return check_monoidal(m);
               }});
  f.push_back({"symmetry.invol", "CYC3 c = 1", [] {
                 BaseV b = build_cyc(3);
                 SymmetryData s = *b.symmetry;
                 s.braid[{kStar, kStar}] = "1"_m;
                 return check_symmetry(b.monoidal, s);
               }});
  for (const char* law : {"symmetry.hexagon", "symmetry.unit"})
    f.push_back({law, "CYC2 c = 1", [] {
                   BaseV b = build_cyc(2);
                   SymmetryData s = *b.symmetry;
                   s.braid[{kStar, kStar}] = "1"_m;
                   return check_symmetry(b.monoidal, s);
                 }});
  f.push_back({"closed.bijection", "BOOL [1,0] = 1", [] {
                 BaseV b = build_bool();
                 ClosedData cl = *b.closed;
                 cl.hom[{"1"_o, "0"_o}] = "1"_o;
                 return check_closed(b.monoidal, cl);
               }});
  f.push_back({"vcat.assoc", "self V-category of CYC3xBOOL, b((*,0),(*,1),(*,0)) = (1,m01)", [] {
                 VCategoryData vc = product_vcategory();
                 vc.comp[{kP0, kP1, kP0}] = MorphismRef("(1,m01)");
                 return check_vcategory(vc);
               }});
  f.push_back({"vcat.unit", "self V-category of CYC3, j = 1", [] {
                 VCategoryData vc = self_vcategory(build_cyc(3));
                 vc.unit[kStar] = "1"_m;
                 return check_vcategory(vc);
               }});
  f.push_back({"vstructure.assoc", "self V-structure of CYC3xBOOL, b((*,0),(*,1),(*,0)) = (1,m01)", [] {
                 VStructureData vs =
                     self_vstructure(product_base(build_cyc(3), build_bool()));
                 vs.comp[{kP0, kP1, kP0}] = MorphismRef("(1,m01)");
                 return check_vstructure(vs);
               }});
  for (const char* law : {"vstructure.left-action", "vstructure.right-action"})
    f.push_back({law, "self V-structure of CYC3, b = 1", [] {
                   VStructureData vs = self_vstructure(build_cyc(3));
                   vs.comp[{kStar, kStar, kStar}] = "1"_m;
                   return check_vstructure(vs);
                 }});
  f.push_back({"cylinder.cp1-1", "self cylinder of CYC3, alpha = 1", [] {
                 BaseV b = build_cyc(3);
                 CylinderAssignment cyl = self_cylinder(b);
                 cyl.entries.at({kStar, kStar}).alpha = "1"_m;
                 return check_cylinder(self_vstructure(b), cyl);
               }});
  f.push_back({"path.cp2-1-25", "self path of CYC3, psibar = 2", [] {
                 BaseV b = build_cyc(3);
                 PathAssignment pth = self_path(b);
                 pth.entries.at({kStar, kStar}).psibar[kStar] = "2"_m;
                 return check_path(self_vstructure(b), *b.symmetry, pth);
               }});
  f.push_back({"module.assoc", "module_self(CYC3xBOOL), a((*,0),(*,0),(*,0)) = (1,id:0)", [] {
                 ClosedVModuleData cm =
                     module_self(product_base(build_cyc(3), build_bool()));
                 cm.tensor_closed.module.assoc[{kP0, kP0, kP0}] =
                     MorphismRef("(1,id:0)");
                 return check_closed_module(cm);
               }});
  f.push_back({"module.unit", "module_self(CYC3), l = 1", [] {
                 ClosedVModuleData cm = module_self(build_cyc(3));
                 cm.tensor_closed.module.lunit[kStar] = "1"_m;
                 return check_closed_module(cm);
               }});
  f.push_back({"moduleclosed.naturality", "module_self(CYC3), phi(0) = 1", [] {
                 ClosedVModuleData cm = module_self(build_cyc(3));
                 cm.tensor_closed.phi.at({kStar, kStar, kStar})["0"_m] = "1"_m;
                 return check_closed_module(cm);
               }});
  f.push_back({"bimodule.cp2-8-1", "completion over CYC3xBOOL, a^op((*,0),(*,1),(*,0)) = (1,id:1)", [] {
                 BaseV p = product_base(build_cyc(3), build_bool());
                 ClosedBimoduleData bm = completed(module_self(p));
                 bm.co_assoc[{kP0, kP1, kP0}] = MorphismRef("(1,id:1)");
                 return check_closed_bimodule(bm, *p.symmetry);
               }});
  f.push_back({"bimodule.cp2-8-2", "completion over CYC2, a^op = 1", [] {
                 BaseV b = build_cyc(2);
                 ClosedBimoduleData bm = completed(module_self(b));
                 bm.co_assoc[{kStar, kStar, kStar}] = "1"_m;
                 return check_closed_bimodule(bm, *b.symmetry);
               }});
  f.push_back({"bimodule.cp2-8-3", "completion over CYC2, l^op = 1", [] {
                 BaseV b = build_cyc(2);
                 ClosedBimoduleData bm = completed(module_self(b));
                 bm.co_lunit[kStar] = "1"_m;
                 return check_closed_bimodule(bm, *b.symmetry);
               }});
  f.push_back({"comodule.assoc", "completion over CYC3xBOOL, a^op((*,0),(*,0),(*,0)) = (1,id:1)", [] {
                 BaseV p = product_base(build_cyc(3), build_bool());
                 ClosedBimoduleData bm = completed(module_self(p));
                 bm.co_assoc[{kP0, kP0, kP0}] = MorphismRef("(1,id:1)");
                 return check_closed_bimodule(bm, *p.symmetry);
               }});
  f.push_back({"comodule.unit", "completion over CYC2, l^op = 1", [] {
                 BaseV b = build_cyc(2);
                 ClosedBimoduleData bm = completed(module_self(b));
                 bm.co_lunit[kStar] = "1"_m;
                 return check_closed_bimodule(bm, *b.symmetry);
               }});
  return f;
}

void criterion8(Verdict& v) {
  std::vector<Fixture> fx = fixtures();
  std::set<std::string> covered;
  for (const auto& f : fx) {
    Reports r = f.run();
    bool hit = false;
    for (const auto& x : r)
      hit = hit || (x.law == f.law && oracle::well_formed(x));
    v.require(hit, f.law + " not triggered by " + f.description);
    std::string also;
    for (const auto& l : oracle::laws(r))
      if (l != f.law) also += (also.empty() ? "" : " ") + l;
    v.notes.push_back(f.law + " <- " + f.description +
                      (also.empty() ? "" : " [also: " + also + "]"));
    covered.insert(f.law);
  }
  for (auto law : registry_laws())
    v.require(covered.count(std::string(law)) == 1,
              "no fixture for " + std::string(law));
}

// ---- criterion 9 ----------------------------------------------------------

std::vector<Document> construction_outputs() {
  std::vector<Document> out;
  for (const auto& [name, b] : coherence_bases()) {
    VStructureData vs = self_vstructure(b);
    VCategoryData vc = associated_vcategory(vs);
    out.push_back(Document{vc});
    out.push_back(Document{underlying_category(vc).second});
    out.push_back(
        Document{TensoredDoc{vc, cylinder_to_tensored(vs, self_cylinder(b))}});
    out.push_back(Document{cylinder_to_module(vs, self_cylinder(b))});
  }
  for (const auto& [name, cm] : criterion5_modules()) {
    CylinderSide side = module_to_cylinder(cm.tensor_closed);
    out.push_back(Document{CylinderDoc{side.vs, side.cyl}});
    out.push_back(Document{induced_vstructure(cm.tensor_closed)});
    out.push_back(Document{completed(cm)});
  }
  return out;
}

void criterion9(Verdict& v) {
  std::size_t docs = 0;
  auto stable = [&](const Document& d, const std::string& what) {
    std::string text = serialize_document(d);
    Document back = parse_document(text);
    v.require(back == d && serialize_document(back) == text, what);
    ++docs;
  };
  for (const auto& name : cli::builtin_examples())
    stable(cli::builtin_document(name), "builtin " + name);
  for (const auto& [name, b] : coherence_bases()) stable(Document{b}, name);
  for (const auto& d : construction_outputs())
    stable(d, "construction output " + std::string(d.kind()));

  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  for (const auto& [name, cm] : criterion5_modules()) {
    const std::filesystem::path file = dir / ("encat_acceptance_" +
                                              std::to_string(docs++) + ".json");
    std::ofstream(file) << serialize_document(Document{cm});
    std::ostringstream out, err;
    int code = cli::run({"roundtrip", file.string(), "--pair", "module-cylinder"},
                        out, err);
    std::filesystem::remove(file);
    v.require(code == 0, name + " CLI roundtrip exit " + std::to_string(code) +
                             " " + err.str());
  }
  v.notes.push_back(std::to_string(docs) + " documents");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Verdict&)>> criteria = {
      {"builtin bases satisfy the monoidal, symmetry and closed laws",
       criterion1},
      {"derived-lemma checks are clean on passing instances", criterion2},
      {"underlying after associated round trips", criterion3},
      {"tensored_to_cylinder after cylinder_to_tensored is the identity",
       criterion4},
      {"module-cylinder round trips", criterion5},
      {"bimodule completion", criterion6},
      {"unique witnesses for cylinder isos and induced tensors", criterion7},
      {"mutation sensitivity of every registry law", criterion8},
      {"format stability and CLI roundtrip", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = v.problems.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first;
    if (!v.notes.empty() && v.notes.size() <= 2) {
      std::cout << " (";
      for (std::size_t k = 0; k < v.notes.size(); ++k)
        std::cout << (k ? "; " : "") << v.notes[k];
      std::cout << ")";
    }
    std::cout << "\n";
    if (v.notes.size() > 2)
      for (const auto& n : v.notes) std::cout << "    " << n << "\n";
    for (const auto& p : v.problems) std::cout << "    failed: " << p << "\n";
  }
  return all ? 0 : 1;
}
