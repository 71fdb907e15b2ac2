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

#include "encat/document.hpp"

#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "check_util.hpp"
#include "encat/errors.hpp"
#include "json.hpp"

namespace encat {

namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;
using Code = DocumentError::Code;

constexpr std::array<std::string_view, 11> kKinds = {
    "fincategory", "monoidal",     "vcategory",    "vstructure",
    "cylinder",    "path",         "tensored",     "vmodule",
    "tensorclosed", "closedmodule", "bimodule"};

// ---- reading --------------------------------------------------------------

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(Code code, const std::string& what,
                         const std::string& token, std::size_t occurrence = 1,
                         const std::string& path = {}) const {
    std::size_t off = locate(token, occurrence);
    auto [line, col] = line_col(off);
    std::string msg = what;
    if (!path.empty()) msg += " at " + path;
    if (line) msg += " (line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ")";
    throw DocumentError(code, msg, line, col, token);
  }

  std::pair<std::size_t, std::size_t> line_col(std::size_t off) const {
    if (off == std::string::npos || off > text_.size()) return {0, 0};
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < off; ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  const Json& member(const Json& j, const char* key,
                     const std::string& path) const {
    if (!j.is_object()) fail(Code::kSchema, "expected an object", "", 1, path);
    auto it = j.find(key);
    if (it == j.end())
      fail(Code::kSchema, std::string("missing key '") + key + "'", key, 1,
           path);
    return *it;
  }

  const Json* optional_member(const Json& j, const char* key) const {
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  }

  std::string str(const Json& j, const std::string& path) const {
    if (!j.is_string()) fail(Code::kSchema, "expected a string", "", 1, path);
    return j.get<std::string>();
  }

  // Rows of exactly n strings.
  std::vector<std::vector<std::string>> rows(const Json& j, std::size_t n,
                                             const std::string& path) const {
    if (!j.is_array()) fail(Code::kSchema, "expected an array", "", 1, path);
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string p = path + "/" + std::to_string(i);
      const Json& r = j[i];
      if (!r.is_array() || r.size() != n)
        fail(Code::kSchema,
             "expected a row of " + std::to_string(n) + " strings", "", 1, p);
      std::vector<std::string> row;
      for (std::size_t k = 0; k < n; ++k) row.push_back(str(r[k], p));
      out.push_back(std::move(row));
    }
    return out;
  }

  std::vector<std::string> strings(const Json& j,
                                   const std::string& path) const {
    if (!j.is_array()) fail(Code::kSchema, "expected an array", "", 1, path);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(str(j[i], path + "/" + std::to_string(i)));
    return out;
  }

 private:
  // Offset of the n-th occurrence of the token as a JSON string literal.
  std::size_t locate(const std::string& token, std::size_t occurrence) const {
    if (token.empty()) return std::string::npos;
    const std::string needle = Json(token).dump();
    std::size_t pos = std::string::npos, from = 0;
    for (std::size_t i = 0; i < occurrence; ++i) {
      pos = text_.find(needle, from);
      if (pos == std::string::npos) return pos;
      from = pos + 1;
    }
    return pos;
  }

  std::string_view text_;
};

ObjectRef obj(const Reader& rd, const FinCategory& c, const std::string& id,
              const std::string& path) {
  ObjectRef x(id);
  if (!c.has_object(x))
    rd.fail(Code::kUnresolved, "undeclared object '" + id + "'", id, 1, path);
  return x;
}

MorphismRef mor(const Reader& rd, const FinCategory& c, const std::string& id,
                const std::string& path) {
  MorphismRef f(id);
  if (!c.has_morphism(f))
    rd.fail(Code::kUnresolved, "undeclared morphism '" + id + "'", id, 1,
            path);
  return f;
}

// Inserts or reports a duplicate table key.
template <class M, class K, class V>
void put(const Reader& rd, M& map, K key, V value, const std::string& token,
         const std::string& path) {
  if (!map.emplace(std::move(key), std::move(value)).second)
    rd.fail(Code::kDuplicate, "duplicate entry '" + token + "'", token, 2,
            path);
}

FinCategory read_category(const Reader& rd, const Json& j,
                          const std::string& path) {
  std::set<ObjectRef> objects;
  for (const auto& id : rd.strings(rd.member(j, "objects", path), path)) {
    if (!objects.insert(ObjectRef(id)).second)
      rd.fail(Code::kDuplicate, "duplicate object id '" + id + "'", id, 2,
              path + "/objects");
  }
  std::map<MorphismRef, Arrow> morphisms;
  const std::string mp = path + "/morphisms";
  for (const auto& r : rd.rows(rd.member(j, "morphisms", path), 3, mp)) {
    for (int i = 1; i <= 2; ++i)
      if (!objects.count(ObjectRef(r[i])))
        rd.fail(Code::kUnresolved, "undeclared object '" + r[i] + "'", r[i],
                1, mp);
    if (!morphisms.emplace(MorphismRef(r[0]),
                           Arrow{ObjectRef(r[1]), ObjectRef(r[2])})
             .second)
      rd.fail(Code::kDuplicate, "duplicate morphism id '" + r[0] + "'", r[0],
              2, mp);
  }
  auto known = [&](const std::string& id, const std::string& p) {
    if (!morphisms.count(MorphismRef(id)))
      rd.fail(Code::kUnresolved, "undeclared morphism '" + id + "'", id, 1, p);
    return MorphismRef(id);
  };
  std::map<ObjectRef, MorphismRef> ids;
  const std::string ip = path + "/identities";
  for (const auto& r : rd.rows(rd.member(j, "identities", path), 2, ip)) {
    if (!objects.count(ObjectRef(r[0])))
      rd.fail(Code::kUnresolved, "undeclared object '" + r[0] + "'", r[0], 1,
              ip);
    put(rd, ids, ObjectRef(r[0]), known(r[1], ip), r[0], ip);
  }
  std::map<MorPair, MorphismRef> comp;
  const std::string cp = path + "/composition";
  for (const auto& r : rd.rows(rd.member(j, "composition", path), 3, cp))
    put(rd, comp, MorPair{known(r[0], cp), known(r[1], cp)}, known(r[2], cp),
        r[0], cp);
  try {
    return FinCategory(std::move(objects), std::move(morphisms), std::move(ids),
                       std::move(comp));
  } catch (const MalformedReference& e) {
    rd.fail(Code::kSchema, e.what(), "", 1, path);
  }
}

BifunctorData read_bifunctor(const Reader& rd, const Json& j,
                             const std::string& path, const FinCategory& a,
                             const FinCategory& b, const FinCategory& c) {
  BifunctorData f;
  const std::string op = path + "/objects";
  for (const auto& r : rd.rows(rd.member(j, "objects", path), 3, op))
    put(rd, f.on_objects, ObjPair{obj(rd, a, r[0], op), obj(rd, b, r[1], op)},
        obj(rd, c, r[2], op), r[0], op);
  const std::string mp = path + "/morphisms";
  for (const auto& r : rd.rows(rd.member(j, "morphisms", path), 3, mp))
    put(rd, f.on_morphisms,
        MorPair{mor(rd, a, r[0], mp), mor(rd, b, r[1], mp)},
        mor(rd, c, r[2], mp), r[0], mp);
  return f;
}

BaseV read_base(const Reader& rd, const Json& j, const std::string& path) {
  BaseV v;
  MonoidalData& m = v.monoidal;
  m.base = read_category(rd, rd.member(j, "category", path), path + "/category");
  const FinCategory& c = m.base;
  m.tensor = read_bifunctor(rd, rd.member(j, "tensor", path), path + "/tensor",
                            c, c, c);
  m.unit = obj(rd, c, rd.str(rd.member(j, "unit", path), path + "/unit"),
               path + "/unit");
  const std::string ap = path + "/assoc";
  for (const auto& r : rd.rows(rd.member(j, "assoc", path), 4, ap))
    put(rd, m.assoc,
        ObjTriple{obj(rd, c, r[0], ap), obj(rd, c, r[1], ap),
                  obj(rd, c, r[2], ap)},
        mor(rd, c, r[3], ap), r[0], ap);
  for (const char* key : {"lunit", "runit"}) {
    const std::string p = path + "/" + key;
    auto& table = std::string(key) == "lunit" ? m.lunit : m.runit;
    for (const auto& r : rd.rows(rd.member(j, key, path), 2, p))
      put(rd, table, obj(rd, c, r[0], p), mor(rd, c, r[1], p), r[0], p);
  }
  if (const Json* s = rd.optional_member(j, "symmetry")) {
    SymmetryData sym;
    const std::string p = path + "/symmetry";
    for (const auto& r : rd.rows(*s, 3, p))
      put(rd, sym.braid, ObjPair{obj(rd, c, r[0], p), obj(rd, c, r[1], p)},
          mor(rd, c, r[2], p), r[0], p);
    v.symmetry = std::move(sym);
  }
  if (const Json* cj = rd.optional_member(j, "closed")) {
    ClosedData cl;
    const std::string p = path + "/closed";
    const std::string hp = p + "/hom";
    for (const auto& r : rd.rows(rd.member(*cj, "hom", p), 3, hp))
      put(rd, cl.hom, ObjPair{obj(rd, c, r[0], hp), obj(rd, c, r[1], hp)},
          obj(rd, c, r[2], hp), r[0], hp);
    const std::string ep = p + "/eval";
    for (const auto& r : rd.rows(rd.member(*cj, "eval", p), 3, ep))
      put(rd, cl.eval, ObjPair{obj(rd, c, r[0], ep), obj(rd, c, r[1], ep)},
          mor(rd, c, r[2], ep), r[0], ep);
    v.closed = std::move(cl);
  }
  return v;
}

VCategoryData read_vcategory(const Reader& rd, const Json& j,
                             const std::string& path) {
  VCategoryData vc;
  vc.v = read_base(rd, rd.member(j, "base", path), path + "/base");
  const FinCategory& c = vc.v.monoidal.base;
  const std::string op = path + "/objects";
  for (const auto& id : rd.strings(rd.member(j, "objects", path), op))
    if (!vc.objects.insert(ObjectRef(id)).second)
      rd.fail(Code::kDuplicate, "duplicate object id '" + id + "'", id, 2, op);
  auto own = [&](const std::string& id, const std::string& p) {
    if (!vc.objects.count(ObjectRef(id)))
      rd.fail(Code::kUnresolved, "undeclared object '" + id + "'", id, 1, p);
    return ObjectRef(id);
  };
  const std::string hp = path + "/hom";
  for (const auto& r : rd.rows(rd.member(j, "hom", path), 3, hp))
    put(rd, vc.hom, ObjPair{own(r[0], hp), own(r[1], hp)},
        obj(rd, c, r[2], hp), r[0], hp);
  const std::string cp = path + "/composition";
  for (const auto& r : rd.rows(rd.member(j, "composition", path), 4, cp))
    put(rd, vc.comp, ObjTriple{own(r[0], cp), own(r[1], cp), own(r[2], cp)},
        mor(rd, c, r[3], cp), r[0], cp);
  const std::string up = path + "/unit";
  for (const auto& r : rd.rows(rd.member(j, "unit", path), 2, up))
    put(rd, vc.unit, own(r[0], up), mor(rd, c, r[1], up), r[0], up);
  return vc;
}

VStructureData read_vstructure(const Reader& rd, const Json& j,
                               const std::string& path) {
  VStructureData vs;
  vs.v = read_base(rd, rd.member(j, "base", path), path + "/base");
  vs.base =
      read_category(rd, rd.member(j, "category", path), path + "/category");
  const FinCategory& s = vs.base;
  const FinCategory& c = vs.vcat();
  vs.hom = read_bifunctor(rd, rd.member(j, "hom", path), path + "/hom", s, s,
                          c);
  const std::string cp = path + "/composition";
  for (const auto& r : rd.rows(rd.member(j, "composition", path), 4, cp))
    put(rd, vs.comp,
        ObjTriple{obj(rd, s, r[0], cp), obj(rd, s, r[1], cp),
                  obj(rd, s, r[2], cp)},
        mor(rd, c, r[3], cp), r[0], cp);
  for (const auto& x : s.objects())
    for (const auto& y : s.objects()) vs.phi[{x, y}];
  const std::string pp = path + "/phi";
  for (const auto& r : rd.rows(rd.member(j, "phi", path), 4, pp)) {
    MorphismMap& t = vs.phi[{obj(rd, s, r[0], pp), obj(rd, s, r[1], pp)}];
    put(rd, t, mor(rd, s, r[2], pp), mor(rd, c, r[3], pp), r[2], pp);
  }
  return vs;
}

template <class Entry>
void read_entries(const Reader& rd, const Json& j, const std::string& path,
                  const char* list_key, const char* morph_key,
                  const char* iso_key, const FinCategory& vcat,
                  const std::set<ObjectRef>& xs,
                  std::map<ObjPair, Entry>& out,
                  MorphismRef Entry::*morph,
                  std::map<ObjectRef, MorphismRef> Entry::*iso) {
  auto x_obj = [&](const std::string& id, const std::string& p) {
    if (!xs.count(ObjectRef(id)))
      rd.fail(Code::kUnresolved, "undeclared object '" + id + "'", id, 1, p);
    return ObjectRef(id);
  };
  const std::string lp = path + "/" + list_key;
  const std::size_t width = morph_key ? 4 : 3;
  for (const auto& r : rd.rows(rd.member(j, list_key, path), width, lp)) {
    Entry e;
    e.obj = x_obj(r[2], lp);
    if (morph) e.*morph = mor(rd, vcat, r[3], lp);
    put(rd, out, ObjPair{obj(rd, vcat, r[0], lp), x_obj(r[1], lp)},
        std::move(e), r[0], lp);
  }
  const std::string ip = path + "/" + iso_key;
  for (const auto& r : rd.rows(rd.member(j, iso_key, path), 4, ip)) {
    auto it = out.find({obj(rd, vcat, r[0], ip), x_obj(r[1], ip)});
    if (it == out.end())
      rd.fail(Code::kUnresolved, "no entry declared for (" + r[0] + "," +
                                     r[1] + ")",
              r[0], 1, ip);
    put(rd, it->second.*iso, x_obj(r[2], ip), mor(rd, vcat, r[3], ip), r[2],
        ip);
  }
}

VModuleData read_vmodule(const Reader& rd, const Json& j,
                         const std::string& path) {
  VModuleData m;
  m.v = read_base(rd, rd.member(j, "base", path), path + "/base");
  m.base = read_category(rd, rd.member(j, "category", path), path + "/category");
  const FinCategory& s = m.base;
  const FinCategory& c = m.vcat();
  m.action = read_bifunctor(rd, rd.member(j, "action", path),
                            path + "/action", c, s, s);
  const std::string ap = path + "/assoc";
  for (const auto& r : rd.rows(rd.member(j, "assoc", path), 4, ap))
    put(rd, m.assoc,
        ObjTriple{obj(rd, c, r[0], ap), obj(rd, c, r[1], ap),
                  obj(rd, s, r[2], ap)},
        mor(rd, s, r[3], ap), r[0], ap);
  const std::string lp = path + "/lunit";
  for (const auto& r : rd.rows(rd.member(j, "lunit", path), 2, lp))
    put(rd, m.lunit, obj(rd, s, r[0], lp), mor(rd, s, r[1], lp), r[0], lp);
  return m;
}

// Rows (k, x, y, f, g) into tables keyed by (k, x, y), total on keys.
std::map<ObjTriple, MorphismMap> read_adjunction(const Reader& rd,
                                                 const Json& j,
                                                 const std::string& path,
                                                 const FinCategory& v,
                                                 const FinCategory& s) {
  std::map<ObjTriple, MorphismMap> out;
  for (const auto& k : v.objects())
    for (const auto& x : s.objects())
      for (const auto& y : s.objects()) out[{k, x, y}];
  for (const auto& r : rd.rows(j, 5, path)) {
    MorphismMap& t = out[{obj(rd, v, r[0], path), obj(rd, s, r[1], path),
                          obj(rd, s, r[2], path)}];
    put(rd, t, mor(rd, s, r[3], path), mor(rd, v, r[4], path), r[3], path);
  }
  return out;
}

TensorClosedModuleData read_tensorclosed(const Reader& rd, const Json& j,
                                         const std::string& path) {
  TensorClosedModuleData tc;
  tc.module = read_vmodule(rd, rd.member(j, "module", path), path + "/module");
  const FinCategory& s = tc.base();
  tc.hom = read_bifunctor(rd, rd.member(j, "hom", path), path + "/hom", s, s,
                          tc.vcat());
  tc.phi = read_adjunction(rd, rd.member(j, "phi", path), path + "/phi",
                           tc.vcat(), s);
  return tc;
}

ClosedVModuleData read_closedmodule(const Reader& rd, const Json& j,
                                    const std::string& path) {
  ClosedVModuleData cm;
  cm.tensor_closed = read_tensorclosed(rd, rd.member(j, "tensorclosed", path),
                                       path + "/tensorclosed");
  const FinCategory& s = cm.tensor_closed.base();
  const FinCategory& v = cm.tensor_closed.vcat();
  cm.cotensor = read_bifunctor(rd, rd.member(j, "cotensor", path),
                               path + "/cotensor", v, s, s);
  cm.psi = read_adjunction(rd, rd.member(j, "psi", path), path + "/psi", v, s);
  return cm;
}

ClosedBimoduleData read_bimodule(const Reader& rd, const Json& j,
                                 const std::string& path) {
  ClosedBimoduleData bm;
  bm.closed_module = read_closedmodule(rd, rd.member(j, "closedmodule", path),
                                       path + "/closedmodule");
  const FinCategory& s = bm.closed_module.tensor_closed.base();
  const FinCategory& v = bm.closed_module.tensor_closed.vcat();
  const std::string ap = path + "/coassoc";
  for (const auto& r : rd.rows(rd.member(j, "coassoc", path), 4, ap))
    put(rd, bm.co_assoc,
        ObjTriple{obj(rd, v, r[0], ap), obj(rd, v, r[1], ap),
                  obj(rd, s, r[2], ap)},
        mor(rd, s, r[3], ap), r[0], ap);
  const std::string lp = path + "/colunit";
  for (const auto& r : rd.rows(rd.member(j, "colunit", path), 2, lp))
    put(rd, bm.co_lunit, obj(rd, s, r[0], lp), mor(rd, s, r[1], lp), r[0], lp);
  return bm;
}

// ---- writing --------------------------------------------------------------

OJson row(std::initializer_list<std::string> xs) {
  OJson r = OJson::array();
  for (const auto& x : xs) r.push_back(x);
  return r;
}

OJson write_category(const FinCategory& c) {
  OJson j;
  OJson objs = OJson::array();
  for (const auto& x : c.objects()) objs.push_back(x.str());
  j["objects"] = objs;
  OJson mors = OJson::array();
  for (const auto& [f, a] : c.morphisms())
    mors.push_back(row({f.str(), a.src.str(), a.dst.str()}));
  j["morphisms"] = mors;
  OJson ids = OJson::array();
  for (const auto& [x, f] : c.identities()) ids.push_back(row({x.str(), f.str()}));
  j["identities"] = ids;
  OJson comp = OJson::array();
  for (const auto& [fg, h] : c.comp_table())
    comp.push_back(row({fg.first.str(), fg.second.str(), h.str()}));
  j["composition"] = comp;
  return j;
}

OJson write_bifunctor(const BifunctorData& f) {
  OJson j;
  OJson objs = OJson::array();
  for (const auto& [xy, z] : f.on_objects)
    objs.push_back(row({xy.first.str(), xy.second.str(), z.str()}));
  j["objects"] = objs;
  OJson mors = OJson::array();
  for (const auto& [fg, h] : f.on_morphisms)
    mors.push_back(row({fg.first.str(), fg.second.str(), h.str()}));
  j["morphisms"] = mors;
  return j;
}

template <class V>
OJson triples(const std::map<ObjTriple, V>& t) {
  OJson out = OJson::array();
  for (const auto& [k, v] : t)
    out.push_back(row({std::get<0>(k).str(), std::get<1>(k).str(),
                       std::get<2>(k).str(), v.str()}));
  return out;
}

template <class V>
OJson pairs(const std::map<ObjPair, V>& t) {
  OJson out = OJson::array();
  for (const auto& [k, v] : t)
    out.push_back(row({k.first.str(), k.second.str(), v.str()}));
  return out;
}

template <class K, class V>
OJson singles(const std::map<K, V>& t) {
  OJson out = OJson::array();
  for (const auto& [k, v] : t) out.push_back(row({k.str(), v.str()}));
  return out;
}

OJson write_base(const BaseV& v) {
  const MonoidalData& m = v.monoidal;
  OJson j;
  j["category"] = write_category(m.base);
  j["tensor"] = write_bifunctor(m.tensor);
  j["unit"] = m.unit.str();
  j["assoc"] = triples(m.assoc);
  j["lunit"] = singles(m.lunit);
  j["runit"] = singles(m.runit);
  if (v.symmetry) j["symmetry"] = pairs(v.symmetry->braid);
  if (v.closed) {
    OJson c;
    c["hom"] = pairs(v.closed->hom);
    c["eval"] = pairs(v.closed->eval);
    j["closed"] = c;
  }
  return j;
}

OJson write_vcategory(const VCategoryData& vc) {
  OJson j;
  j["base"] = write_base(vc.v);
  OJson objs = OJson::array();
  for (const auto& x : vc.objects) objs.push_back(x.str());
  j["objects"] = objs;
  j["hom"] = pairs(vc.hom);
  j["composition"] = triples(vc.comp);
  j["unit"] = singles(vc.unit);
  return j;
}

OJson write_vstructure(const VStructureData& vs) {
  OJson j;
  j["base"] = write_base(vs.v);
  j["category"] = write_category(vs.base);
  j["hom"] = write_bifunctor(vs.hom);
  j["composition"] = triples(vs.comp);
  OJson phi = OJson::array();
  for (const auto& [xy, t] : vs.phi)
    for (const auto& [f, g] : t)
      phi.push_back(row({xy.first.str(), xy.second.str(), f.str(), g.str()}));
  j["phi"] = phi;
  return j;
}

template <class Entry>
void write_entries(OJson& j, const std::map<ObjPair, Entry>& entries,
                   const char* list_key, const char* iso_key,
                   const MorphismRef* (*morph)(const Entry&),
                   const std::map<ObjectRef, MorphismRef>& (*iso)(const Entry&)) {
  OJson list = OJson::array();
  OJson isos = OJson::array();
  for (const auto& [kx, e] : entries) {
    const MorphismRef* m = morph(e);
    if (m)
      list.push_back(
          row({kx.first.str(), kx.second.str(), e.obj.str(), m->str()}));
    else
      list.push_back(row({kx.first.str(), kx.second.str(), e.obj.str()}));
    for (const auto& [y, f] : iso(e))
      isos.push_back(
          row({kx.first.str(), kx.second.str(), y.str(), f.str()}));
  }
  j[list_key] = list;
  j[iso_key] = isos;
}

OJson write_adjunction(const std::map<ObjTriple, MorphismMap>& t) {
  OJson out = OJson::array();
  for (const auto& [k, m] : t)
    for (const auto& [f, g] : m)
      out.push_back(row({std::get<0>(k).str(), std::get<1>(k).str(),
                         std::get<2>(k).str(), f.str(), g.str()}));
  return out;
}

OJson write_vmodule(const VModuleData& m) {
  OJson j;
  j["base"] = write_base(m.v);
  j["category"] = write_category(m.base);
  j["action"] = write_bifunctor(m.action);
  j["assoc"] = triples(m.assoc);
  j["lunit"] = singles(m.lunit);
  return j;
}

OJson write_tensorclosed(const TensorClosedModuleData& tc) {
  OJson j;
  j["module"] = write_vmodule(tc.module);
  j["hom"] = write_bifunctor(tc.hom);
  j["phi"] = write_adjunction(tc.phi);
  return j;
}

OJson write_closedmodule(const ClosedVModuleData& cm) {
  OJson j;
  j["tensorclosed"] = write_tensorclosed(cm.tensor_closed);
  j["cotensor"] = write_bifunctor(cm.cotensor);
  j["psi"] = write_adjunction(cm.psi);
  return j;
}

// Scalars and arrays of scalars stay on one line; everything else is
// indented by two spaces per level.
void emit(const OJson& j, std::string& out, int depth) {
  auto flat = [](const OJson& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + OJson(k).dump() + ": ";
      emit(v, out, depth + 1);
    }
    out += "\n" + close + "}";
  } else if (j.is_array() && !flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      emit(j[i], out, depth + 1);
    }
    out += "\n" + close + "]";
  } else if (j.is_array()) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += j[i].dump();
    }
    out += "]";
  } else {
    out += j.dump();
  }
}

const MorphismRef* cyl_alpha(const CylinderEntry& e) { return &e.alpha; }
const std::map<ObjectRef, MorphismRef>& cyl_phibar(const CylinderEntry& e) {
  return e.phibar;
}
const MorphismRef* path_beta(const PathEntry& e) { return &e.beta; }
const std::map<ObjectRef, MorphismRef>& path_psibar(const PathEntry& e) {
  return e.psibar;
}
const MorphismRef* no_morph(const TensorEntry&) { return nullptr; }
const std::map<ObjectRef, MorphismRef>& tensor_phibar(const TensorEntry& e) {
  return e.phibar;
}

}  // namespace

std::string_view Document::kind() const { return kKinds[body.index()]; }

Document parse_document(std::string_view text) {
  Reader rd(text);
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    auto [line, col] = rd.line_col(off);
    std::string token =
        off < text.size() ? std::string(1, text[off]) : std::string("<eof>");
    throw DocumentError(Code::kSyntax,
                        "syntax error at line " + std::to_string(line) +
                            ", column " + std::to_string(col) + " near '" +
                            token + "'",
                        line, col, token);
  }
  if (!j.is_object()) rd.fail(Code::kSchema, "document is not an object", "");
  const std::string version = rd.str(rd.member(j, "format", ""), "/format");
  if (version != kFormatVersion)
    rd.fail(Code::kVersion,
            "unsupported format '" + version + "', expected '" +
                std::string(kFormatVersion) + "'",
            version);
  const std::string kind = rd.str(rd.member(j, "kind", ""), "/kind");
  const Json& body = rd.member(j, "body", "");
  const std::string p = "/body";
  Document doc;
  if (kind == "fincategory") {
    doc.body = read_category(rd, body, p);
  } else if (kind == "monoidal") {
    doc.body = read_base(rd, body, p);
  } else if (kind == "vcategory") {
    doc.body = read_vcategory(rd, body, p);
  } else if (kind == "vstructure") {
    doc.body = read_vstructure(rd, body, p);
  } else if (kind == "cylinder") {
    CylinderDoc d;
    d.vs = read_vstructure(rd, rd.member(body, "vstructure", p),
                           p + "/vstructure");
    read_entries(rd, body, p, "cylinders", "alpha", "phibar", d.vs.vcat(),
                 d.vs.base.objects(), d.cyl.entries, &CylinderEntry::alpha,
                 &CylinderEntry::phibar);
    doc.body = std::move(d);
  } else if (kind == "path") {
    PathDoc d;
    d.vs = read_vstructure(rd, rd.member(body, "vstructure", p),
                           p + "/vstructure");
    read_entries(rd, body, p, "paths", "beta", "psibar", d.vs.vcat(),
                 d.vs.base.objects(), d.path.entries, &PathEntry::beta,
                 &PathEntry::psibar);
    doc.body = std::move(d);
  } else if (kind == "tensored") {
    TensoredDoc d;
    d.vc = read_vcategory(rd, rd.member(body, "vcategory", p),
                          p + "/vcategory");
    read_entries<TensorEntry>(rd, body, p, "tensors", nullptr, "phibar",
                              d.vc.vcat(), d.vc.objects, d.tensors.entries,
                              nullptr, &TensorEntry::phibar);
    doc.body = std::move(d);
  } else if (kind == "vmodule") {
    doc.body = read_vmodule(rd, body, p);
  } else if (kind == "tensorclosed") {
    doc.body = read_tensorclosed(rd, body, p);
  } else if (kind == "closedmodule") {
    doc.body = read_closedmodule(rd, body, p);
  } else if (kind == "bimodule") {
    doc.body = read_bimodule(rd, body, p);
  } else {
    rd.fail(Code::kSchema, "unknown kind '" + kind + "'", kind);
  }
  return doc;
}

std::string serialize_document(const Document& doc) {
  OJson body = std::visit(
      [](const auto& d) -> OJson {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FinCategory>) {
          return write_category(d);
        } else if constexpr (std::is_same_v<T, BaseV>) {
          return write_base(d);
        } else if constexpr (std::is_same_v<T, VCategoryData>) {
          return write_vcategory(d);
        } else if constexpr (std::is_same_v<T, VStructureData>) {
          return write_vstructure(d);
        } else if constexpr (std::is_same_v<T, CylinderDoc>) {
          OJson j;
          j["vstructure"] = write_vstructure(d.vs);
          write_entries<CylinderEntry>(j, d.cyl.entries, "cylinders", "phibar",
                                       cyl_alpha, cyl_phibar);
          return j;
        } else if constexpr (std::is_same_v<T, PathDoc>) {
          OJson j;
          j["vstructure"] = write_vstructure(d.vs);
          write_entries<PathEntry>(j, d.path.entries, "paths", "psibar",
                                   path_beta, path_psibar);
          return j;
        } else if constexpr (std::is_same_v<T, TensoredDoc>) {
          OJson j;
          j["vcategory"] = write_vcategory(d.vc);
          write_entries<TensorEntry>(j, d.tensors.entries, "tensors",
                                     "phibar", no_morph, tensor_phibar);
          return j;
        } else if constexpr (std::is_same_v<T, VModuleData>) {
          return write_vmodule(d);
        } else if constexpr (std::is_same_v<T, TensorClosedModuleData>) {
          return write_tensorclosed(d);
        } else if constexpr (std::is_same_v<T, ClosedVModuleData>) {
          return write_closedmodule(d);
        } else {
          OJson j;
          j["closedmodule"] = write_closedmodule(d.closed_module);
          j["coassoc"] = triples(d.co_assoc);
          j["colunit"] = singles(d.co_lunit);
          return j;
        }
      },
      doc.body);
  OJson top;
  top["format"] = std::string(kFormatVersion);
  top["kind"] = std::string(doc.kind());
  top["body"] = std::move(body);
  std::string out;
  emit(top, out, 0);
  out += "\n";
  return out;
}

Reports check_document(const Document& doc) {
  return std::visit(
      [](const auto& d) -> Reports {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, FinCategory>) {
          return validate_category(d);
        } else if constexpr (std::is_same_v<T, BaseV>) {
          return check_base(d);
        } else {
          const BaseV* v = nullptr;
          if constexpr (std::is_same_v<T, VCategoryData> ||
                        std::is_same_v<T, VStructureData> ||
                        std::is_same_v<T, VModuleData>)
            v = &d.v;
          else if constexpr (std::is_same_v<T, CylinderDoc> ||
                             std::is_same_v<T, PathDoc>)
            v = &d.vs.v;
          else if constexpr (std::is_same_v<T, TensoredDoc>)
            v = &d.vc.v;
          else if constexpr (std::is_same_v<T, TensorClosedModuleData>)
            v = &d.module.v;
          else if constexpr (std::is_same_v<T, ClosedVModuleData>)
            v = &d.tensor_closed.module.v;
          else
            v = &d.closed_module.tensor_closed.module.v;
          Reports base = check_base(*v);
          if (!base.empty()) return base;

          if constexpr (std::is_same_v<T, VCategoryData>) {
            return check_vcategory(d);
          } else if constexpr (std::is_same_v<T, VStructureData>) {
            return check_vstructure(d);
          } else if constexpr (std::is_same_v<T, CylinderDoc>) {
            Reports r = check_vstructure(d.vs);
            return r.empty() ? check_cylinder(d.vs, d.cyl) : r;
          } else if constexpr (std::is_same_v<T, PathDoc>) {
            Reports r = check_vstructure(d.vs);
            return r.empty() ? check_path(d.vs, v->symmetry_or_throw(), d.path)
                             : r;
          } else if constexpr (std::is_same_v<T, TensoredDoc>) {
            Reports r = check_vcategory(d.vc);
            return r.empty() ? check_tensored(d.vc, d.tensors) : r;
          } else if constexpr (std::is_same_v<T, VModuleData>) {
            return check_vmodule(d);
          } else if constexpr (std::is_same_v<T, TensorClosedModuleData>) {
            return check_tensor_closed(d);
          } else if constexpr (std::is_same_v<T, ClosedVModuleData>) {
            return check_closed_module(d);
          } else {
            return check_closed_bimodule(d, v->symmetry_or_throw());
          }
        }
      },
      doc.body);
}

}  // namespace encat
