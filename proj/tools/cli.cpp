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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "encat/equiv.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "json.hpp"

namespace encat::cli {

namespace {

BaseV builtin_base(std::string_view name) {
  auto param = [&](std::string_view prefix) {
    std::string digits(name.substr(prefix.size()));
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParameterError("bad instance parameter in '" + std::string(name) +
                           "'");
    return std::stoi(digits);
  };
  if (name == "bool") return build_bool();
  if (name.rfind("trop", 0) == 0) return build_trop(param("trop"));
  if (name.rfind("cyc", 0) == 0) return build_cyc(param("cyc"));
  throw ParameterError("unknown instance '" + std::string(name) + "'");
}

bool strip(std::string_view& name, std::string_view prefix) {
  if (name.rfind(prefix, 0) != 0) return false;
  name.remove_prefix(prefix.size());
  return true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text,
                  std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + path + "'");
  f << text;
}

bool color_enabled() {
  const char* c = std::getenv("ENCAT_COLOR");
  return c && std::string(c) == "1";
}

void print_reports(const Reports& reports, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["law"] = r.law;
      j["site"] = r.site;
      j["lhs"] = r.lhs ? nlohmann::ordered_json(r.lhs->str()) : nullptr;
      j["rhs"] = r.rhs ? nlohmann::ordered_json(r.rhs->str()) : nullptr;
      if (r.witnesses) j["witnesses"] = *r.witnesses;
      if (!r.detail.empty()) j["detail"] = r.detail;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
    return;
  }
  const bool color = color_enabled();
  for (const auto& r : reports) {
    std::ostringstream line;
    line << r;
    std::string s = line.str();
    if (color) s = "\x1b[1;31m" + r.law + "\x1b[0m" + s.substr(r.law.size());
    out << s << "\n";
  }
}

std::vector<std::string> split_laws(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// The closed module, or its tensor-closed reduct, carried by a document.
const TensorClosedModuleData* tensor_closed_of(const Document& d) {
  if (auto* tc = std::get_if<TensorClosedModuleData>(&d.body)) return tc;
  if (auto* cm = std::get_if<ClosedVModuleData>(&d.body))
    return &cm->tensor_closed;
  if (auto* bm = std::get_if<ClosedBimoduleData>(&d.body))
    return &bm->closed_module.tensor_closed;
  return nullptr;
}

const VStructureData* vstructure_of(const Document& d) {
  if (auto* vs = std::get_if<VStructureData>(&d.body)) return vs;
  if (auto* c = std::get_if<CylinderDoc>(&d.body)) return &c->vs;
  if (auto* p = std::get_if<PathDoc>(&d.body)) return &p->vs;
  return nullptr;
}

[[noreturn]] void wrong_kind(const Document& d, const std::string& what) {
  throw ParameterError("document of kind '" + std::string(d.kind()) +
                       "' cannot be used for " + what);
}

// First differing line of two canonical serializations.
std::string first_differing_line(const std::string& a, const std::string& b) {
  std::istringstream sa(a), sb(b);
  std::string la, lb;
  for (std::size_t n = 1;; ++n) {
    bool ha = static_cast<bool>(std::getline(sa, la));
    bool hb = static_cast<bool>(std::getline(sb, lb));
    if (!ha && !hb) return {};
    if (!ha) la = "<end>";
    if (!hb) lb = "<end>";
    if (la != lb)
      return "line " + std::to_string(n) + ": " + la + " | " + lb;
  }
}

Document construct(const Document& in, const std::string& op) {
  if (op == "underlying") {
    auto* vc = std::get_if<VCategoryData>(&in.body);
    if (!vc) wrong_kind(in, op);
    return Document{underlying_category(*vc).second};
  }
  if (op == "associated-vcat") {
    auto* vs = vstructure_of(in);
    if (!vs) wrong_kind(in, op);
    return Document{associated_vcategory(*vs)};
  }
  if (op == "induced-vstructure") {
    auto* tc = tensor_closed_of(in);
    if (!tc) wrong_kind(in, op);
    return Document{induced_vstructure(*tc)};
  }
  if (op == "module-to-cylinder") {
    auto* tc = tensor_closed_of(in);
    if (!tc) wrong_kind(in, op);
    CylinderSide side = module_to_cylinder(*tc);
    return Document{CylinderDoc{side.vs, side.cyl}};
  }
  if (op == "cylinder-to-module") {
    auto* c = std::get_if<CylinderDoc>(&in.body);
    if (!c) wrong_kind(in, op);
    return Document{cylinder_to_module(c->vs, c->cyl)};
  }
  if (op == "tensored-to-cylinder") {
    auto* t = std::get_if<TensoredDoc>(&in.body);
    if (!t) wrong_kind(in, op);
    return Document{CylinderDoc{underlying_category(t->vc).second,
                                tensored_to_cylinder(t->vc, t->tensors)}};
  }
  if (op == "cylinder-to-tensored") {
    auto* c = std::get_if<CylinderDoc>(&in.body);
    if (!c) wrong_kind(in, op);
    return Document{TensoredDoc{associated_vcategory(c->vs),
                                cylinder_to_tensored(c->vs, c->cyl)}};
  }
  if (op == "bimodule-complete") {
    auto* cm = std::get_if<ClosedVModuleData>(&in.body);
    if (!cm) wrong_kind(in, op);
    return Document{bimodule_completion(
        *cm, cm->tensor_closed.module.v.symmetry_or_throw())};
  }
  throw ParameterError("unknown construction '" + op + "'");
}

// Returns the two canonical texts to compare.
std::pair<std::string, std::string> roundtrip(const Document& in,
                                              const std::string& pair) {
  if (pair == "module-cylinder") {
    if (auto* tc = tensor_closed_of(in)) {
      CylinderSide side = module_to_cylinder(*tc);
      return {serialize_document(Document{*tc}),
              serialize_document(
                  Document{cylinder_to_module(side.vs, side.cyl)})};
    }
    if (auto* c = std::get_if<CylinderDoc>(&in.body)) {
      CylinderSide back = module_to_cylinder(cylinder_to_module(c->vs, c->cyl));
      return {serialize_document(in),
              serialize_document(Document{CylinderDoc{back.vs, back.cyl}})};
    }
    wrong_kind(in, "the module-cylinder round trip");
  }
  if (pair == "cylinder-tensored") {
    if (auto* c = std::get_if<CylinderDoc>(&in.body)) {
      CylinderAssignment back = tensored_to_cylinder(
          associated_vcategory(c->vs), cylinder_to_tensored(c->vs, c->cyl));
      return {serialize_document(in),
              serialize_document(Document{CylinderDoc{c->vs, back}})};
    }
    if (auto* t = std::get_if<TensoredDoc>(&in.body)) {
      VStructureData vs = underlying_category(t->vc).second;
      TensoredData back =
          cylinder_to_tensored(vs, tensored_to_cylinder(t->vc, t->tensors));
      return {serialize_document(in),
              serialize_document(Document{TensoredDoc{t->vc, back}})};
    }
    wrong_kind(in, "the cylinder-tensored round trip");
  }
  throw ParameterError("unknown pair '" + pair + "'");
}

// Input must satisfy its laws before a construction or round trip.
bool require_valid(const Document& d, std::ostream& err) {
  Reports r = check_document(d);
  if (r.empty()) return true;
  err << "input " << d.kind() << " fails " << r.size() << " law instance(s):\n";
  print_reports(r, "text", err);
  return false;
}

}  // namespace

Document builtin_document(std::string_view name) {
  std::string_view n = name;
  if (n == "poset-diamond") return Document{build_poset_module(poset_diamond())};
  if (strip(n, "vcategory-")) return Document{self_vcategory(builtin_base(n))};
  if (strip(n, "vstructure-"))
    return Document{self_vstructure(builtin_base(n))};
  if (strip(n, "cylinder-")) {
    BaseV v = builtin_base(n);
    return Document{CylinderDoc{self_vstructure(v), self_cylinder(v)}};
  }
  if (strip(n, "path-")) {
    BaseV v = builtin_base(n);
    return Document{PathDoc{self_vstructure(v), self_path(v)}};
  }
  if (strip(n, "tensored-")) {
    BaseV v = builtin_base(n);
    VStructureData vs = self_vstructure(v);
    return Document{TensoredDoc{associated_vcategory(vs),
                                cylinder_to_tensored(vs, self_cylinder(v))}};
  }
  if (strip(n, "self-")) return Document{module_self(builtin_base(n))};
  if (strip(n, "bimodule-")) {
    ClosedVModuleData cm = n == "poset-diamond"
                               ? build_poset_module(poset_diamond())
                               : module_self(builtin_base(n));
    return Document{bimodule_completion(
        cm, cm.tensor_closed.module.v.symmetry_or_throw())};
  }
  return Document{builtin_base(n)};
}

std::vector<std::string> builtin_examples() {
  return {"bool",           "trop3",         "cyc3",
          "poset-diamond",  "vcategory-bool", "vstructure-trop3",
          "cylinder-trop3", "path-bool",     "tensored-cyc3",
          "self-trop3",     "bimodule-poset-diamond"};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"encat: finite enriched category checker"};
  app.name("encat");
  app.require_subcommand(1);

  std::string file, laws, format = "text", op, output, pair, name;

  CLI::App* check = app.add_subcommand("check", "Check a document's laws");
  check->add_option("file", file, "Input document")->required();
  check->add_option("--laws", laws, "Comma separated law names to report");
  check->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cons = app.add_subcommand("construct", "Run a construction");
  cons->add_option("file", file, "Input document")->required();
  cons->add_option("--op", op, "Construction name")
      ->required()
      ->check(CLI::IsMember(
          {"underlying", "associated-vcat", "induced-vstructure",
           "module-to-cylinder", "cylinder-to-module", "tensored-to-cylinder",
           "cylinder-to-tensored", "bimodule-complete"}));
  cons->add_option("-o,--output", output, "Output document ('-' for stdout)")
      ->required();

  CLI::App* rt = app.add_subcommand("roundtrip", "Verify a round trip");
  rt->add_option("file", file, "Input document")->required();
  rt->add_option("--pair", pair, "Correspondence to run")
      ->required()
      ->check(CLI::IsMember({"module-cylinder", "cylinder-tensored"}));

  CLI::App* inst = app.add_subcommand("instance", "Emit a builtin document");
  inst->add_option("name", name, "Builtin name, e.g. bool, trop3, self-cyc3")
      ->required();
  inst->add_option("-o,--output", output, "Output document ('-' for stdout)")
      ->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*inst) {
      write_output(output, serialize_document(builtin_document(name)), out);
      return kOk;
    }
    Document doc = parse_document(read_file(file));

    if (*check) {
      std::vector<std::string> wanted = split_laws(laws);
      for (const auto& l : wanted)
        if (!is_known_law(l)) {
          err << "unknown law '" << l << "'; known laws:";
          for (auto k : known_laws()) err << " " << k;
          err << "\n";
          return kInvalidInput;
        }
      Reports reports = filter_reports(check_document(doc), wanted);
      print_reports(reports, format, out);
      if (format == "text") {
        if (reports.empty())
          out << doc.kind() << ": all laws hold\n";
        else
          out << doc.kind() << ": " << reports.size() << " failure(s)\n";
      }
      return reports.empty() ? kOk : kCheckFailed;
    }

    if (!require_valid(doc, err)) return kInvalidInput;
    if (*cons) {
      Document result;
      try {
        result = construct(doc, op);
      } catch (const WitnessError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kConstructionFailed;
      } catch (const AmbiguityError& e) {
        err << "construction failed: " << e.what() << "\n";
        return kConstructionFailed;
      }
      write_output(output, serialize_document(result), out);
      return kOk;
    }
    // roundtrip
    std::pair<std::string, std::string> texts;
    try {
      texts = roundtrip(doc, pair);
    } catch (const WitnessError& e) {
      err << "construction failed: " << e.what() << "\n";
      return kConstructionFailed;
    }
    if (texts.first == texts.second) {
      out << pair << ": equal\n";
      return kOk;
    }
    out << pair << ": unequal at "
        << first_differing_line(texts.first, texts.second) << "\n";
    return kCheckFailed;
  } catch (const EngineBug& e) {
    err << "engine bug: " << e.what() << "\n";
    print_reports(e.reports(), "text", err);
    return kEngineBug;
  } catch (const DocumentError& e) {
    err << "invalid document: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace encat::cli
