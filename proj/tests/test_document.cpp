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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "encat/document.hpp"
#include "encat/equiv.hpp"
#include "encat/errors.hpp"
#include "encat/instances.hpp"
#include "json.hpp"

using namespace encat;
using namespace encat::literals;

namespace {

std::vector<Document> construction_outputs() {
  std::vector<Document> out;
  BaseV c3 = build_cyc(3);
  VStructureData vs = self_vstructure(c3);
  out.push_back(Document{associated_vcategory(vs)});
  out.push_back(Document{underlying_category(self_vcategory(build_bool())).second});
  out.push_back(Document{TensoredDoc{associated_vcategory(vs),
                                     cylinder_to_tensored(vs, self_cylinder(c3))}});
  ClosedVModuleData pm = build_poset_module(poset_diamond());
  CylinderSide side = module_to_cylinder(pm.tensor_closed);
  out.push_back(Document{CylinderDoc{side.vs, side.cyl}});
  out.push_back(Document{cylinder_to_module(side.vs, side.cyl)});
  out.push_back(Document{induced_vstructure(pm.tensor_closed)});
  out.push_back(
      Document{bimodule_completion(pm, *pm.tensor_closed.module.v.symmetry)});
  out.push_back(Document{pm.tensor_closed.module});
  out.push_back(Document{build_trop(4).monoidal.base});
  return out;
}

// Line (1-based) of the first occurrence of `needle` in `text`.
std::size_t line_of(const std::string& text, const std::string& needle) {
  std::size_t at = text.find(needle);
  REQUIRE(at != std::string::npos);
  std::size_t line = 1;
  for (std::size_t i = 0; i < at; ++i) line += text[i] == '\n';
  return line;
}

std::string replace_first(std::string text, const std::string& from,
                          const std::string& to) {
  std::size_t at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

DocumentError parse_error(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("expected DocumentError");
  return DocumentError(DocumentError::Code::kSchema, "", 0, 0, "");
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& text)
      : path(std::filesystem::temp_directory_path() / ("encat_test_" + name)) {
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
};

struct Run {
  int code;
  std::string out, err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("builtins survive serialize and parse") {
    for (const auto& name : cli::builtin_examples()) {
      CAPTURE(name);
      Document d = cli::builtin_document(name);
      std::string text = serialize_document(d);
      Document back = parse_document(text);
      CHECK(back == d);
      CHECK(serialize_document(back) == text);
      CHECK(check_document(back).empty());
    }
  }

  TEST_CASE("construction outputs survive serialize and parse") {
    for (const Document& d : construction_outputs()) {
      CAPTURE(d.kind());
      std::string text = serialize_document(d);
      CHECK(parse_document(text) == d);
      CHECK(serialize_document(parse_document(text)) == text);
    }
  }

  TEST_CASE("canonical text") {
    std::string text = serialize_document(Document{build_bool()});
    CHECK(text.rfind("{\n  \"format\": \"encat/1\",\n  \"kind\": \"monoidal\"", 0) ==
          0);
    CHECK(text.back() == '\n');
  }

  TEST_CASE("syntax errors") {
    DocumentError e = parse_error("{\"format\": \"encat/1\",");
    CHECK(e.code() == DocumentError::Code::kSyntax);
    CHECK(parse_error("[1, 2").code() == DocumentError::Code::kSyntax);
  }

  TEST_CASE("unresolved references carry their position") {
    std::string text = serialize_document(Document{build_bool()});
    std::string bad = replace_first(text, "[\"m01\", \"id:1\", \"m01\"]",
                                    "[\"m01\", \"nope\", \"m01\"]");
    DocumentError e = parse_error(bad);
    CHECK(e.code() == DocumentError::Code::kUnresolved);
    CHECK(e.token() == "nope");
    CHECK(e.line() == line_of(bad, "\"nope\""));
    CHECK(e.column() > 0);
  }

  TEST_CASE("duplicate ids are named") {
    std::string text = serialize_document(Document{build_bool()});
    std::string bad =
        replace_first(text, "\"objects\": [\"0\", \"1\"]", "\"objects\": [\"0\", \"1\", \"1\"]");
    DocumentError e = parse_error(bad);
    CHECK(e.code() == DocumentError::Code::kDuplicate);
    CHECK(e.token() == "1");
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }

  TEST_CASE("version mismatch") {
    std::string text = serialize_document(Document{build_bool()});
    DocumentError e = parse_error(replace_first(text, "encat/1", "encat/2"));
    CHECK(e.code() == DocumentError::Code::kVersion);
    CHECK(e.token() == "encat/2");
  }

  TEST_CASE("CLI instance, check and roundtrip") {
    Run inst = invoke({"instance", "bool", "-o", "-"});
    REQUIRE(inst.code == cli::kOk);
    CHECK(inst.out == serialize_document(cli::builtin_document("bool")));
    TempFile good("bool.json", inst.out);
    Run ok = invoke({"check", good.str()});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out.find("all laws hold") != std::string::npos);

    TempFile pm("poset.json", serialize_document(cli::builtin_document("poset-diamond")));
    CHECK(invoke({"roundtrip", pm.str(), "--pair", "module-cylinder"}).code ==
          cli::kOk);
    TempFile cyl("cyl.json",
                 serialize_document(cli::builtin_document("cylinder-trop3")));
    CHECK(invoke({"roundtrip", cyl.str(), "--pair", "cylinder-tensored"}).code ==
          cli::kOk);
  }

  TEST_CASE("CLI reports a pentagon failure") {
    std::string text = serialize_document(cli::builtin_document("cyc3"));
    // The single associator entry of Z/3 becomes 1.
    std::string bad = replace_first(text, "[\"*\", \"*\", \"*\", \"0\"]",
                                    "[\"*\", \"*\", \"*\", \"1\"]");
    TempFile f("pentagon.json", bad);
    Run r = invoke({"check", f.str(), "--laws", "pentagon", "--format", "json"});
    CHECK(r.code == cli::kCheckFailed);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["law"] == "pentagon");
    CHECK(j[0]["lhs"] != j[0]["rhs"]);

    // The text report carries the same laws and sites.
    Run all_json = invoke({"check", f.str(), "--format", "json"});
    Run all_text = invoke({"check", f.str()});
    CHECK(all_text.code == cli::kCheckFailed);
    auto arr = nlohmann::json::parse(all_json.out);
    std::istringstream lines(all_text.out);
    std::string line;
    std::size_t n = 0;
    for (; std::getline(lines, line) && n < arr.size(); ++n) {
      std::string law = arr[n]["law"];
      CHECK(line.rfind(law, 0) == 0);
      for (const auto& s : arr[n]["site"])
        CHECK(line.find(s.get<std::string>()) != std::string::npos);
    }
    CHECK(n == arr.size());
  }

  TEST_CASE("CLI input errors") {
    TempFile f("bool2.json", serialize_document(cli::builtin_document("bool")));
    CHECK(invoke({"check", f.str(), "--laws", "no.such.law"}).code ==
          cli::kInvalidInput);
    CHECK(invoke({"check", "/nonexistent/encat.json"}).code == cli::kInvalidInput);
    TempFile junk("junk.json", "{ not json");
    Run r = invoke({"check", junk.str()});
    CHECK(r.code == cli::kInvalidInput);
    CHECK_FALSE(r.err.empty());
    CHECK(invoke({"bogus"}).code == cli::kInvalidInput);
    // Constructions refuse invalid input.
    std::string bad = replace_first(
        serialize_document(cli::builtin_document("cyc3")),
        "[\"*\", \"*\", \"*\", \"0\"]", "[\"*\", \"*\", \"*\", \"1\"]");
    TempFile b("bad.json", bad);
    CHECK(invoke({"roundtrip", b.str(), "--pair", "module-cylinder"}).code ==
          cli::kInvalidInput);
  }

  TEST_CASE("CLI constructions") {
    TempFile pm("poset2.json",
                serialize_document(cli::builtin_document("poset-diamond")));
    Run r = invoke({"construct", pm.str(), "--op", "bimodule-complete", "-o", "-"});
    REQUIRE(r.code == cli::kOk);
    Document d = parse_document(r.out);
    CHECK(d.kind() == "bimodule");
    CHECK(check_document(d).empty());
    Run c = invoke({"construct", pm.str(), "--op", "module-to-cylinder", "-o", "-"});
    REQUIRE(c.code == cli::kOk);
    CHECK(parse_document(c.out).kind() == "cylinder");
  }
}
