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

// Small helpers shared by the checkers. Not installed.

#ifndef ENCAT_SRC_CHECK_UTIL_HPP
#define ENCAT_SRC_CHECK_UTIL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "encat/category.hpp"
#include "encat/errors.hpp"
#include "encat/ref.hpp"
#include "encat/report.hpp"

namespace encat::detail {

inline std::string site_str(const std::string& s) { return s; }
inline std::string site_str(const char* s) { return s; }
template <class Tag>
std::string site_str(const Ref<Tag>& r) {
  return r.str();
}

template <class... Ts>
std::vector<std::string> site(const Ts&... xs) {
  return {site_str(xs)...};
}

inline std::string join(std::string_view prefix, std::string_view suffix) {
  std::string s(prefix);
  s += '.';
  s += suffix;
  return s;
}

/// Records a report unless lhs == rhs. Returns whether they agreed.
inline bool expect_equal(Reports& out, std::string_view law,
                         std::vector<std::string> where,
                         const MorphismRef& lhs, const MorphismRef& rhs,
                         std::string detail = {}) {
  if (lhs == rhs) return true;
  out.push_back(CheckReport{std::string(law), std::move(where), lhs, rhs,
                            std::nullopt, std::move(detail)});
  return false;
}

inline void fail(Reports& out, std::string_view law,
                 std::vector<std::string> where, std::string detail) {
  out.push_back(CheckReport{std::string(law), std::move(where), std::nullopt,
                            std::nullopt, std::nullopt, std::move(detail)});
}

inline void fail_count(Reports& out, std::string_view law,
                       std::vector<std::string> where, std::size_t count,
                       std::string detail) {
  out.push_back(CheckReport{std::string(law), std::move(where), std::nullopt,
                            std::nullopt, count, std::move(detail)});
}

inline void append(Reports& out, Reports more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

/// Moves every report under `law`, keeping the original law in the detail.
inline Reports relabel(Reports reports, const std::string& law) {
  for (auto& r : reports) {
    r.detail = r.law + (r.detail.empty() ? "" : ": " + r.detail);
    r.law = law;
  }
  return reports;
}

/// Reports unless f is a declared morphism src -> dst of c.
inline bool check_arrow(Reports& out, const FinCategory& c,
                        std::string_view law, std::vector<std::string> where,
                        const MorphismRef& f, const ObjectRef& src,
                        const ObjectRef& dst) {
  if (!c.has_morphism(f)) {
    fail(out, law, std::move(where), "undeclared morphism " + f.str());
    return false;
  }
  if (c.src(f) != src || c.dst(f) != dst) {
    fail(out, law, std::move(where),
         f.str() + " is not a morphism " + src.str() + " -> " + dst.str());
    return false;
  }
  return true;
}

/// Turns derived-lemma failures into the engine-bug channel.
inline void raise_if_engine_bug(const Reports& derived, std::string_view what) {
  if (!derived.empty())
    throw EngineBug(std::string(what) + ": derived property failed on input "
                                        "satisfying all axioms",
                    derived);
}

}  // namespace encat::detail

#endif  // ENCAT_SRC_CHECK_UTIL_HPP
