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

#ifndef ENCAT_REF_HPP
#define ENCAT_REF_HPP

#include <compare>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>

namespace encat {

/// Opaque identifier of an object or a morphism inside a finite table.
/// The tag keeps object and morphism ids from being mixed up.
template <class Tag>
class Ref {
 public:
  Ref() = default;
  explicit Ref(std::string id) : id_(std::move(id)) {}

  const std::string& str() const noexcept { return id_; }
  bool empty() const noexcept { return id_.empty(); }

  friend auto operator<=>(const Ref&, const Ref&) = default;
  friend bool operator==(const Ref&, const Ref&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Ref& r) {
    return os << r.id_;
  }

 private:
  std::string id_;
};

using ObjectRef = Ref<struct ObjectTag>;
using MorphismRef = Ref<struct MorphismTag>;

using ObjPair = std::pair<ObjectRef, ObjectRef>;
using ObjTriple = std::tuple<ObjectRef, ObjectRef, ObjectRef>;
using MorPair = std::pair<MorphismRef, MorphismRef>;

/// Reserved identity name for an object: "id:<object>".
inline MorphismRef identity_name(const ObjectRef& x) {
  return MorphismRef("id:" + x.str());
}

/// Name of a pair in a product category.
inline std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

namespace literals {
inline ObjectRef operator""_o(const char* s, std::size_t n) {
  return ObjectRef(std::string(s, n));
}
inline MorphismRef operator""_m(const char* s, std::size_t n) {
  return MorphismRef(std::string(s, n));
}
}  // namespace literals

}  // namespace encat

#endif  // ENCAT_REF_HPP
