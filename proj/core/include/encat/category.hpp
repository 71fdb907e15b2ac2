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

#ifndef ENCAT_CATEGORY_HPP
#define ENCAT_CATEGORY_HPP

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "encat/ref.hpp"
#include "encat/report.hpp"

namespace encat {

struct Arrow {
  ObjectRef src;
  ObjectRef dst;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

using MorphismMap = std::map<MorphismRef, MorphismRef>;

/// A finite category given by explicit tables.
///
/// Composition convention: `comp(f, g)` is "g after f" and is defined when
/// dst(f) == src(g). Identities are ordinary morphisms recorded in the
/// identity table. All containers are ordered by id, so every enumeration
/// (objects, morphisms, hom-sets) is lexicographic and deterministic.
///
/// The constructor verifies that every table mentions declared ids only; the
/// category laws themselves are checked by validate_category().
class FinCategory {
 public:
  FinCategory() = default;

  /// Throws MalformedReference, DuplicateId.
  FinCategory(std::set<ObjectRef> objects,
              std::map<MorphismRef, Arrow> morphisms,
              std::map<ObjectRef, MorphismRef> identity,
              std::map<MorPair, MorphismRef> comp);

  const std::set<ObjectRef>& objects() const noexcept { return objects_; }
  const std::map<MorphismRef, Arrow>& morphisms() const noexcept {
    return morphisms_;
  }
  const std::map<ObjectRef, MorphismRef>& identities() const noexcept {
    return identity_;
  }
  const std::map<MorPair, MorphismRef>& comp_table() const noexcept {
    return comp_;
  }

  bool has_object(const ObjectRef& x) const { return objects_.count(x) != 0; }
  bool has_morphism(const MorphismRef& f) const {
    return morphisms_.count(f) != 0;
  }

  const Arrow& arrow(const MorphismRef& f) const;
  const ObjectRef& src(const MorphismRef& f) const { return arrow(f).src; }
  const ObjectRef& dst(const MorphismRef& f) const { return arrow(f).dst; }
  const MorphismRef& identity(const ObjectRef& x) const;
  bool is_identity(const MorphismRef& f) const;

  /// Morphisms x -> y in id order.
  const std::vector<MorphismRef>& hom(const ObjectRef& x,
                                      const ObjectRef& y) const;

  /// "g after f". Throws NonComposable or MissingComponent.
  const MorphismRef& comp(const MorphismRef& f, const MorphismRef& g) const;

  /// Copy with one composition entry replaced (used to build mutants).
  FinCategory with_composite(const MorphismRef& f, const MorphismRef& g,
                             const MorphismRef& h) const;

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ &&
           a.identity_ == b.identity_ && a.comp_ == b.comp_;
  }

 private:
  void index();

  std::set<ObjectRef> objects_;
  std::map<MorphismRef, Arrow> morphisms_;
  std::map<ObjectRef, MorphismRef> identity_;
  std::map<MorPair, MorphismRef> comp_;
  std::map<ObjPair, std::vector<MorphismRef>> hom_;
};

/// Exhaustive check of typing, totality, unit and associativity laws.
/// Throws MalformedReference if the identity table is incomplete.
Reports validate_category(const FinCategory& cat);

/// Left fold of comp over a nonempty path. Throws NonComposable carrying
/// the index of the first morphism of the offending pair.
MorphismRef compose_path(const FinCategory& cat,
                         std::span<const MorphismRef> path);
MorphismRef compose_path(const FinCategory& cat,
                         std::initializer_list<MorphismRef> path);

/// Objects and morphisms are named "(a,b)"; composition is componentwise.
FinCategory product_category(const FinCategory& a, const FinCategory& b);

/// Same ids, src/dst swapped, comp^op(f, g) = comp(g, f).
FinCategory opposite_category(const FinCategory& a);

/// The unique two-sided inverse of f, if any. Throws AmbiguityError if two
/// distinct inverses exist (only possible for a corrupt table).
std::optional<MorphismRef> morphism_inverse(const FinCategory& cat,
                                            const MorphismRef& f);

/// Same as morphism_inverse but throws WitnessError when f is not invertible.
MorphismRef inverse_or_throw(const FinCategory& cat, const MorphismRef& f);

/// A functor between finite categories, given on objects and morphisms.
struct FunctorData {
  std::map<ObjectRef, ObjectRef> on_objects;
  MorphismMap on_morphisms;
  friend bool operator==(const FunctorData&, const FunctorData&) = default;
};

/// A functor A x B -> C tabulated on pairs (no product category needed).
/// Contravariance is expressed by passing an opposite category as A.
struct BifunctorData {
  std::map<ObjPair, ObjectRef> on_objects;
  std::map<MorPair, MorphismRef> on_morphisms;

  const ObjectRef& operator()(const ObjectRef& x, const ObjectRef& y) const;
  const MorphismRef& operator()(const MorphismRef& f,
                                const MorphismRef& g) const;

  friend bool operator==(const BifunctorData&, const BifunctorData&) = default;
};

/// A natural transformation F => G given by components.
struct NatTransData {
  FunctorData source;
  FunctorData target;
  std::map<ObjectRef, MorphismRef> components;
  friend bool operator==(const NatTransData&, const NatTransData&) = default;
};

/// Typing, identity and composition preservation. Reports use the prefix
/// `law_prefix` (e.g. "functor" gives functor.typing, functor.identity, ...).
Reports check_functor(const FunctorData& f, const FinCategory& src,
                      const FinCategory& dst,
                      std::string_view law_prefix = "functor");

Reports check_bifunctor(const BifunctorData& f, const FinCategory& a,
                        const FinCategory& b, const FinCategory& c,
                        std::string_view law_prefix = "bifunctor");

Reports check_nat_trans(const NatTransData& t, const FinCategory& src,
                        const FinCategory& dst);

/// Tabulates the composite functor G after F.
FunctorData compose_functors(const FunctorData& f, const FunctorData& g);

/// Identity functor on a category.
FunctorData identity_functor(const FinCategory& c);

}  // namespace encat

#endif  // ENCAT_CATEGORY_HPP
