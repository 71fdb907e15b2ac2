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

#include "encat/category.hpp"

#include <string>

#include "check_util.hpp"
#include "encat/errors.hpp"

namespace encat {

using detail::expect_equal;
using detail::fail;
using detail::join;
using detail::site;

FinCategory::FinCategory(std::set<ObjectRef> objects,
                         std::map<MorphismRef, Arrow> morphisms,
                         std::map<ObjectRef, MorphismRef> identity,
                         std::map<MorPair, MorphismRef> comp)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
  for (const auto& [f, a] : morphisms_) {
    if (!has_object(a.src) || !has_object(a.dst))
      throw MalformedReference("morphism '" + f.str() +
                               "' references an undeclared object");
  }
  for (const auto& [x, f] : identity_) {
    if (!has_object(x))
      throw MalformedReference("identity declared for undeclared object '" +
                               x.str() + "'");
    if (!has_morphism(f))
      throw MalformedReference("identity of '" + x.str() +
                               "' is undeclared morphism '" + f.str() + "'");
  }
  for (const auto& x : objects_)
    if (!identity_.count(x))
      throw MalformedReference("object '" + x.str() + "' has no identity");
  for (const auto& [f, a] : morphisms_) {
    const std::string& s = f.str();
    if (s.rfind("id:", 0) == 0) {
      ObjectRef named(s.substr(3));
      auto it = identity_.find(named);
      if (it == identity_.end() || it->second != f)
        throw MalformedReference("reserved name '" + s +
                                 "' is not the identity of '" + named.str() +
                                 "'");
    }
  }
  for (const auto& [fg, h] : comp_) {
    if (!has_morphism(fg.first) || !has_morphism(fg.second) ||
        !has_morphism(h))
      throw MalformedReference("composition entry (" + fg.first.str() + ", " +
                               fg.second.str() + ") -> " + h.str() +
                               " references an undeclared morphism");
  }
  index();
}

void FinCategory::index() {
  hom_.clear();
  for (const auto& [f, a] : morphisms_) hom_[{a.src, a.dst}].push_back(f);
}

const Arrow& FinCategory::arrow(const MorphismRef& f) const {
  auto it = morphisms_.find(f);
  if (it == morphisms_.end())
    throw MalformedReference("undeclared morphism '" + f.str() + "'");
  return it->second;
}

const MorphismRef& FinCategory::identity(const ObjectRef& x) const {
  auto it = identity_.find(x);
  if (it == identity_.end())
    throw MalformedReference("undeclared object '" + x.str() + "'");
  return it->second;
}

bool FinCategory::is_identity(const MorphismRef& f) const {
  const Arrow& a = arrow(f);
  return a.src == a.dst && identity(a.src) == f;
}

const std::vector<MorphismRef>& FinCategory::hom(const ObjectRef& x,
                                                 const ObjectRef& y) const {
  static const std::vector<MorphismRef> kEmpty;
  auto it = hom_.find({x, y});
  return it == hom_.end() ? kEmpty : it->second;
}

const MorphismRef& FinCategory::comp(const MorphismRef& f,
                                     const MorphismRef& g) const {
  if (dst(f) != src(g))
    throw NonComposable(0, "cannot compose '" + f.str() + "' then '" +
                               g.str() + "': " + dst(f).str() +
                               " != " + src(g).str());
  auto it = comp_.find({f, g});
  if (it == comp_.end())
    throw MissingComponent("composition table lacks (" + f.str() + ", " +
                           g.str() + ")");
  return it->second;
}

FinCategory FinCategory::with_composite(const MorphismRef& f,
                                        const MorphismRef& g,
                                        const MorphismRef& h) const {
  FinCategory c = *this;
  if (!has_morphism(h))
    throw MalformedReference("undeclared morphism '" + h.str() + "'");
  c.comp_[{f, g}] = h;
  return c;
}

Reports validate_category(const FinCategory& cat) {
  Reports out;
  for (const auto& [x, id] : cat.identities()) {
    const Arrow& a = cat.arrow(id);
    if (a.src != x || a.dst != x)
      fail(out, "category.typing", site(id),
           "identity of " + x.str() + " is not an endomorphism of it");
  }
  for (const auto& [fg, h] : cat.comp_table()) {
    if (cat.dst(fg.first) != cat.src(fg.second))
      fail(out, "category.typing", site(fg.first, fg.second),
           "composition entry for a non-composable pair");
  }
  // Unit and typing of composites, per composable pair.
  for (const auto& [f, af] : cat.morphisms()) {
    for (const auto& [y, _] : cat.identities()) {
      (void)_;
      for (const auto& g : cat.hom(af.dst, y)) {
        auto it = cat.comp_table().find({f, g});
        if (it == cat.comp_table().end()) {
          fail(out, "category.total", site(f, g), "composite undefined");
          continue;
        }
        const MorphismRef& h = it->second;
        if (cat.is_identity(g)) {
          expect_equal(out, "category.unit", site(f, g), h, f);
        } else if (cat.is_identity(f)) {
          expect_equal(out, "category.unit", site(f, g), h, g);
        } else if (cat.src(h) != af.src || cat.dst(h) != y) {
          fail(out, "category.typing", site(f, g),
               "composite " + h.str() + " has the wrong source or target");
        }
      }
    }
  }
  if (!out.empty()) return out;
  for (const auto& [f, af] : cat.morphisms()) {
    for (const auto& y : cat.objects()) {
      for (const auto& g : cat.hom(af.dst, y)) {
        const MorphismRef& fg = cat.comp(f, g);
        for (const auto& z : cat.objects()) {
          for (const auto& h : cat.hom(y, z)) {
            expect_equal(out, "category.assoc", site(f, g, h),
                         cat.comp(fg, h), cat.comp(f, cat.comp(g, h)));
          }
        }
      }
    }
  }
  return out;
}

MorphismRef compose_path(const FinCategory& cat,
                         std::span<const MorphismRef> path) {
  if (path.empty()) throw NonComposable(0, "empty path");
  MorphismRef acc = path[0];
  cat.arrow(acc);
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (cat.dst(path[i - 1]) != cat.src(path[i]))
      throw NonComposable(i - 1, "path not composable at index " +
                                     std::to_string(i - 1) + ": '" +
                                     path[i - 1].str() + "' then '" +
                                     path[i].str() + "'");
    acc = cat.comp(acc, path[i]);
  }
  return acc;
}

MorphismRef compose_path(const FinCategory& cat,
                         std::initializer_list<MorphismRef> path) {
  return compose_path(cat, std::span<const MorphismRef>(path.begin(),
                                                         path.size()));
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  std::set<ObjectRef> objects;
  std::map<MorphismRef, Arrow> morphisms;
  std::map<ObjectRef, MorphismRef> identity;
  std::map<MorPair, MorphismRef> comp;
  auto obj = [](const ObjectRef& x, const ObjectRef& y) {
    return ObjectRef(pair_name(x.str(), y.str()));
  };
  auto mor = [](const MorphismRef& f, const MorphismRef& g) {
    return MorphismRef(pair_name(f.str(), g.str()));
  };
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) {
      objects.insert(obj(x, y));
      identity[obj(x, y)] = mor(a.identity(x), b.identity(y));
    }
  for (const auto& [f, af] : a.morphisms())
    for (const auto& [g, ag] : b.morphisms())
      morphisms[mor(f, g)] = {obj(af.src, ag.src), obj(af.dst, ag.dst)};
  for (const auto& [ff, fh] : a.comp_table())
    for (const auto& [gg, gh] : b.comp_table())
      comp[{mor(ff.first, gg.first), mor(ff.second, gg.second)}] = mor(fh, gh);
  return FinCategory(std::move(objects), std::move(morphisms),
                     std::move(identity), std::move(comp));
}

FinCategory opposite_category(const FinCategory& a) {
  std::map<MorphismRef, Arrow> morphisms;
  for (const auto& [f, af] : a.morphisms()) morphisms[f] = {af.dst, af.src};
  std::map<MorPair, MorphismRef> comp;
  for (const auto& [fg, h] : a.comp_table()) comp[{fg.second, fg.first}] = h;
  return FinCategory(a.objects(), std::move(morphisms), a.identities(),
                     std::move(comp));
}

std::optional<MorphismRef> morphism_inverse(const FinCategory& cat,
                                            const MorphismRef& f) {
  const Arrow& a = cat.arrow(f);
  std::optional<MorphismRef> found;
  for (const auto& g : cat.hom(a.dst, a.src)) {
    if (cat.comp(f, g) == cat.identity(a.src) &&
        cat.comp(g, f) == cat.identity(a.dst)) {
      if (found)
        throw AmbiguityError("morphism '" + f.str() +
                             "' has two inverses: '" + found->str() +
                             "' and '" + g.str() + "'");
      found = g;
    }
  }
  return found;
}

MorphismRef inverse_or_throw(const FinCategory& cat, const MorphismRef& f) {
  auto g = morphism_inverse(cat, f);
  if (!g) throw WitnessError(0, "morphism '" + f.str() + "' is not invertible");
  return *g;
}

const ObjectRef& BifunctorData::operator()(const ObjectRef& x,
                                           const ObjectRef& y) const {
  auto it = on_objects.find({x, y});
  if (it == on_objects.end())
    throw MissingComponent("bifunctor undefined on objects (" + x.str() +
                           ", " + y.str() + ")");
  return it->second;
}

const MorphismRef& BifunctorData::operator()(const MorphismRef& f,
                                             const MorphismRef& g) const {
  auto it = on_morphisms.find({f, g});
  if (it == on_morphisms.end())
    throw MissingComponent("bifunctor undefined on morphisms (" + f.str() +
                           ", " + g.str() + ")");
  return it->second;
}

Reports check_functor(const FunctorData& f, const FinCategory& src,
                      const FinCategory& dst, std::string_view law_prefix) {
  Reports out;
  const std::string typing = join(law_prefix, "typing");
  for (const auto& x : src.objects()) {
    auto it = f.on_objects.find(x);
    if (it == f.on_objects.end() || !dst.has_object(it->second))
      fail(out, typing, site(x), "object not mapped to a target object");
  }
  for (const auto& [m, a] : src.morphisms()) {
    auto it = f.on_morphisms.find(m);
    if (it == f.on_morphisms.end() || !dst.has_morphism(it->second)) {
      fail(out, typing, site(m), "morphism not mapped to a target morphism");
      continue;
    }
    auto fs = f.on_objects.find(a.src);
    auto fd = f.on_objects.find(a.dst);
    if (fs == f.on_objects.end() || fd == f.on_objects.end()) continue;
    if (dst.src(it->second) != fs->second || dst.dst(it->second) != fd->second)
      fail(out, typing, site(m), "image has the wrong source or target");
  }
  if (!out.empty()) return out;
  for (const auto& [x, id] : src.identities())
    expect_equal(out, join(law_prefix, "identity"), site(x),
                 f.on_morphisms.at(id), dst.identity(f.on_objects.at(x)));
  for (const auto& [fg, h] : src.comp_table())
    expect_equal(out, join(law_prefix, "composition"),
                 site(fg.first, fg.second), f.on_morphisms.at(h),
                 dst.comp(f.on_morphisms.at(fg.first),
                          f.on_morphisms.at(fg.second)));
  return out;
}

Reports check_bifunctor(const BifunctorData& f, const FinCategory& a,
                        const FinCategory& b, const FinCategory& c,
                        std::string_view law_prefix) {
  Reports out;
  const std::string typing = join(law_prefix, "typing");
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) {
      auto it = f.on_objects.find({x, y});
      if (it == f.on_objects.end() || !c.has_object(it->second))
        fail(out, typing, site(x, y), "object pair not mapped");
    }
  if (!out.empty()) return out;
  for (const auto& [u, au] : a.morphisms())
    for (const auto& [v, av] : b.morphisms()) {
      auto it = f.on_morphisms.find({u, v});
      if (it == f.on_morphisms.end() || !c.has_morphism(it->second)) {
        fail(out, typing, site(u, v), "morphism pair not mapped");
        continue;
      }
      if (c.src(it->second) != f(au.src, av.src) ||
          c.dst(it->second) != f(au.dst, av.dst))
        fail(out, typing, site(u, v), "image has the wrong source or target");
    }
  if (!out.empty()) return out;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects())
      expect_equal(out, join(law_prefix, "identity"), site(x, y),
                   f(a.identity(x), b.identity(y)), c.identity(f(x, y)));
  for (const auto& [uu, uh] : a.comp_table())
    for (const auto& [vv, vh] : b.comp_table())
      expect_equal(out, join(law_prefix, "composition"),
                   site(uu.first, vv.first, uu.second, vv.second), f(uh, vh),
                   c.comp(f(uu.first, vv.first), f(uu.second, vv.second)));
  return out;
}

Reports check_nat_trans(const NatTransData& t, const FinCategory& src,
                        const FinCategory& dst) {
  Reports out;
  for (const auto& x : src.objects()) {
    auto it = t.components.find(x);
    if (it == t.components.end() || !dst.has_morphism(it->second)) {
      fail(out, "nat.typing", site(x), "missing component");
      continue;
    }
    if (dst.src(it->second) != t.source.on_objects.at(x) ||
        dst.dst(it->second) != t.target.on_objects.at(x))
      fail(out, "nat.typing", site(x), "component has the wrong type");
  }
  if (!out.empty()) return out;
  for (const auto& [m, a] : src.morphisms())
    expect_equal(out, "nat.naturality", site(m),
                 dst.comp(t.components.at(a.src), t.target.on_morphisms.at(m)),
                 dst.comp(t.source.on_morphisms.at(m), t.components.at(a.dst)));
  return out;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  FunctorData h;
  for (const auto& [x, y] : f.on_objects) h.on_objects[x] = g.on_objects.at(y);
  for (const auto& [m, n] : f.on_morphisms)
    h.on_morphisms[m] = g.on_morphisms.at(n);
  return h;
}

FunctorData identity_functor(const FinCategory& c) {
  FunctorData h;
  for (const auto& x : c.objects()) h.on_objects[x] = x;
  for (const auto& [m, _] : c.morphisms()) h.on_morphisms[m] = m;
  return h;
}

}  // namespace encat
