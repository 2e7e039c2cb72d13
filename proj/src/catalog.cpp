// Copyright 2026 The convexlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "convexlab/catalog.hpp"

#include <map>
#include <mutex>

#include "convexlab/error.hpp"

namespace convexlab {

bool in_parabola(const RVector& p) {
  require(p.dim() == 2, ErrorCode::kMalformedInput, "parabola lives in R^2");
  return Rational(2) * p[0] + p[1] * p[1] <= Rational(0);
}

ExtReal parabola_support(const RVector& y) {
  require(y.dim() == 2, ErrorCode::kMalformedInput, "parabola lives in R^2");
  const Rational& a = y[0];
  const Rational& b = y[1];
  if (a.sign() > 0) return ExtReal(b * b / (Rational(2) * a));
  if (a.is_zero() && b.is_zero()) return ExtReal(0);
  return ExtReal::plus_infinity();
}

std::vector<RVector> CatalogEntry::sample_grid() const {
  std::vector<RVector> grid;
  const std::vector<Rational> ticks = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 3), Rational(1), Rational(2)};
  for (const auto& a : ticks) {
    for (const auto& b : ticks) grid.push_back(RVector{a, b});
  }
  return grid;
}

namespace {

class ParabolaIndicator final : public CatalogEntry {
 public:
  std::string tag() const override { return std::string(kParabolaIndicator); }
  std::size_t dim() const override { return 2; }
  ExtReal evaluate(const RVector& x) const override {
    return in_parabola(x) ? ExtReal(0) : ExtReal::plus_infinity();
  }
  std::string conjugate_tag() const override { return std::string(kParabolaConjugate); }
  bool is_indicator() const override { return true; }

  Region eps_subdiff(const RVector& x, const Rational& eps) const override {
    if (!in_parabola(x)) return Polyhedron::empty(2);
    if (eps.sign() > 0) return ParabolaEpsRegion{x, eps};
    // Normal cone: the gradient direction (1, y) on the boundary, {0} inside.
    if (Rational(2) * x[0] + x[1] * x[1] == Rational(0)) {
      return Polyhedron::cone(2, {RVector{Rational(1), x[1]}});
    }
    return Polyhedron::point(RVector::zero(2));
  }
};

class ParabolaConjugate final : public CatalogEntry {
 public:
  std::string tag() const override { return std::string(kParabolaConjugate); }
  std::size_t dim() const override { return 2; }
  ExtReal evaluate(const RVector& y) const override { return parabola_support(y); }
  std::string conjugate_tag() const override { return std::string(kParabolaIndicator); }

  Region eps_subdiff(const RVector& y, const Rational& eps) const override {
    if (!parabola_support(y).is_finite()) return Polyhedron::empty(2);
    // At a > 0 with eps = 0 the maximizer over the parabola is unique.
    if (eps.is_zero() && y[0].sign() > 0) {
      const Rational t = y[1] / y[0];
      return Polyhedron::point(RVector{-(t * t) / Rational(2), t});
    }
    return ParabolaConjugateEpsRegion{y, eps};
  }
};

struct Registry {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const CatalogEntry>, std::less<>> entries;

  Registry() {
    for (std::shared_ptr<const CatalogEntry> e :
         {std::shared_ptr<const CatalogEntry>(std::make_shared<ParabolaIndicator>()),
          std::shared_ptr<const CatalogEntry>(std::make_shared<ParabolaConjugate>())}) {
      entries.emplace(e->tag(), e);
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::shared_ptr<const CatalogEntry> catalog_lookup(std::string_view tag) {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  auto it = r.entries.find(tag);
  if (it == r.entries.end()) {
    fail(ErrorCode::kUnknownCatalogTag, "unknown catalog tag '" + std::string(tag) + "'");
  }
  return it->second;
}

std::vector<std::string> catalog_tags() {
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> out;
  for (const auto& [tag, entry] : r.entries) out.push_back(tag);
  return out;
}

void register_catalog_entry(std::shared_ptr<const CatalogEntry> entry) {
  require(entry != nullptr, ErrorCode::kMalformedInput, "null catalog entry");
  Registry& r = registry();
  std::lock_guard lock(r.mutex);
  const std::string tag = entry->tag();
  require(!r.entries.contains(tag), ErrorCode::kMalformedInput,
          "catalog tag '" + tag + "' already registered");
  r.entries.emplace(tag, std::move(entry));
}

}  // namespace convexlab
