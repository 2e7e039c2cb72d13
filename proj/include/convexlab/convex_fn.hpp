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

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convexlab/catalog.hpp"
#include "convexlab/ext_real.hpp"
#include "convexlab/polyhedron.hpp"
#include "convexlab/region.hpp"

namespace convexlab {

/// t >= <slope, x> + offset.
struct AffinePiece {
  RVector slope;
  Rational offset;
  Rational at(const RVector& x) const { return dot(slope, x) + offset; }
};

/// Proper convex function whose epigraph is a polyhedron in R^{dim+1}; the
/// last coordinate is the height. On its domain the function is the maximum
/// of finitely many affine pieces.
class PolyhedralFn {
 public:
  /// Validates and canonicalizes the epigraph. Raises InvariantViolation when
  /// the set is not an epigraph and ImproperFunction when it is empty or
  /// unbounded below.
  static PolyhedralFn from_epigraph(const Polyhedron& epi);
  /// max_k (<slopes[k], x> + offsets[k]) restricted to domain (default R^d).
  static PolyhedralFn max_affine(const std::vector<RVector>& slopes,
                                 const std::vector<Rational>& offsets,
                                 const std::optional<Polyhedron>& domain = std::nullopt);
  static PolyhedralFn indicator(const Polyhedron& set);
  /// Support function of a nonempty polyhedron.
  static PolyhedralFn support(const Polyhedron& set);
  static PolyhedralFn constant(std::size_t dim, const Rational& c);

  std::size_t dim() const;
  const Polyhedron& epigraph() const;
  const Polyhedron& domain() const;
  const std::vector<AffinePiece>& pieces() const;
  bool in_domain(const RVector& x) const;

  ExtReal evaluate(const RVector& x) const;
  PolyhedralFn conjugate() const;
  /// f(x[offset .. offset + dim)) on R^total.
  PolyhedralFn lift(std::size_t offset, std::size_t total) const;

  /// Minimum value and the lexicographically least minimizer; -inf with no
  /// point when unbounded below.
  std::pair<ExtReal, std::optional<RVector>> minimum() const;

 private:
  struct Data;
  explicit PolyhedralFn(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A catalog entry viewed as a function.
class AnalyticFn {
 public:
  explicit AnalyticFn(std::shared_ptr<const CatalogEntry> entry);
  static AnalyticFn from_tag(std::string_view tag) { return AnalyticFn(catalog_lookup(tag)); }

  const CatalogEntry& entry() const { return *entry_; }
  std::string tag() const { return entry_->tag(); }
  std::size_t dim() const { return entry_->dim(); }

 private:
  std::shared_ptr<const CatalogEntry> entry_;
};

/// Proper lower semicontinuous convex function: polyhedral or cataloged.
class ConvexFn {
 public:
  ConvexFn(PolyhedralFn f) : kind_(std::move(f)) {}
  ConvexFn(AnalyticFn f) : kind_(std::move(f)) {}
  static ConvexFn catalog(std::string_view tag) { return AnalyticFn::from_tag(tag); }

  std::size_t dim() const;
  bool is_polyhedral() const { return std::holds_alternative<PolyhedralFn>(kind_); }
  const PolyhedralFn& polyhedral() const;
  const AnalyticFn& analytic() const;
  bool has_tag(std::string_view tag) const;

  ExtReal evaluate(const RVector& x) const;
  bool in_domain(const RVector& x) const { return evaluate(x).is_finite(); }
  std::string describe() const;

 private:
  std::variant<PolyhedralFn, AnalyticFn> kind_;
};

ConvexFn conjugate(const ConvexFn& f);

/// Polyhedral: epigraph of f** equals epigraph of f. Catalog: f** agrees with
/// f on the entry's sample grid and Fenchel-Young holds on grid pairs.
bool biconjugate_check(const ConvexFn& f);

/// Pointwise sum. All-polyhedral lists always work. A list with one
/// parabola indicator is supported when the polyhedral rest is identically
/// zero, or its domain lies in {x_1 >= 0} and contains the origin.
ConvexFn fn_sum(const std::vector<ConvexFn>& fs);

struct InfConvResult {
  ExtReal value;
  bool attained = false;
  /// One point per function, summing to the argument, when attained.
  std::optional<std::vector<RVector>> witness;
  std::string certificate;
};

/// inf { sum g_i(y_i) : sum y_i = y }. All-polyhedral lists use one LP.
/// A list with one parabola conjugate whose polyhedral rest G has (-e_1, 0)
/// as an epigraph recession direction is solved in closed form: the value
/// is min G, attained iff y lies in argmin G + [0, inf) x {0}.
InfConvResult inf_conv_value(const std::vector<ConvexFn>& gs, const RVector& y);

/// A split of y with sum g_i(y_i) <= inf_conv_value + eta. Exact when the
/// infimum is attained. The infimum must be finite.
std::vector<RVector> inf_conv_near_split(const std::vector<ConvexFn>& gs, const RVector& y,
                                         const Rational& eta);

struct EpiConjSum {
  /// Absent only for a single catalog function.
  std::optional<Region> set;
  bool closed = true;
  /// A point of the closure outside the set.
  std::optional<RVector> witness;
  std::string certificate;
};

/// epi f_1* + ... + epi f_m*.
EpiConjSum epi_conj_sum(const std::vector<ConvexFn>& fs);

}  // namespace convexlab
