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

#include <optional>
#include <string>
#include <variant>

#include "convexlab/polyhedron.hpp"

namespace convexlab {

/// eps-subdifferential of the indicator of C = {(x, y) : 2x + y^2 <= 0} at a
/// point p of C:  {y : sigma_C(y) - <p, y> <= eps}, where sigma_C is the
/// support function of C. At p = 0 this is the union over u >= 0 of
/// {u} x [-sqrt(2 eps u), sqrt(2 eps u)]. Closed.
struct ParabolaEpsRegion {
  RVector at;
  Rational eps;
};

/// eps-subdifferential of sigma_C at q: {x in C : <x, q> >= sigma_C(q) - eps}.
/// Closed.
struct ParabolaConjugateEpsRegion {
  RVector at;
  Rational eps;
};

/// Epigraph-like set in R^{d+1}:
///   {(y, s) : s > level}  union  {(y, s) : s >= level, y in exact}.
/// Produced by summing conjugate epigraphs whose infimal convolution is
/// constant (= level) but attained only on `exact`. Its closure is the half
/// space s >= level; it is closed iff `exact` is all of R^d.
struct LevelSetWithExactCore {
  Rational level;
  Polyhedron exact;
};

/// A set in dual space with exact membership and closure-membership tests.
class Region {
 public:
  using Kind = std::variant<Polyhedron, ParabolaEpsRegion, ParabolaConjugateEpsRegion,
                            LevelSetWithExactCore>;

  Region(Polyhedron p) : kind_(std::move(p)) {}
  Region(ParabolaEpsRegion r) : kind_(std::move(r)) {}
  Region(ParabolaConjugateEpsRegion r) : kind_(std::move(r)) {}
  Region(LevelSetWithExactCore r) : kind_(std::move(r)) {}

  const Kind& kind() const { return kind_; }
  std::size_t dim() const;
  bool is_polyhedral() const { return std::holds_alternative<Polyhedron>(kind_); }
  /// Requires is_polyhedral().
  const Polyhedron& polyhedron() const;

  bool contains(const RVector& y) const;
  /// Exact test for membership in the closure.
  bool closure_contains(const RVector& y) const;
  bool is_closed() const;
  /// Empty regions are always polyhedral.
  bool is_empty() const;

  /// True iff other is a subset of this region. Supported for polyhedral
  /// pairs and for two parabola regions at the same point; any other pairing
  /// raises UnsupportedCombination.
  bool includes(const Region& other) const;
  bool equals(const Region& other) const { return includes(other) && other.includes(*this); }

  std::string describe() const;

 private:
  Kind kind_;
};

}  // namespace convexlab
