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
#include <vector>

#include "convexlab/vector.hpp"

namespace convexlab {

/// <a, x> <= b
struct Halfspace {
  RVector a;
  Rational b;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace&, const Halfspace&) = default;
};

/// <a, x> == b
struct Hyperplane {
  RVector a;
  Rational b;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct HRep {
  std::size_t dim = 0;
  std::vector<Halfspace> ineqs;
  std::vector<Hyperplane> eqs;
};

/// conv(vertices) + cone(rays) + span(lines). A VRep without vertices denotes
/// the empty set. With a nontrivial lineality space the "vertices" are one
/// representative point per minimal face.
struct VRep {
  std::size_t dim = 0;
  std::vector<RVector> vertices;
  std::vector<RVector> rays;
  std::vector<RVector> lines;

  bool is_empty() const { return vertices.empty(); }
};

/// Generators of the polyhedral cone {z : <g, z> >= 0 for g in ge_rows,
/// <e, z> == 0 for e in eq_rows}: extreme rays modulo the lineality space
/// plus a basis of the lineality space. Double description method.
struct ConeGenerators {
  std::vector<RVector> rays;
  std::vector<RVector> lines;
};
ConeGenerators cone_generators(const std::vector<RVector>& ge_rows,
                               const std::vector<RVector>& eq_rows, std::size_t dim);

/// Exact conversions. Results are irredundant and canonically ordered.
VRep to_vrep(const HRep& h);
HRep to_hrep(const VRep& v);

/// Convex polyhedron in R^dim held by an H-representation, a V-representation
/// or both. The missing representation is computed on first use and cached;
/// copies share the cache. The empty set is an ordinary value.
class Polyhedron {
 public:
  static Polyhedron from_hrep(HRep h);
  static Polyhedron from_vrep(VRep v);
  static Polyhedron empty(std::size_t dim);
  static Polyhedron whole_space(std::size_t dim);
  static Polyhedron point(const RVector& p);
  /// Closed box [lo_i, hi_i].
  static Polyhedron box(const RVector& lo, const RVector& hi);
  /// cone(rays) + span(lines) with apex at the origin.
  static Polyhedron cone(std::size_t dim, std::vector<RVector> rays,
                         std::vector<RVector> lines = {});

  std::size_t dim() const;
  const HRep& hrep() const;
  const VRep& vrep() const;

  bool is_empty() const;
  bool contains(const RVector& x) const;
  /// True iff other is a subset of this polyhedron.
  bool includes(const Polyhedron& other) const;
  bool equals(const Polyhedron& other) const;
  /// Nonempty and invariant under positive scaling about the origin.
  bool is_cone() const;
  /// True iff the polyhedron is a linear subspace.
  bool is_subspace() const;
  /// Both representations irredundant and canonical.
  Polyhedron canonical() const;

  Polyhedron intersect(const Polyhedron& other) const;
  /// Image under x -> M x, where M is given by its rows (each of length dim()).
  Polyhedron linear_image(const std::vector<RVector>& rows) const;
  /// Embeds into R^total on the coordinates [offset, offset + dim()); the
  /// remaining coordinates are fixed to zero.
  Polyhedron embed(std::size_t offset, std::size_t total) const;
  Polyhedron negate() const;
  /// Recession cone.
  Polyhedron recession_cone() const;

  /// A point of this polyhedron violating one of other's constraints, if any.
  std::optional<RVector> point_outside(const Polyhedron& other) const;

  std::string describe() const;

 private:
  struct Impl;
  explicit Polyhedron(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const std::vector<Polyhedron>& terms, std::size_t dim);

/// {y : <y, c> >= 0 for all c in C}. C must be a cone.
Polyhedron dual_cone(const Polyhedron& c);

}  // namespace convexlab
