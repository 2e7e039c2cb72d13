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

#include <cstdint>
#include <random>

#include "convexlab/convex_fn.hpp"

namespace convexlab {

/// Seeded source of small exact instances. Integers come from mt19937_64 by
/// modulo reduction, so sequences are identical across standard libraries.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  Rational rational(long lo, long hi, long max_den = 1);
  RVector integer_vector(std::size_t dim, long lo, long hi, bool nonzero = false);

  /// max of 1..3 affine pieces on a domain of extra halfspaces, at most
  /// max_facets epigraph facets overall. The origin always lies in the domain.
  PolyhedralFn polyhedral_fn(std::size_t dim, std::size_t max_facets = 6);
  /// Convex hull of `count` random integer points in [-range, range]^dim.
  Polyhedron polytope(std::size_t dim, std::size_t count, long range = 3);
  /// A point of the polyhedron: a vertex, or a vertex moved along a ray.
  RVector point_in(const Polyhedron& p);

 private:
  std::mt19937_64 rng_;
};

}  // namespace convexlab
