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

#include "convexlab/generators.hpp"

#include "convexlab/error.hpp"

namespace convexlab {

long InstanceGenerator::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rational InstanceGenerator::rational(long lo, long hi, long max_den) {
  const long den = uniform(1, max_den);
  return Rational(uniform(lo * den, hi * den), den);
}

RVector InstanceGenerator::integer_vector(std::size_t dim, long lo, long hi, bool nonzero) {
  for (;;) {
    RVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = Rational(uniform(lo, hi));
    if (!nonzero || !v.is_zero()) return v;
  }
}

PolyhedralFn InstanceGenerator::polyhedral_fn(std::size_t dim, std::size_t max_facets) {
  require(max_facets >= 1, ErrorCode::kMalformedInput, "need at least one facet");
  const auto pieces = static_cast<std::size_t>(uniform(1, static_cast<long>(std::min<std::size_t>(3, max_facets))));
  const auto rows = static_cast<std::size_t>(uniform(0, static_cast<long>(max_facets - pieces)));
  std::vector<RVector> slopes;
  std::vector<Rational> offsets;
  for (std::size_t k = 0; k < pieces; ++k) {
    slopes.push_back(integer_vector(dim, -3, 3));
    offsets.push_back(Rational(uniform(-2, 2)));
  }
  HRep h{dim, {}, {}};
  for (std::size_t k = 0; k < rows; ++k) {
    h.ineqs.push_back({integer_vector(dim, -2, 2, true), Rational(uniform(0, 2))});
  }
  return PolyhedralFn::max_affine(slopes, offsets, Polyhedron::from_hrep(std::move(h)));
}

Polyhedron InstanceGenerator::polytope(std::size_t dim, std::size_t count, long range) {
  VRep v{dim, {}, {}, {}};
  for (std::size_t k = 0; k < count; ++k) v.vertices.push_back(integer_vector(dim, -range, range));
  return Polyhedron::from_vrep(std::move(v)).canonical();
}

RVector InstanceGenerator::point_in(const Polyhedron& p) {
  const VRep& v = p.vrep();
  require(!v.is_empty(), ErrorCode::kMalformedInput, "no point in an empty polyhedron");
  RVector x = v.vertices[static_cast<std::size_t>(uniform(0, static_cast<long>(v.vertices.size()) - 1))];
  for (const auto& r : v.rays) x += r * Rational(uniform(0, 1));
  for (const auto& l : v.lines) x += l * Rational(uniform(-1, 1));
  return x;
}

}  // namespace convexlab
