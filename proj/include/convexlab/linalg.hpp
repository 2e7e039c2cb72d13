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

#include <vector>

#include "convexlab/vector.hpp"

namespace convexlab {

/// Reduced row echelon form of a list of row vectors. Zero rows are dropped;
/// each surviving row has a leading 1 in column pivots[k].
struct RowEchelon {
  std::size_t dim = 0;
  std::vector<RVector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  /// Subtracts multiples of the rows so every pivot coordinate of v is zero.
  RVector reduce(RVector v) const;
  bool spans(const RVector& v) const { return reduce(v).is_zero(); }
};

RowEchelon row_echelon(const std::vector<RVector>& rows, std::size_t dim);

std::size_t rank(const std::vector<RVector>& rows, std::size_t dim);

/// Basis of {z : <r, z> = 0 for every row r}. Each basis vector is a primitive
/// integer vector whose first nonzero coordinate is positive.
std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t dim);

/// Basis of the orthogonal complement of span(basis) in R^dim.
std::vector<RVector> orthogonal_complement(const std::vector<RVector>& basis, std::size_t dim);

bool same_span(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim);

/// Direction-normalized copy: primitive integer vector with first nonzero
/// coordinate positive.
RVector sign_normalized(const RVector& v);

}  // namespace convexlab
