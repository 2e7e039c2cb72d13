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

#include "convexlab/linalg.hpp"

#include "convexlab/error.hpp"

namespace convexlab {

RVector RowEchelon::reduce(RVector v) const {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rational c = v[pivots[k]];
    if (!c.is_zero()) v -= rows[k] * c;
  }
  return v;
}

RowEchelon row_echelon(const std::vector<RVector>& rows, std::size_t dim) {
  require(dim > 0, ErrorCode::kMalformedInput, "row echelon form of zero-dimensional space");
  std::vector<RVector> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    require(r.dim() == dim, ErrorCode::kMalformedInput, "row dimension mismatch");
    m.push_back(r);
  }
  RowEchelon out;
  out.dim = dim;
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim && next < m.size(); ++col) {
    std::size_t piv = next;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[next], m[piv]);
    m[next] *= Rational(1) / m[next][col];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == next || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      m[r] -= m[next] * f;
    }
    out.pivots.push_back(col);
    ++next;
  }
  m.resize(next);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const std::vector<RVector>& rows, std::size_t dim) {
  return row_echelon(rows, dim).rank();
}

RVector sign_normalized(const RVector& v) {
  RVector p = primitive(v);
  for (const auto& c : p) {
    if (c.sign() < 0) return -p;
    if (c.sign() > 0) break;
  }
  return p;
}

std::vector<RVector> nullspace(const std::vector<RVector>& rows, std::size_t dim) {
  const RowEchelon e = row_echelon(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RVector v(dim);
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(sign_normalized(v));
  }
  return basis;
}

std::vector<RVector> orthogonal_complement(const std::vector<RVector>& basis, std::size_t dim) {
  require(dim > 0, ErrorCode::kMalformedInput, "orthogonal complement needs a positive dimension");
  return nullspace(basis, dim);
}

bool same_span(const std::vector<RVector>& a, const std::vector<RVector>& b, std::size_t dim) {
  const RowEchelon ea = row_echelon(a, dim);
  const RowEchelon eb = row_echelon(b, dim);
  if (ea.rank() != eb.rank()) return false;
  for (const auto& v : b) {
    if (!ea.spans(v)) return false;
  }
  return true;
}

}  // namespace convexlab
