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

// Independent brute-force oracles used by the tests. Nothing in here calls
// into the simplex solver or the double description code.

#include <functional>
#include <optional>
#include <vector>

#include "convexlab/linalg.hpp"
#include "convexlab/lp.hpp"

namespace convexlab::oracle {

/// Solves the square system M z = r by Gauss-Jordan elimination. Returns
/// nullopt when M is singular.
inline std::optional<RVector> solve_square(std::vector<RVector> m, std::vector<Rational> r) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(r[piv], r[col]);
    const Rational inv = Rational(1) / m[col][col];
    m[col] *= inv;
    r[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      const Rational f = m[i][col];
      m[i] -= m[col] * f;
      r[i] -= r[col] * f;
    }
  }
  return RVector(std::vector<Rational>(r.begin(), r.end()));
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

inline bool feasible(const LpProblem& p, const RVector& x) {
  for (std::size_t i = 0; i < p.ineq_matrix.size(); ++i) {
    if (dot(p.ineq_matrix[i], x) > p.ineq_rhs[i]) return false;
  }
  for (std::size_t i = 0; i < p.eq_matrix.size(); ++i) {
    if (dot(p.eq_matrix[i], x) != p.eq_rhs[i]) return false;
  }
  return true;
}

/// All basic feasible points of the constraint system: solutions of n
/// linearly independent active rows (equalities always active).
inline std::vector<RVector> enumerate_vertices(const LpProblem& p) {
  const std::size_t n = p.dim();
  std::vector<RVector> rows;
  std::vector<Rational> rhs;
  std::vector<RVector> out;
  for (std::size_t i = 0; i < p.eq_matrix.size(); ++i) {
    if (!p.eq_matrix[i].is_zero()) {
      rows.push_back(p.eq_matrix[i]);
      rhs.push_back(p.eq_rhs[i]);
    } else if (!p.eq_rhs[i].is_zero()) {
      return out;
    }
  }
  if (rows.size() > n) return out;
  for_each_subset(p.ineq_matrix.size(), n - rows.size(), [&](const std::vector<std::size_t>& pick) {
    std::vector<RVector> m = rows;
    std::vector<Rational> r = rhs;
    for (auto i : pick) {
      m.push_back(p.ineq_matrix[i]);
      r.push_back(p.ineq_rhs[i]);
    }
    if (auto x = solve_square(m, r); x && feasible(p, *x)) out.push_back(*x);
  });
  return out;
}

/// Best objective value over enumerated vertices (pointed feasible sets with
/// attained optimum only).
inline std::optional<Rational> best_vertex_value(const LpProblem& p) {
  std::optional<Rational> best;
  for (const auto& v : enumerate_vertices(p)) {
    const Rational val = dot(p.objective, v);
    if (!best || (p.sense == Sense::kMinimize ? val < *best : val > *best)) best = val;
  }
  return best;
}

/// A max-affine function on a domain given by raw halfspaces, kept in the
/// form it was generated in.
struct PlainFn {
  std::size_t dim = 0;
  std::vector<RVector> slopes;
  std::vector<Rational> offsets;
  std::vector<RVector> dom_a;
  std::vector<Rational> dom_b;

  bool in_domain(const RVector& x) const {
    for (std::size_t i = 0; i < dom_a.size(); ++i) {
      if (dot(dom_a[i], x) > dom_b[i]) return false;
    }
    return true;
  }
  std::optional<Rational> value(const RVector& x) const {
    if (!in_domain(x)) return std::nullopt;
    Rational best = dot(slopes[0], x) + offsets[0];
    for (std::size_t k = 1; k < slopes.size(); ++k) best = max(best, dot(slopes[k], x) + offsets[k]);
    return best;
  }
};

/// sup over the epigraph of <x, y> - t with x confined to [-bound, bound]^d,
/// by brute-force vertex enumeration.
inline std::optional<Rational> boxed_conjugate(const PlainFn& f, const RVector& y, long bound) {
  const std::size_t n = f.dim + 1;
  LpProblem p{RVector(n), Sense::kMaximize};
  for (std::size_t k = 0; k < f.dim; ++k) p.objective[k] = y[k];
  p.objective[f.dim] = -1;
  auto lift = [&](const RVector& a, const Rational& t) {
    RVector row(n);
    for (std::size_t k = 0; k < f.dim; ++k) row[k] = a[k];
    row[f.dim] = t;
    return row;
  };
  for (std::size_t k = 0; k < f.slopes.size(); ++k) p.add_le(lift(f.slopes[k], -1), -f.offsets[k]);
  for (std::size_t i = 0; i < f.dom_a.size(); ++i) p.add_le(lift(f.dom_a[i], 0), f.dom_b[i]);
  for (std::size_t k = 0; k < f.dim; ++k) {
    RVector e(f.dim);
    e[k] = 1;
    p.add_le(lift(e, 0), Rational(bound));
    p.add_le(lift(-e, 0), Rational(bound));
  }
  return best_vertex_value(p);
}

/// Conjugate value, or nullopt for +inf: the boxed supremum stabilizes
/// between two box sizes exactly when it is finite.
inline std::optional<Rational> conjugate_value(const PlainFn& f, const RVector& y) {
  const auto small = boxed_conjugate(f, y, 40);
  const auto large = boxed_conjugate(f, y, 80);
  if (small && large && *small == *large) return small;
  return std::nullopt;
}

}  // namespace convexlab::oracle
