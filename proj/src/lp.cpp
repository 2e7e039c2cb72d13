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

#include "convexlab/lp.hpp"

#include <optional>

#include "convexlab/error.hpp"

namespace convexlab {

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Standard-form tableau. Columns: x+ (n), x- (n), slacks (one per
// inequality), artificials (one per row). All columns are nonnegative.
class Simplex {
 public:
  explicit Simplex(const LpProblem& p) : n_(p.dim()), mi_(p.ineq_matrix.size()) {
    const std::size_t me = p.eq_matrix.size();
    rows_ = mi_ + me;
    art0_ = 2 * n_ + mi_;
    cols_ = art0_ + rows_;
    a_.assign(rows_, std::vector<mpq_class>(cols_, 0));
    rhs_.assign(rows_, 0);
    sigma_.assign(rows_, 1);
    basis_.resize(rows_);
    alive_.assign(rows_, true);
    frozen_.assign(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool ineq = i < mi_;
      const RVector& row = ineq ? p.ineq_matrix[i] : p.eq_matrix[i - mi_];
      const Rational& b = ineq ? p.ineq_rhs[i] : p.eq_rhs[i - mi_];
      const int s = b.sign() < 0 ? -1 : 1;
      sigma_[i] = s;
      for (std::size_t j = 0; j < n_; ++j) {
        a_[i][j] = s * row[j].raw();
        a_[i][n_ + j] = -s * row[j].raw();
      }
      if (ineq) a_[i][2 * n_ + i] = s;
      a_[i][art0_ + i] = 1;
      rhs_[i] = s * b.raw();
      basis_[i] = art0_ + i;
    }
  }

  // Returns false when the phase-1 optimum is positive (infeasible).
  bool phase_one() {
    cost_.assign(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) cost_[art0_ + i] = 1;
    reset_objective_row();
    run(cols_);
    if (objective_value() > 0) return false;
    drive_out_artificials();
    return true;
  }

  std::vector<mpq_class> phase_one_duals() const {
    // y_i = 1 - reduced cost of artificial i.
    std::vector<mpq_class> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) y[i] = 1 - rc_[art0_ + i];
    return y;
  }

  // Returns the entering column on unboundedness, nullopt when optimal.
  std::optional<std::size_t> phase_two(const RVector& c) {
    cost_.assign(cols_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      cost_[j] = c[j].raw();
      cost_[n_ + j] = -c[j].raw();
    }
    reset_objective_row();
    return run(art0_);
  }

  mpq_class objective_value() const { return -rc_rhs_; }

  // After an optimal phase two: pins every nonbasic column with positive
  // reduced cost at zero, so later objectives range over the optimal face.
  void restrict_to_optimal_face() {
    std::vector<bool> basic(cols_, false);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (alive_[i]) basic[basis_[i]] = true;
    }
    for (std::size_t j = 0; j < art0_; ++j) {
      if (!basic[j] && rc_[j] > 0) frozen_[j] = true;
    }
  }

  RVector point() const {
    std::vector<mpq_class> val(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (alive_[i]) val[basis_[i]] = rhs_[i];
    }
    RVector x(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = Rational(mpq_class(val[j] - val[n_ + j]));
    return x;
  }

  RVector ray(std::size_t entering) const {
    std::vector<mpq_class> d(cols_, 0);
    d[entering] = 1;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (alive_[i]) d[basis_[i]] = -a_[i][entering];
    }
    RVector r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = Rational(mpq_class(d[j] - d[n_ + j]));
    return r;
  }

  int sigma(std::size_t i) const { return sigma_[i]; }
  std::size_t rows() const { return rows_; }
  std::size_t ineq_rows() const { return mi_; }

 private:
  void reset_objective_row() {
    rc_ = cost_;
    rc_rhs_ = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!alive_[i]) continue;
      const mpq_class cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) rc_[j] -= cb * a_[i][j];
      rc_rhs_ -= cb * rhs_[i];
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const mpq_class piv = a_[r][e];
    for (std::size_t j = 0; j < cols_; ++j) {
      if (a_[r][j] != 0) a_[r][j] /= piv;
    }
    rhs_[r] /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || !alive_[i] || a_[i][e] == 0) continue;
      const mpq_class f = a_[i][e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    if (rc_[e] != 0) {
      const mpq_class f = rc_[e];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[r][j] != 0) rc_[j] -= f * a_[r][j];
      }
      rc_rhs_ -= f * rhs_[r];
    }
    basis_[r] = e;
  }

  // Bland's rule over columns [0, limit). Returns the entering column if the
  // objective is unbounded below.
  std::optional<std::size_t> run(std::size_t limit) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (rc_[j] < 0 && !frozen_[j]) {
          entering = j;
          break;
        }
      }
      if (!entering) return std::nullopt;
      const std::size_t e = *entering;
      std::optional<std::size_t> leave;
      mpq_class best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!alive_[i] || a_[i][e] <= 0) continue;
        mpq_class ratio = rhs_[i] / a_[i][e];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return e;
      pivot(*leave, e);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!alive_[i] || basis_[i] < art0_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
      } else {
        alive_[i] = false;  // redundant equality row
      }
    }
  }

  std::size_t n_, mi_, rows_ = 0, cols_ = 0, art0_ = 0;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<mpq_class> rhs_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
  std::vector<bool> alive_;
  std::vector<bool> frozen_;
  std::vector<mpq_class> cost_;
  std::vector<mpq_class> rc_;
  mpq_class rc_rhs_;
};

void validate(const LpProblem& p) {
  const std::size_t n = p.dim();
  require(n > 0, ErrorCode::kMalformedInput, "LP with zero variables");
  require(p.ineq_matrix.size() == p.ineq_rhs.size(), ErrorCode::kMalformedInput,
          "LP inequality matrix and right-hand side lengths differ");
  require(p.eq_matrix.size() == p.eq_rhs.size(), ErrorCode::kMalformedInput,
          "LP equality matrix and right-hand side lengths differ");
  for (const auto& r : p.ineq_matrix) {
    require(r.dim() == n, ErrorCode::kMalformedInput, "LP inequality row dimension mismatch");
  }
  for (const auto& r : p.eq_matrix) {
    require(r.dim() == n, ErrorCode::kMalformedInput, "LP equality row dimension mismatch");
  }
}

LpOutcome solve_raw(const LpProblem& p, bool lexmin) {
  LpOutcome out;
  Simplex s(p);
  if (!s.phase_one()) {
    out.status = LpStatus::kInfeasible;
    const auto y = s.phase_one_duals();
    for (std::size_t i = 0; i < s.rows(); ++i) {
      Rational w(mpq_class(-s.sigma(i) * y[i]));
      if (i < s.ineq_rows()) {
        out.farkas_ineq.push_back(w);
      } else {
        out.farkas_eq.push_back(w);
      }
    }
    return out;
  }
  const RVector c = p.sense == Sense::kMinimize ? p.objective : -p.objective;
  if (auto e = s.phase_two(c)) {
    out.status = LpStatus::kUnbounded;
    out.point = s.point();
    out.ray = s.ray(*e);
    return out;
  }
  out.status = LpStatus::kOptimal;
  for (std::size_t k = 0; lexmin && k < p.dim(); ++k) {
    s.restrict_to_optimal_face();
    if (s.phase_two(RVector::unit(p.dim(), k))) break;
  }
  out.point = s.point();
  out.value = dot(p.objective, out.point);
  return out;
}

}  // namespace

LpOutcome lp_solve(const LpProblem& problem, const LpOptions& options) {
  validate(problem);
  return solve_raw(problem, options.canonical_optimum);
}

}  // namespace convexlab
