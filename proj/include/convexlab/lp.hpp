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

#include <string>
#include <vector>

#include "convexlab/vector.hpp"

namespace convexlab {

enum class Sense { kMinimize, kMaximize };

/// Linear program over free variables x in R^n:
///   optimize <objective, x>  s.t.  <ineq_matrix[i], x> <= ineq_rhs[i],
///                                  <eq_matrix[j], x>  == eq_rhs[j].
struct LpProblem {
  RVector objective;
  std::vector<RVector> ineq_matrix;
  std::vector<Rational> ineq_rhs;
  std::vector<RVector> eq_matrix;
  std::vector<Rational> eq_rhs;
  Sense sense = Sense::kMinimize;

  LpProblem() = default;
  explicit LpProblem(RVector obj, Sense s = Sense::kMinimize)
      : objective(std::move(obj)), sense(s) {}

  std::size_t dim() const { return objective.dim(); }
  void add_le(RVector a, Rational b) {
    ineq_matrix.push_back(std::move(a));
    ineq_rhs.push_back(std::move(b));
  }
  void add_ge(const RVector& a, const Rational& b) { add_le(-a, -b); }
  void add_eq(RVector a, Rational b) {
    eq_matrix.push_back(std::move(a));
    eq_rhs.push_back(std::move(b));
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // kOptimal
  RVector point;
  Rational value;
  // kUnbounded: feasible direction with strictly improving objective, plus a
  // feasible starting point.
  RVector ray;
  // kInfeasible: multipliers w_ineq >= 0 and w_eq with
  //   w_ineq^T A + w_eq^T E = 0  and  w_ineq^T b + w_eq^T d < 0.
  std::vector<Rational> farkas_ineq;
  std::vector<Rational> farkas_eq;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

struct LpOptions {
  /// Refine an optimal solution to the lexicographically smallest optimal
  /// point (coordinate by coordinate, stopping at the first coordinate that is
  /// unbounded below on the optimal face).
  bool canonical_optimum = true;
};

/// Exact two-phase primal simplex with Bland's anti-cycling rule.
LpOutcome lp_solve(const LpProblem& problem, const LpOptions& options = {});

}  // namespace convexlab
