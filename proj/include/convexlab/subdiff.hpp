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
#include <vector>

#include "convexlab/convex_fn.hpp"
#include "convexlab/region.hpp"

namespace convexlab {

/// {y : f(x) + f*(y) - <x, y> <= eps}; empty when x is outside dom f.
Region eps_subdiff(const ConvexFn& f, const RVector& x, const Rational& eps);
Region subdiff(const ConvexFn& f, const RVector& x);

/// f(x) + f*(y) - <x, y>, the Fenchel-Young residual (+inf off the domains).
ExtReal fenchel_young_residual(const ConvexFn& f, const RVector& x, const RVector& y);

/// Sum of eps_i-subdifferentials of f_i at x. Polyhedral regions are added
/// exactly; a parabola eps-region at the origin plus a polyhedral sum whose
/// recession cone holds (-1, 0) is the whole plane.
Region sum_eps_subdiffs(const std::vector<ConvexFn>& fs, const RVector& x,
                        const std::vector<Rational>& eps);
Region sum_eps_subdiffs(const std::vector<ConvexFn>& fs, const RVector& x, const Rational& eps);

struct CheckResult {
  bool holds = false;
  std::optional<RVector> witness;
  std::string detail;
};

/// cl(sum d_eps f_i(x)) within sum d_{K eps} f_i(x).
CheckResult condition_i_check(const std::vector<ConvexFn>& fs, const RVector& x,
                              const Rational& eps, const Rational& k);

struct KSweep {
  /// Least K in {1, ..., m+1} for which condition (i) holds.
  std::optional<long> least_k;
  std::vector<CheckResult> per_k;
};
KSweep condition_i_sweep(const std::vector<ConvexFn>& fs, const RVector& x, const Rational& eps);

/// (sum f_i)* == f_1* [] ... [] f_m* at every sample dual; for all-polyhedral
/// lists also as an exact epigraph equality.
CheckResult condition_ii_check(const std::vector<ConvexFn>& fs, const std::vector<RVector>& duals);

struct EpsSplitPart {
  RVector point;
  Rational eps;
  /// Fenchel-Young residual of the part; never above eps.
  Rational residual;
};

struct EpsSplit {
  std::vector<EpsSplitPart> parts;
  RVector total() const;
  Rational total_eps() const;
};

/// Splits y in d_eps(sum f_i)(x) as sum y_i with y_i in d_{eps_i} f_i(x) and
/// sum eps_i = eps + eta, via an eta-optimal split of the conjugates.
/// Raises DecompositionFailed when no such split exists.
EpsSplit decompose_subgradient(const std::vector<ConvexFn>& fs, const RVector& x,
                               const RVector& y, const Rational& eps, const Rational& eta);

struct ConditionIvResult {
  bool holds = false;
  std::vector<EpsSplit> splits;
  std::optional<RVector> witness;
  std::string detail;
};

/// d_eps(sum f_i)(x) within the union of split sums, within d_{eps+eta}(sum f_i)(x).
ConditionIvResult condition_iv_check(const std::vector<ConvexFn>& fs, const RVector& x,
                                     const Rational& eps, const Rational& eta);

struct SumRuleResult {
  bool holds = false;
  Region lhs;
  Region rhs;
  std::optional<RVector> witness;
};

/// d(sum f_i)(x) == sum d f_i(x).
SumRuleResult sum_rule_check(const std::vector<ConvexFn>& fs, const RVector& x);

/// d(sum f_i)(x) within sum d_eta f_i(x) within d_{m eta}(sum f_i)(x).
CheckResult hup_sandwich_check(const std::vector<ConvexFn>& fs, const RVector& x,
                               const Rational& eta);

/// Generators of a polyhedral region as sample points: vertices, the first
/// vertex moved along each ray, and along each line in both directions.
std::vector<RVector> generator_points(const Polyhedron& p);

}  // namespace convexlab
