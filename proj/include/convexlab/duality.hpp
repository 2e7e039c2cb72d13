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

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "convexlab/convex_fn.hpp"

namespace convexlab {

struct Block {
  std::string name;
  ConvexFn fn;
};

/// Coupling constraint x in span(basis) of the product space.
struct SubspaceConstraint {
  std::vector<RVector> basis;
};

/// Coupling constraint x in a polyhedral cone of the product space.
struct ConeConstraint {
  Polyhedron cone;
};

using Constraint = std::variant<SubspaceConstraint, ConeConstraint>;

/// minimize sum f_i(x_i) subject to (x_1, ..., x_m) in S (or C).
class MonotropicInstance {
 public:
  MonotropicInstance(std::vector<Block> blocks, Constraint constraint);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Constraint& constraint() const { return constraint_; }
  /// Product-space dimension.
  std::size_t dim() const { return dim_; }
  std::size_t offset(std::size_t block) const { return offsets_.at(block); }
  bool all_polyhedral() const;
  /// Constraint as a polyhedron of the product space.
  Polyhedron constraint_set() const;

  /// Subspace constraint {(x, ..., x)} over equal block dimensions.
  bool is_diagonal() const;
  /// One function list on a single space whose sum is the primal objective
  /// with the constraint folded in: (f_1, ..., f_m) for diagonal instances,
  /// (indicator of the constraint, lifted f_1, ..., lifted f_m) otherwise.
  std::vector<ConvexFn> reformulated() const;
  /// Map from the reformulated space to the product space and back.
  RVector to_product(const RVector& x) const;
  RVector from_product(const RVector& x) const;

  /// constraint intersected with the product of domains (all-polyhedral only).
  Polyhedron feasible_set() const;

 private:
  std::vector<Block> blocks_;
  Constraint constraint_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> offsets_;
};

/// Conjugate blocks over the orthogonal complement (subspace) or the dual
/// cone (cone). Its optimal value is sup of -sum g_i over that set.
MonotropicInstance build_dual(const MonotropicInstance& inst);

struct SolveResult {
  ExtReal value;
  bool attained = false;
  /// Product-space point.
  std::optional<RVector> witness;
  /// Value from the reformulated single-space identity.
  ExtReal second_route;
  std::string certificate;
};

/// p = inf sum f_i(x_i); second route -(sum of reformulated)*(0).
SolveResult solve_primal(const MonotropicInstance& inst);
/// d = sup -sum f_i*(y_i) over the dual constraint; second route
/// -(infimal convolution of reformulated conjugates)(0).
SolveResult solve_dual(const MonotropicInstance& inst);

struct CqResult {
  bool holds = false;
  std::optional<RVector> witness;
  std::string detail;
};

/// Closedness of sum d_eps f_i(x) over the reformulated list; x is a
/// product-space point.
CqResult bertsekas_cq_check(const MonotropicInstance& inst, const RVector& x, const Rational& eps);

/// dom f_1 meets the interior of every other domain. Polyhedral lists use a
/// slack LP; a parabola indicator is handled by exact minimization of
/// 2x + y^2 over polyhedral faces.
CqResult interiority_check(const std::vector<ConvexFn>& fs);
CqResult interiority_check(const MonotropicInstance& inst);

struct TransversalityResult {
  bool holds = false;
  /// Basis of the generated subspace when it holds.
  std::vector<RVector> basis;
  std::string detail;
};

/// Union of lambda (dom f - dom g), lambda > 0, is a linear subspace.
TransversalityResult transversality_check(const ConvexFn& f, const ConvexFn& g);

struct Diagnostic {
  /// Absent when the check does not apply to the instance.
  std::optional<bool> holds;
  std::string witness;
  std::string detail;
};

struct GapReport {
  bool feasible = false;
  ExtReal primal_value;
  ExtReal dual_value;
  /// primal - dual; zero when both sides are the same infinity.
  ExtReal gap;
  bool primal_attained = false;
  bool dual_attained = false;
  std::optional<RVector> primal_witness;
  std::optional<RVector> dual_witness;
  std::map<std::string, Diagnostic> cq;
};

/// Values, gap, attainment and the constraint-qualification battery. The
/// checks run concurrently; each failure to apply is recorded, never thrown.
GapReport gap_report(const MonotropicInstance& inst);

}  // namespace convexlab
