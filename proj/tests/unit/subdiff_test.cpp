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

#include "convexlab/subdiff.hpp"

#include <gtest/gtest.h>

#include "convexlab/error.hpp"
#include "convexlab/generators.hpp"

namespace convexlab {
namespace {

Polyhedron interval(Rational lo, Rational hi) { return Polyhedron::box(RVector{lo}, RVector{hi}); }
Polyhedron half_line_up() { return Polyhedron::from_hrep(HRep{1, {{RVector{-1}, 0}}, {}}); }
ConvexFn abs_fn() { return PolyhedralFn::max_affine({RVector{1}, RVector{-1}}, {0, 0}); }
ConvexFn up_indicator() { return PolyhedralFn::indicator(half_line_up()); }
ConvexFn parabola() { return ConvexFn::catalog(kParabolaIndicator); }
ConvexFn halfplane() {
  return PolyhedralFn::indicator(Polyhedron::from_hrep(HRep{2, {{RVector{-1, 0}, 0}}, {}}));
}
std::vector<ConvexFn> example() { return {parabola(), halfplane()}; }
std::vector<ConvexFn> abs_pair() { return {abs_fn(), up_indicator()}; }
const RVector kOrigin2{0, 0};
const RVector kOrigin1{0};

Polyhedron axis_x() { return Polyhedron::from_hrep(HRep{2, {}, {{RVector{0, 1}, 0}}}); }

TEST(EpsSubdiff, ParabolaAtOrigin) {
  const Region r = eps_subdiff(parabola(), kOrigin2, Rational(1, 2));
  EXPECT_FALSE(r.is_polyhedral());
  EXPECT_TRUE(r.contains(RVector{1, 1}));
  EXPECT_FALSE(r.contains(RVector{1, 2}));
  // eps = 2: boundary (1, 2).
  const Region r2 = eps_subdiff(parabola(), kOrigin2, Rational(2));
  EXPECT_TRUE(r2.contains(RVector{1, 2}));
  EXPECT_FALSE(r2.contains(RVector{1, 3}));
  EXPECT_TRUE(r2.contains(RVector{0, 0}));
  EXPECT_FALSE(r2.contains(RVector{0, 1}));
  EXPECT_FALSE(r2.contains(RVector{-1, 0}));
}

TEST(EpsSubdiff, HalfplaneAtOrigin) {
  const Polyhedron expect = Polyhedron::cone(2, {RVector{-1, 0}});
  for (const Rational eps : {Rational(0), Rational(1, 2), Rational(1)}) {
    const Region r = eps_subdiff(halfplane(), kOrigin2, eps);
    ASSERT_TRUE(r.is_polyhedral());
    EXPECT_TRUE(r.polyhedron().equals(expect));
  }
}

TEST(EpsSubdiff, HalfLineIndicatorAtOneMatchesDefinition) {
  for (const Rational eps : {Rational(0), Rational(1, 3), Rational(2)}) {
    const Region r = eps_subdiff(up_indicator(), RVector{1}, eps);
    EXPECT_TRUE(r.polyhedron().equals(interval(-eps, 0)));
    // Brute force over x' in [0, 50]: y (x' - 1) <= eps.
    for (long i = -40; i <= 40; ++i) {
      const Rational y(i, 8);
      bool member = true;
      for (long j = 0; j <= 200; ++j) {
        if (y * (Rational(j, 4) - 1) > eps) member = false;
      }
      EXPECT_EQ(r.contains(RVector{y}), member) << y;
    }
  }
}

TEST(EpsSubdiff, OutsideDomainIsEmpty) {
  EXPECT_TRUE(eps_subdiff(up_indicator(), RVector{-1}, Rational(1)).is_empty());
  EXPECT_TRUE(eps_subdiff(parabola(), RVector{1, 0}, Rational(1)).is_empty());
}

TEST(Subdiff, Examples) {
  EXPECT_TRUE(subdiff(abs_fn(), kOrigin1).polyhedron().equals(interval(-1, 1)));
  EXPECT_TRUE(subdiff(parabola(), kOrigin2).polyhedron().equals(Polyhedron::cone(2, {RVector{1, 0}})));
  const ConvexFn origin = PolyhedralFn::indicator(Polyhedron::point(kOrigin2));
  EXPECT_TRUE(subdiff(origin, kOrigin2).polyhedron().equals(Polyhedron::whole_space(2)));
  // Boundary point (-1/2, 1): normal direction (1, 1).
  EXPECT_TRUE(subdiff(parabola(), RVector{Rational(-1, 2), 1})
                  .polyhedron()
                  .equals(Polyhedron::cone(2, {RVector{1, 1}})));
  EXPECT_TRUE(subdiff(parabola(), RVector{-1, 0}).polyhedron().equals(Polyhedron::point(kOrigin2)));
}

TEST(SumEpsSubdiffs, Examples) {
  for (const Rational eps : {Rational(1, 2), Rational(1), Rational(1, 100)}) {
    const Region s = sum_eps_subdiffs(example(), kOrigin2, eps);
    EXPECT_TRUE(s.polyhedron().equals(Polyhedron::whole_space(2)));
  }
  const Region s = sum_eps_subdiffs(abs_pair(), kOrigin1, Rational(0));
  EXPECT_TRUE(s.polyhedron().equals(Polyhedron::from_hrep(HRep{1, {{RVector{1}, 1}}, {}})));
  const Region single = sum_eps_subdiffs({parabola()}, kOrigin2, Rational(1));
  EXPECT_TRUE(single.includes(eps_subdiff(parabola(), kOrigin2, Rational(1))));
  EXPECT_TRUE(eps_subdiff(parabola(), kOrigin2, Rational(1)).includes(single));
}

TEST(ConditionI, Examples) {
  EXPECT_TRUE(condition_i_check(example(), kOrigin2, Rational(1), Rational(1)).holds);
  EXPECT_TRUE(condition_i_check(abs_pair(), kOrigin1, Rational(1, 2), Rational(1)).holds);
  const KSweep sweep = condition_i_sweep(abs_pair(), RVector{2}, Rational(1));
  ASSERT_TRUE(sweep.least_k.has_value());
  EXPECT_EQ(*sweep.least_k, 1);
  EXPECT_EQ(sweep.per_k.size(), 3u);
}

TEST(ConditionII, Examples) {
  std::vector<RVector> duals;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) duals.push_back(RVector{a, b});
  }
  EXPECT_TRUE(condition_ii_check(example(), duals).holds);
  const CheckResult poly = condition_ii_check(abs_pair(), {RVector{0}, RVector{1}, RVector{-3}});
  EXPECT_TRUE(poly.holds);
  EXPECT_NE(poly.detail.find("epigraphs equal"), std::string::npos);
  EXPECT_TRUE(condition_ii_check({abs_fn()}, {RVector{1}}).holds);
}

TEST(Decompose, ExactSplitForAbsPair) {
  const EpsSplit s = decompose_subgradient(abs_pair(), kOrigin1, RVector{1}, Rational(0), Rational(1, 2));
  ASSERT_EQ(s.parts.size(), 2u);
  EXPECT_EQ(s.parts[0].point, RVector{1});
  EXPECT_EQ(s.parts[1].point, RVector{0});
  EXPECT_EQ(s.parts[0].residual, Rational(0));
  EXPECT_EQ(s.parts[1].residual, Rational(0));
  EXPECT_EQ(s.total_eps(), Rational(1, 2));
}

TEST(Decompose, ParabolaPairFollowsTheParametricMinimizer) {
  for (const Rational eta : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(3)}) {
    const EpsSplit s = decompose_subgradient(example(), kOrigin2, RVector{1, 1}, Rational(0), eta);
    const Rational a = max(Rational(1), Rational(1) / (Rational(2) * eta));
    EXPECT_EQ(s.parts[0].point, (RVector{a, 1}));
    EXPECT_EQ(s.parts[1].point, (RVector{1 - a, 0}));
    EXPECT_EQ(s.parts[0].eps, eta);
    EXPECT_EQ(s.parts[1].eps, Rational(0));
    EXPECT_EQ(s.parts[0].residual, Rational(1) / (Rational(2) * a));
    EXPECT_LE(s.parts[0].residual, s.parts[0].eps);
  }
}

TEST(Decompose, SingleFunction) {
  const EpsSplit s = decompose_subgradient({abs_fn()}, kOrigin1, RVector{Rational(1, 2)}, Rational(0), Rational(1));
  ASSERT_EQ(s.parts.size(), 1u);
  EXPECT_EQ(s.parts[0].point, RVector{Rational(1, 2)});
  EXPECT_EQ(s.parts[0].eps, Rational(1));
}

TEST(Decompose, RejectsNonSubgradients) {
  try {
    decompose_subgradient(abs_pair(), kOrigin1, RVector{2}, Rational(0), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDecompositionFailed);
  }
}

TEST(ConditionIV, Examples) {
  const ConditionIvResult a = condition_iv_check(abs_pair(), kOrigin1, Rational(0), Rational(1, 2));
  EXPECT_TRUE(a.holds) << a.detail;
  EXPECT_FALSE(a.splits.empty());
  for (const Rational eta : {Rational(1, 4), Rational(1)}) {
    const ConditionIvResult b = condition_iv_check(example(), kOrigin2, Rational(0), eta);
    EXPECT_TRUE(b.holds) << b.detail;
    for (const auto& s : b.splits) EXPECT_LE(s.parts[0].residual + s.parts[1].residual, eta);
  }
  EXPECT_TRUE(condition_iv_check({parabola()}, kOrigin2, Rational(0), Rational(1)).holds);
}

TEST(SumRule, Examples) {
  const SumRuleResult ex = sum_rule_check(example(), kOrigin2);
  EXPECT_FALSE(ex.holds);
  EXPECT_TRUE(ex.lhs.polyhedron().equals(Polyhedron::whole_space(2)));
  EXPECT_TRUE(ex.rhs.polyhedron().equals(axis_x()));
  ASSERT_TRUE(ex.witness.has_value());
  EXPECT_FALSE(ex.rhs.contains(*ex.witness));
  const SumRuleResult p = sum_rule_check(abs_pair(), kOrigin1);
  EXPECT_TRUE(p.holds);
  EXPECT_TRUE(p.lhs.polyhedron().equals(Polyhedron::from_hrep(HRep{1, {{RVector{1}, 1}}, {}})));
  EXPECT_TRUE(sum_rule_check({abs_fn()}, kOrigin1).holds);
}

TEST(HupSandwich, Examples) {
  EXPECT_TRUE(hup_sandwich_check(abs_pair(), kOrigin1, Rational(1, 4)).holds);
  EXPECT_TRUE(hup_sandwich_check(example(), kOrigin2, Rational(1, 2)).holds);
  EXPECT_TRUE(hup_sandwich_check({abs_fn()}, kOrigin1, Rational(1)).holds);
}

// ------------------------------------------------------------ random properties

std::vector<RVector> grid(std::size_t dim) {
  std::vector<RVector> out;
  const std::vector<Rational> ticks = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                       Rational(1, 3), Rational(1), Rational(2)};
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    RVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = ticks[idx[k]];
    out.push_back(v);
    std::size_t k = 0;
    while (k < dim && ++idx[k] == ticks.size()) idx[k++] = 0;
    if (k == dim) break;
  }
  return out;
}

class RandomSubdiff : public ::testing::Test {
 protected:
  InstanceGenerator gen{7};
};

TEST_F(RandomSubdiff, FenchelYoungCharacterizationAndMonotonicity) {
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.uniform(1, 2));
    const ConvexFn f = gen.polyhedral_fn(dim);
    const RVector x = gen.point_in(f.polyhedral().domain());
    const std::vector<Rational> epss = {Rational(0), Rational(1, 4), Rational(1)};
    std::vector<Region> regions;
    for (const auto& eps : epss) regions.push_back(eps_subdiff(f, x, eps));
    for (std::size_t i = 0; i + 1 < regions.size(); ++i) {
      EXPECT_TRUE(regions[i + 1].includes(regions[i]));
    }
    for (const auto& y : grid(dim)) {
      const ExtReal r = fenchel_young_residual(f, x, y);
      for (std::size_t i = 0; i < epss.size(); ++i) {
        EXPECT_EQ(regions[i].contains(y), r.is_finite() && r.value() <= epss[i]);
      }
    }
  }
}

TEST_F(RandomSubdiff, SublinearPin) {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.uniform(1, 3));
    const Polyhedron p = gen.polytope(dim, static_cast<std::size_t>(gen.uniform(1, 5)));
    const ConvexFn f = PolyhedralFn::support(p);
    EXPECT_TRUE(conjugate(f).polyhedral().epigraph().equals(PolyhedralFn::indicator(p).epigraph()));
    for (const Rational eps : {Rational(0), Rational(1, 2), Rational(3)}) {
      EXPECT_TRUE(eps_subdiff(f, RVector(dim), eps).polyhedron().equals(p));
    }
  }
}

TEST_F(RandomSubdiff, DecompositionRoundTripAndGeneralInclusion) {
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.uniform(1, 2));
    const std::size_t m = static_cast<std::size_t>(gen.uniform(2, 3));
    std::vector<ConvexFn> fs;
    for (std::size_t i = 0; i < m; ++i) fs.push_back(gen.polyhedral_fn(dim));
    const ConvexFn sum = fn_sum(fs);
    const RVector x = gen.point_in(sum.polyhedral().domain());
    const Rational eps(1, 2), eta(1, 4);
    const Region s = eps_subdiff(sum, x, eps);
    for (const auto& y : generator_points(s.polyhedron())) {
      const EpsSplit split = decompose_subgradient(fs, x, y, eps, eta);
      EXPECT_EQ(split.total(), y);
      EXPECT_EQ(split.total_eps(), eps + eta);
      for (const auto& part : split.parts) EXPECT_LE(part.residual, part.eps);
    }
    // sum of d_{eps_i} f_i(x) within d_{sum eps_i}(sum f)(x).
    std::vector<Rational> shares;
    Rational total;
    for (std::size_t i = 0; i < m; ++i) {
      shares.push_back(Rational(gen.uniform(0, 3), 2));
      total += shares.back();
    }
    EXPECT_TRUE(eps_subdiff(sum, x, total).includes(sum_eps_subdiffs(fs, x, shares)));
  }
}

}  // namespace
}  // namespace convexlab
