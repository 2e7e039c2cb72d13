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

#include "convexlab/error.hpp"

namespace convexlab {

namespace {

std::optional<RVector> escape_point(const Region& from, const Region& into) {
  if (!from.is_polyhedral() || !into.is_polyhedral()) return std::nullopt;
  return from.polyhedron().point_outside(into.polyhedron());
}

std::vector<ConvexFn> conjugates(const std::vector<ConvexFn>& fs) {
  std::vector<ConvexFn> out;
  for (const auto& f : fs) out.push_back(conjugate(f));
  return out;
}

}  // namespace

Region eps_subdiff(const ConvexFn& f, const RVector& x, const Rational& eps) {
  require(eps.sign() >= 0, ErrorCode::kMalformedInput, "eps must be nonnegative");
  require(x.dim() == f.dim(), ErrorCode::kMalformedInput, "point dimension mismatch");
  if (!f.is_polyhedral()) return f.analytic().entry().eps_subdiff(x, eps);
  const std::size_t d = f.dim();
  const ExtReal fx = f.evaluate(x);
  if (!fx.is_finite()) return Polyhedron::empty(d);
  const PolyhedralFn fc = f.polyhedral().conjugate();
  const HRep& dom = fc.domain().hrep();
  HRep h{d, dom.ineqs, dom.eqs};
  for (const auto& p : fc.pieces()) {
    h.ineqs.push_back({p.slope - x, eps - fx.value() - p.offset});
  }
  return Polyhedron::from_hrep(std::move(h));
}

Region subdiff(const ConvexFn& f, const RVector& x) { return eps_subdiff(f, x, Rational(0)); }

ExtReal fenchel_young_residual(const ConvexFn& f, const RVector& x, const RVector& y) {
  const ExtReal fx = f.evaluate(x);
  const ExtReal fy = conjugate(f).evaluate(y);
  if (!fx.is_finite() || !fy.is_finite()) return ExtReal::plus_infinity();
  return fx.value() + fy.value() - dot(x, y);
}

Region sum_eps_subdiffs(const std::vector<ConvexFn>& fs, const RVector& x,
                        const std::vector<Rational>& eps) {
  require(!fs.empty() && fs.size() == eps.size(), ErrorCode::kMalformedInput,
          "one eps per function required");
  const std::size_t d = x.dim();
  std::vector<Region> regions;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    regions.push_back(eps_subdiff(fs[i], x, eps[i]));
    if (regions.back().is_empty()) return Polyhedron::empty(d);
  }
  if (regions.size() == 1) return regions.front();
  std::vector<Polyhedron> polys;
  std::optional<Region> analytic;
  for (const auto& r : regions) {
    if (r.is_polyhedral()) {
      polys.push_back(r.polyhedron());
    } else if (analytic) {
      fail(ErrorCode::kUnsupportedCombination, "sum of two non-polyhedral eps-subdifferentials");
    } else {
      analytic = r;
    }
  }
  const Polyhedron q = minkowski_sum(polys, d);
  if (!analytic) return q;
  const auto* p = std::get_if<ParabolaEpsRegion>(&analytic->kind());
  if (p && p->at.is_zero() && q.recession_cone().contains(RVector{-1, 0})) {
    // Every y: y - (q0 - t e1) lies in the parabola region for t large.
    return Polyhedron::whole_space(2);
  }
  fail(ErrorCode::kUnsupportedCombination,
       "sum of " + analytic->describe() + " and a polyhedron is outside the catalog");
}

Region sum_eps_subdiffs(const std::vector<ConvexFn>& fs, const RVector& x, const Rational& eps) {
  return sum_eps_subdiffs(fs, x, std::vector<Rational>(fs.size(), eps));
}

CheckResult condition_i_check(const std::vector<ConvexFn>& fs, const RVector& x,
                              const Rational& eps, const Rational& k) {
  require(eps.sign() > 0, ErrorCode::kMalformedInput, "condition (i) needs eps > 0");
  require(k >= Rational(1), ErrorCode::kMalformedInput, "condition (i) needs K >= 1");
  const Region lhs = sum_eps_subdiffs(fs, x, eps);
  const Region rhs = sum_eps_subdiffs(fs, x, k * eps);
  require(lhs.is_closed(), ErrorCode::kUnsupportedCombination, "closure of " + lhs.describe());
  CheckResult out;
  out.holds = rhs.includes(lhs);
  if (!out.holds) out.witness = escape_point(lhs, rhs);
  out.detail = "cl(sum) = " + lhs.describe() + "; K-sum = " + rhs.describe();
  return out;
}

KSweep condition_i_sweep(const std::vector<ConvexFn>& fs, const RVector& x, const Rational& eps) {
  KSweep out;
  for (long k = 1; k <= static_cast<long>(fs.size()) + 1; ++k) {
    out.per_k.push_back(condition_i_check(fs, x, eps, Rational(k)));
    if (out.per_k.back().holds && !out.least_k) out.least_k = k;
  }
  return out;
}

CheckResult condition_ii_check(const std::vector<ConvexFn>& fs, const std::vector<RVector>& duals) {
  const ConvexFn lhs = conjugate(fn_sum(fs));
  const std::vector<ConvexFn> cs = conjugates(fs);
  CheckResult out;
  for (const auto& y : duals) {
    const ExtReal a = lhs.evaluate(y);
    const ExtReal b = inf_conv_value(cs, y).value;
    if (a != b) {
      out.witness = y;
      out.detail = "(sum f)*" + y.str() + " = " + a.str() + " but inf-conv = " + b.str();
      return out;
    }
  }
  out.holds = true;
  out.detail = "agree at " + std::to_string(duals.size()) + " duals";
  bool all_polyhedral = lhs.is_polyhedral();
  for (const auto& c : cs) all_polyhedral = all_polyhedral && c.is_polyhedral();
  if (all_polyhedral) {
    std::vector<Polyhedron> epis;
    for (const auto& c : cs) epis.push_back(c.polyhedral().epigraph());
    const Polyhedron sum = minkowski_sum(epis, lhs.dim() + 1);
    const Polyhedron& epi = lhs.polyhedral().epigraph();
    if (auto p = epi.point_outside(sum)) {
      out.holds = false;
      out.witness = p;
    } else if (auto q = sum.point_outside(epi)) {
      out.holds = false;
      out.witness = q;
    }
    out.detail += out.holds ? "; epigraphs equal" : "; epigraphs differ";
  }
  return out;
}

RVector EpsSplit::total() const {
  RVector s(parts.front().point.dim());
  for (const auto& p : parts) s += p.point;
  return s;
}

Rational EpsSplit::total_eps() const {
  Rational s;
  for (const auto& p : parts) s += p.eps;
  return s;
}

namespace {

// sum and cs are fn_sum(fs) and the conjugates, shared across calls.
EpsSplit decompose_with(const std::vector<ConvexFn>& fs, const std::vector<ConvexFn>& cs,
                        const ConvexFn& sum, const RVector& x, const RVector& y,
                        const Rational& eps, const Rational& eta) {
  const ExtReal r = fenchel_young_residual(sum, x, y);
  if (!r.is_finite() || r.value() > eps) {
    fail(ErrorCode::kDecompositionFailed,
         y.str() + " is not an eps-subgradient of the sum at " + x.str() + " (residual " +
             r.str() + ")");
  }
  EpsSplit out;
  if (fs.size() == 1) {
    out.parts.push_back({y, eps + eta, r.value()});
    return out;
  }
  const std::vector<RVector> pts = inf_conv_near_split(cs, y, eta);
  Rational rest;
  Rational all;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const ExtReal g = fenchel_young_residual(fs[i], x, pts[i]);
    require(g.is_finite(), ErrorCode::kDecompositionFailed, "split part outside a domain");
    out.parts.push_back({pts[i], g.value(), g.value()});
    all += g.value();
    if (i > 0) rest += g.value();
  }
  if (all > eps + eta) {
    const ExtReal gap = inf_conv_value(cs, y).value - conjugate(sum).evaluate(y);
    fail(ErrorCode::kDecompositionFailed,
         "no split within eps + eta at " + y.str() + ": inf-conv gap " + gap.str());
  }
  out.parts.front().eps = eps + eta - rest;
  return out;
}

}  // namespace

EpsSplit decompose_subgradient(const std::vector<ConvexFn>& fs, const RVector& x,
                               const RVector& y, const Rational& eps, const Rational& eta) {
  require(eta.sign() > 0, ErrorCode::kMalformedInput, "decomposition needs eta > 0");
  require(eps.sign() >= 0, ErrorCode::kMalformedInput, "eps must be nonnegative");
  return decompose_with(fs, conjugates(fs), fn_sum(fs), x, y, eps, eta);
}

std::vector<RVector> generator_points(const Polyhedron& p) {
  const VRep& v = p.vrep();
  std::vector<RVector> out;
  if (v.is_empty()) return out;
  out = v.vertices;
  const RVector& base = v.vertices.front();
  for (const auto& r : v.rays) out.push_back(base + r);
  for (const auto& l : v.lines) {
    out.push_back(base + l);
    out.push_back(base - l);
  }
  return out;
}

ConditionIvResult condition_iv_check(const std::vector<ConvexFn>& fs, const RVector& x,
                                     const Rational& eps, const Rational& eta) {
  require(eta.sign() > 0, ErrorCode::kMalformedInput, "condition (iv) needs eta > 0");
  const ConvexFn sum = fn_sum(fs);
  const Region lhs = eps_subdiff(sum, x, eps);
  const Region outer = eps_subdiff(sum, x, eps + eta);
  ConditionIvResult out;
  if (!lhs.is_polyhedral()) {
    require(fs.size() == 1, ErrorCode::kUnsupportedCombination,
            "non-polyhedral eps-subdifferential of a sum");
    out.holds = true;
    out.detail = "single function: the split is the point itself";
    return out;
  }
  require(eps.sign() >= 0, ErrorCode::kMalformedInput, "eps must be nonnegative");
  const std::vector<ConvexFn> cs = conjugates(fs);
  for (const auto& y : generator_points(lhs.polyhedron())) {
    EpsSplit split;
    try {
      split = decompose_with(fs, cs, sum, x, y, eps, eta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDecompositionFailed) throw;
      out.witness = y;
      out.detail = e.what();
      return out;
    }
    bool ok = split.total() == y && split.total_eps() == eps + eta;
    for (std::size_t i = 0; ok && i < fs.size(); ++i) {
      const EpsSplitPart& p = split.parts[i];
      ok = p.residual <= p.eps && eps_subdiff(fs[i], x, p.eps).contains(p.point);
    }
    out.splits.push_back(std::move(split));
    if (!ok) {
      out.witness = y;
      out.detail = "split at " + y.str() + " fails verification";
      return out;
    }
  }
  // Outer inclusion for the even split and each one-sided split.
  const std::size_t m = fs.size();
  std::vector<std::vector<Rational>> shares;
  shares.emplace_back(m, (eps + eta) / Rational(static_cast<long>(m)));
  for (std::size_t i = 0; i < m && m > 1; ++i) {
    std::vector<Rational> s(m);
    s[i] = eps + eta;
    shares.push_back(std::move(s));
  }
  for (const auto& s : shares) {
    const Region inner = sum_eps_subdiffs(fs, x, s);
    if (!outer.includes(inner)) {
      out.witness = escape_point(inner, outer);
      out.detail = "split sum leaves d_{eps+eta}(sum f)(x)";
      return out;
    }
  }
  out.holds = true;
  out.detail = std::to_string(out.splits.size()) + " generator splits verified";
  return out;
}

SumRuleResult sum_rule_check(const std::vector<ConvexFn>& fs, const RVector& x) {
  const Region lhs = subdiff(fn_sum(fs), x);
  const Region rhs = sum_eps_subdiffs(fs, x, Rational(0));
  const bool holds = lhs.equals(rhs);
  std::optional<RVector> witness;
  if (!holds) {
    witness = escape_point(lhs, rhs);
    if (!witness) witness = escape_point(rhs, lhs);
  }
  return SumRuleResult{holds, lhs, rhs, witness};
}

CheckResult hup_sandwich_check(const std::vector<ConvexFn>& fs, const RVector& x,
                               const Rational& eta) {
  require(eta.sign() > 0, ErrorCode::kMalformedInput, "sandwich needs eta > 0");
  const ConvexFn sum = fn_sum(fs);
  const Region a = subdiff(sum, x);
  const Region b = sum_eps_subdiffs(fs, x, eta);
  const Region c = eps_subdiff(sum, x, Rational(static_cast<long>(fs.size())) * eta);
  CheckResult out;
  if (!b.includes(a)) {
    out.witness = escape_point(a, b);
    out.detail = "d(sum f)(x) not within sum d_eta f_i(x)";
  } else if (!c.includes(b)) {
    out.witness = escape_point(b, c);
    out.detail = "sum d_eta f_i(x) not within d_{m eta}(sum f)(x)";
  } else {
    out.holds = true;
    out.detail = "both inclusions hold";
  }
  return out;
}

}  // namespace convexlab
