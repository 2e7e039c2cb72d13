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

#include "convexlab/duality.hpp"

#include <functional>
#include <future>

#include "convexlab/error.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/lp.hpp"
#include "convexlab/subdiff.hpp"

namespace convexlab {

namespace {

std::vector<ConvexFn> conjugates(const std::vector<ConvexFn>& fs) {
  std::vector<ConvexFn> out;
  for (const auto& f : fs) out.push_back(conjugate(f));
  return out;
}

RVector concat_all(const std::vector<RVector>& parts) {
  RVector out;
  for (const auto& p : parts) out = out.concat(p);
  return out;
}

// Variables: per block (x_i, t_i). Objective sum t_i; coupling x in k.
struct BlockLp {
  LpProblem lp;
  std::vector<std::size_t> base;
  std::vector<std::size_t> dims;

  RVector point(const RVector& sol) const {
    RVector out;
    for (std::size_t i = 0; i < base.size(); ++i) out = out.concat(sol.slice(base[i], dims[i]));
    return out;
  }
};

BlockLp block_lp(const std::vector<PolyhedralFn>& fs, const Polyhedron& k) {
  BlockLp b;
  std::size_t n = 0;
  for (const auto& f : fs) {
    b.base.push_back(n);
    b.dims.push_back(f.dim());
    n += f.dim() + 1;
  }
  b.lp = LpProblem{RVector(n)};
  std::size_t off = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    b.lp.objective[b.base[i] + b.dims[i]] = 1;
    const HRep& h = fs[i].epigraph().hrep();
    auto place = [&](const RVector& a) {
      RVector row(n);
      for (std::size_t c = 0; c <= b.dims[i]; ++c) row[b.base[i] + c] = a[c];
      return row;
    };
    for (const auto& s : h.ineqs) b.lp.add_le(place(s.a), s.b);
    for (const auto& e : h.eqs) b.lp.add_eq(place(e.a), e.b);
    off += b.dims[i];
  }
  auto couple = [&](const RVector& a) {
    RVector row(n);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t c = 0; c < b.dims[i]; ++c) row[b.base[i] + c] = a[pos + c];
      pos += b.dims[i];
    }
    return row;
  };
  const HRep& kh = k.hrep();
  for (const auto& s : kh.ineqs) b.lp.add_le(couple(s.a), s.b);
  for (const auto& e : kh.eqs) b.lp.add_eq(couple(e.a), e.b);
  return b;
}

std::vector<PolyhedralFn> block_fns(const MonotropicInstance& inst) {
  std::vector<PolyhedralFn> out;
  for (const auto& b : inst.blocks()) out.push_back(b.fn.polyhedral());
  return out;
}

ExtReal negate_sum_conjugate_at_zero(const std::vector<ConvexFn>& fs) {
  try {
    const ConvexFn s = fn_sum(fs);
    return -conjugate(s).evaluate(RVector(s.dim()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kImproperFunction) return ExtReal::plus_infinity();
    throw;
  }
}

// ---- exact minimization of q(x, y) = 2x + y^2 over 2-D polyhedra

Rational parabola_form(const RVector& p) { return Rational(2) * p[0] + p[1] * p[1]; }

struct FormMin {
  bool unbounded = false;
  Rational value;
  RVector point;
};

void consider(FormMin& best, bool& have, const RVector& p) {
  const Rational v = parabola_form(p);
  if (!have || v < best.value) {
    best.value = v;
    best.point = p;
    have = true;
  }
}

void min_on_line(FormMin& best, bool& have, const RVector& base, const RVector& dir,
                 const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  const Rational a = dir[1] * dir[1];
  const Rational b = Rational(2) * dir[0] + Rational(2) * base[1] * dir[1];
  Rational lambda;
  if (a.is_zero()) {
    if (b.sign() > 0) {
      require(lo.has_value(), ErrorCode::kInvariantViolation, "form unbounded on a face");
      lambda = *lo;
    } else if (b.sign() < 0) {
      require(hi.has_value(), ErrorCode::kInvariantViolation, "form unbounded on a face");
      lambda = *hi;
    } else {
      lambda = lo ? *lo : Rational(0);
    }
  } else {
    lambda = -b / (Rational(2) * a);
    if (lo && lambda < *lo) lambda = *lo;
    if (hi && lambda > *hi) lambda = *hi;
  }
  consider(best, have, base + dir * lambda);
}

std::size_t affine_dim(const VRep& v) {
  std::vector<RVector> dirs;
  for (std::size_t i = 1; i < v.vertices.size(); ++i) dirs.push_back(v.vertices[i] - v.vertices[0]);
  for (const auto& r : v.rays) dirs.push_back(r);
  for (const auto& l : v.lines) dirs.push_back(l);
  return rank(dirs, v.dim);
}

void min_on_one_dim(FormMin& best, bool& have, const VRep& v) {
  const RVector& base = v.vertices.front();
  if (!v.lines.empty()) {
    min_on_line(best, have, base, v.lines.front(), std::nullopt, std::nullopt);
  } else if (!v.rays.empty()) {
    min_on_line(best, have, base, v.rays.front(), Rational(0), std::nullopt);
  } else {
    min_on_line(best, have, base, v.vertices.back() - base, Rational(0), Rational(1));
  }
}

// Minimum of q over a nonempty polyhedron of R^2. q has no critical point, so
// a finite minimum sits on a face of dimension <= 1.
FormMin minimize_parabola_form(const Polyhedron& p) {
  FormMin best;
  const Polyhedron c = p.canonical();
  const VRep& v = c.vrep();
  if (c.recession_cone().contains(RVector{-1, 0})) {
    const RVector& p0 = v.vertices.front();
    const Rational lambda = max(Rational(0), p0[0] + p0[1] * p0[1] / Rational(2)) + 1;
    best.unbounded = true;
    best.point = p0 - RVector{lambda, 0};
    best.value = parabola_form(best.point);
    return best;
  }
  bool have = false;
  for (const auto& x : v.vertices) consider(best, have, x);
  if (affine_dim(v) <= 1) {
    if (affine_dim(v) == 1) min_on_one_dim(best, have, v);
    return best;
  }
  for (const auto& s : c.hrep().ineqs) {
    const Polyhedron face =
        c.intersect(Polyhedron::from_hrep(HRep{2, {}, {{s.a, s.b}}})).canonical();
    if (face.is_empty()) continue;
    const VRep& fv = face.vrep();
    for (const auto& x : fv.vertices) consider(best, have, x);
    if (affine_dim(fv) == 1) min_on_one_dim(best, have, fv);
  }
  return best;
}

// Point maximizing a common slack into every inequality of the polyhedra
// (slack capped at 1); nullopt when the interiors do not meet `base`.
std::optional<RVector> slack_point(const Polyhedron& base, const std::vector<Polyhedron>& open,
                                   std::size_t d, Rational* slack_out) {
  const std::size_t n = d + 1;
  LpProblem lp{RVector::unit(n, d), Sense::kMaximize};
  auto row = [&](const RVector& a, const Rational& s) { return a.concat(RVector{s}); };
  const HRep& bh = base.hrep();
  for (const auto& s : bh.ineqs) lp.add_le(row(s.a, 0), s.b);
  for (const auto& e : bh.eqs) lp.add_eq(row(e.a, 0), e.b);
  for (const auto& q : open) {
    const Polyhedron qc = q.canonical();
    const HRep& h = qc.hrep();
    for (const auto& e : h.eqs) {
      if (!e.a.is_zero()) {
        if (slack_out) *slack_out = 0;
        return std::nullopt;
      }
    }
    for (const auto& s : h.ineqs) lp.add_le(row(s.a, 1), s.b);
  }
  lp.add_le(RVector::unit(n, d), 1);
  const LpOutcome o = lp_solve(lp);
  if (!o.optimal()) {
    if (slack_out) *slack_out = 0;
    return std::nullopt;
  }
  if (slack_out) *slack_out = o.value;
  if (o.value.sign() <= 0) return std::nullopt;
  return o.point.slice(0, d);
}

Polyhedron domain_of(const ConvexFn& f) { return f.polyhedral().domain(); }

Polyhedron product_domain(const MonotropicInstance& inst, std::size_t i) {
  const std::size_t n = inst.dim();
  const std::size_t off = inst.offset(i);
  const HRep& h = inst.blocks()[i].fn.polyhedral().domain().hrep();
  auto place = [&](const RVector& a) {
    RVector row(n);
    for (std::size_t k = 0; k < a.dim(); ++k) row[off + k] = a[k];
    return row;
  };
  HRep out{n, {}, {}};
  for (const auto& s : h.ineqs) out.ineqs.push_back({place(s.a), s.b});
  for (const auto& e : h.eqs) out.eqs.push_back({place(e.a), e.b});
  return Polyhedron::from_hrep(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------- instance

MonotropicInstance::MonotropicInstance(std::vector<Block> blocks, Constraint constraint)
    : blocks_(std::move(blocks)), constraint_(std::move(constraint)) {
  require(!blocks_.empty(), ErrorCode::kMalformedInput, "instance without blocks");
  for (const auto& b : blocks_) {
    offsets_.push_back(dim_);
    dim_ += b.fn.dim();
  }
  if (const auto* s = std::get_if<SubspaceConstraint>(&constraint_)) {
    for (const auto& v : s->basis) {
      require(v.dim() == dim_, ErrorCode::kMalformedInput,
              "subspace generator has dimension " + std::to_string(v.dim()) + ", expected " +
                  std::to_string(dim_));
    }
  } else {
    const auto& c = std::get<ConeConstraint>(constraint_).cone;
    require(c.dim() == dim_, ErrorCode::kMalformedInput, "cone dimension mismatch");
    require(c.is_cone(), ErrorCode::kInvariantViolation, "constraint is not a cone");
  }
  if (!all_polyhedral() && !is_diagonal()) {
    fail(ErrorCode::kUnsupportedCombination,
         "catalog blocks are supported only under the diagonal subspace constraint");
  }
}

bool MonotropicInstance::all_polyhedral() const {
  for (const auto& b : blocks_) {
    if (!b.fn.is_polyhedral()) return false;
  }
  return true;
}

Polyhedron MonotropicInstance::constraint_set() const {
  if (const auto* s = std::get_if<SubspaceConstraint>(&constraint_)) {
    return Polyhedron::cone(dim_, {}, s->basis);
  }
  return std::get<ConeConstraint>(constraint_).cone;
}

bool MonotropicInstance::is_diagonal() const {
  const auto* s = std::get_if<SubspaceConstraint>(&constraint_);
  if (!s) return false;
  const std::size_t d = blocks_.front().fn.dim();
  for (const auto& b : blocks_) {
    if (b.fn.dim() != d) return false;
  }
  std::vector<RVector> diag;
  for (std::size_t k = 0; k < d; ++k) {
    RVector v(dim_);
    for (std::size_t i = 0; i < blocks_.size(); ++i) v[offsets_[i] + k] = 1;
    diag.push_back(std::move(v));
  }
  return same_span(s->basis, diag, dim_);
}

std::vector<ConvexFn> MonotropicInstance::reformulated() const {
  std::vector<ConvexFn> out;
  if (is_diagonal()) {
    for (const auto& b : blocks_) out.push_back(b.fn);
    return out;
  }
  out.push_back(PolyhedralFn::indicator(constraint_set()));
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    out.push_back(blocks_[i].fn.polyhedral().lift(offsets_[i], dim_));
  }
  return out;
}

RVector MonotropicInstance::to_product(const RVector& x) const {
  if (!is_diagonal()) return x;
  RVector out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out = out.concat(x);
  return out;
}

RVector MonotropicInstance::from_product(const RVector& x) const {
  require(x.dim() == dim_, ErrorCode::kMalformedInput, "product point dimension mismatch");
  if (!is_diagonal()) return x;
  return x.slice(0, blocks_.front().fn.dim());
}

Polyhedron MonotropicInstance::feasible_set() const {
  require(all_polyhedral(), ErrorCode::kUnsupportedCombination,
          "feasible set of catalog blocks is not polyhedral");
  Polyhedron p = constraint_set();
  for (std::size_t i = 0; i < blocks_.size(); ++i) p = p.intersect(product_domain(*this, i));
  return p.canonical();
}

MonotropicInstance build_dual(const MonotropicInstance& inst) {
  std::vector<Block> blocks;
  for (const auto& b : inst.blocks()) blocks.push_back({b.name + "*", conjugate(b.fn)});
  if (const auto* s = std::get_if<SubspaceConstraint>(&inst.constraint())) {
    return MonotropicInstance(std::move(blocks),
                              SubspaceConstraint{orthogonal_complement(s->basis, inst.dim())});
  }
  return MonotropicInstance(std::move(blocks),
                            ConeConstraint{dual_cone(std::get<ConeConstraint>(inst.constraint()).cone)});
}

// ---------------------------------------------------------------- solves

SolveResult solve_primal(const MonotropicInstance& inst) {
  SolveResult r;
  if (inst.all_polyhedral()) {
    const BlockLp b = block_lp(block_fns(inst), inst.constraint_set());
    const LpOutcome o = lp_solve(b.lp);
    switch (o.status) {
      case LpStatus::kOptimal:
        r.value = o.value;
        r.attained = true;
        r.witness = b.point(o.point);
        r.certificate = "lp-optimal";
        break;
      case LpStatus::kInfeasible:
        r.value = ExtReal::plus_infinity();
        r.certificate = "lp-infeasible (Farkas)";
        break;
      case LpStatus::kUnbounded:
        r.value = ExtReal::minus_infinity();
        r.certificate = "lp-unbounded ray " + o.ray.str();
        break;
    }
  } else {
    std::optional<ConvexFn> sum;
    try {
      sum = fn_sum(inst.reformulated());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kImproperFunction) throw;
    }
    if (!sum) {
      r.value = ExtReal::plus_infinity();
      r.certificate = "domains do not meet";
    } else {
      require(sum->is_polyhedral(), ErrorCode::kUnsupportedCombination,
              "catalog sum does not reduce to a polyhedral function");
      const auto [value, point] = sum->polyhedral().minimum();
      r.value = value;
      r.attained = point.has_value();
      if (point) r.witness = inst.to_product(*point);
      r.certificate = "minimum of the reduced sum";
    }
  }
  r.second_route = negate_sum_conjugate_at_zero(inst.reformulated());
  return r;
}

SolveResult solve_dual(const MonotropicInstance& inst) {
  SolveResult r;
  const std::vector<ConvexFn> ref = inst.reformulated();
  if (inst.all_polyhedral()) {
    const MonotropicInstance dual = build_dual(inst);
    const BlockLp b = block_lp(block_fns(dual), dual.constraint_set());
    const LpOutcome o = lp_solve(b.lp);
    switch (o.status) {
      case LpStatus::kOptimal:
        r.value = -o.value;
        r.attained = true;
        r.witness = b.point(o.point);
        r.certificate = "lp-optimal";
        break;
      case LpStatus::kInfeasible:
        r.value = ExtReal::minus_infinity();
        r.certificate = "lp-infeasible (Farkas)";
        break;
      case LpStatus::kUnbounded:
        r.value = ExtReal::plus_infinity();
        r.certificate = "lp-unbounded ray " + o.ray.str();
        break;
    }
  } else {
    // Diagonal: d = -(f_1* [] ... [] f_m*)(0), attainment from the catalog.
    const InfConvResult ic = inf_conv_value(conjugates(ref), RVector(ref.front().dim()));
    r.value = -ic.value;
    r.attained = ic.attained;
    if (ic.witness) r.witness = concat_all(*ic.witness);
    r.certificate = ic.certificate;
  }
  r.second_route = -inf_conv_value(conjugates(ref), RVector(ref.front().dim())).value;
  return r;
}

// ---------------------------------------------------------------- CQ checks

CqResult bertsekas_cq_check(const MonotropicInstance& inst, const RVector& x, const Rational& eps) {
  const std::vector<ConvexFn> ref = inst.reformulated();
  const RVector xr = inst.from_product(x);
  require(inst.to_product(xr) == x, ErrorCode::kMalformedInput, "point violates the constraint");
  for (const auto& f : ref) {
    require(f.in_domain(xr), ErrorCode::kMalformedInput, "point outside a domain: " + x.str());
  }
  const Region sum = sum_eps_subdiffs(ref, xr, eps);
  CqResult out;
  out.holds = sum.is_closed();
  out.detail = sum.describe();
  out.witness = xr;
  return out;
}

CqResult interiority_check(const std::vector<ConvexFn>& fs) {
  require(!fs.empty(), ErrorCode::kMalformedInput, "empty function list");
  const std::size_t d = fs.front().dim();
  CqResult out;
  bool polyhedral = true;
  for (const auto& f : fs) polyhedral = polyhedral && f.is_polyhedral();
  if (polyhedral) {
    std::vector<Polyhedron> open;
    for (std::size_t i = 1; i < fs.size(); ++i) open.push_back(domain_of(fs[i]));
    Rational slack;
    out.witness = slack_point(domain_of(fs.front()), open, d, &slack);
    out.holds = out.witness.has_value();
    out.detail = "slack LP value " + slack.str();
    return out;
  }
  std::optional<std::size_t> k;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_polyhedral()) continue;
    if (k || !fs[i].has_tag(kParabolaIndicator)) {
      fail(ErrorCode::kUnsupportedCombination, "interiority with this catalog mixture");
    }
    k = i;
  }
  if (*k == 0) {
    Polyhedron q = Polyhedron::whole_space(2);
    for (std::size_t i = 1; i < fs.size(); ++i) q = q.intersect(domain_of(fs[i]));
    Rational slack;
    const auto centre = slack_point(q, {q}, 2, &slack);
    if (!centre) {
      out.detail = "polyhedral domains have no common interior point";
      return out;
    }
    const FormMin m = minimize_parabola_form(q);
    if (!m.unbounded && m.value.sign() >= 0) {
      out.detail = "min of 2x+y^2 over the other domains is " + m.value.str();
      return out;
    }
    // Pull the point slightly inside; 2x+y^2 stays negative for small steps.
    for (Rational step(1, 2);; step /= 2) {
      const RVector x = m.point + (*centre - m.point) * step;
      if (parabola_form(x).sign() < 0) {
        out.holds = true;
        out.witness = x;
        out.detail = "strictly inside every domain";
        return out;
      }
    }
  }
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (i != *k && !domain_of(fs[i]).equals(Polyhedron::whole_space(2))) {
      fail(ErrorCode::kUnsupportedCombination,
           "interiority with an inner parabola and further restricted domains");
    }
  }
  const Polyhedron p = domain_of(fs.front());
  if (p.is_empty()) {
    out.detail = "first domain is empty";
    return out;
  }
  const FormMin m = minimize_parabola_form(p);
  out.holds = m.unbounded || m.value.sign() < 0;
  if (out.holds) out.witness = m.point;
  out.detail = out.holds ? "first domain meets the parabola interior"
                         : "min of 2x+y^2 over the first domain is " + m.value.str();
  return out;
}

CqResult interiority_check(const MonotropicInstance& inst) {
  CqResult r = interiority_check(inst.reformulated());
  if (r.witness) r.witness = inst.to_product(*r.witness);
  return r;
}

TransversalityResult transversality_check(const ConvexFn& f, const ConvexFn& g) {
  if (!f.is_polyhedral() || !g.is_polyhedral()) {
    fail(ErrorCode::kUnsupportedCombination, "transversality needs polyhedral domains");
  }
  require(f.dim() == g.dim(), ErrorCode::kMalformedInput, "dimension mismatch");
  const std::size_t d = f.dim();
  const Polyhedron diff = minkowski_sum(domain_of(f), domain_of(g).negate());
  TransversalityResult out;
  const VRep& v = diff.vrep();
  std::vector<RVector> rays = v.rays;
  for (const auto& x : v.vertices) {
    if (!x.is_zero()) rays.push_back(x);
  }
  const Polyhedron cone = Polyhedron::cone(d, rays, v.lines).canonical();
  if (!diff.contains(RVector(d))) {
    out.detail = "0 is not in dom f - dom g; generated cone " + cone.describe();
    return out;
  }
  out.holds = cone.is_subspace();
  if (out.holds) out.basis = cone.vrep().lines;
  out.detail = "generated cone " + cone.describe();
  return out;
}

// ---------------------------------------------------------------- report

GapReport gap_report(const MonotropicInstance& inst) {
  GapReport rep;
  const SolveResult p = solve_primal(inst);
  const SolveResult d = solve_dual(inst);
  rep.primal_value = p.value;
  rep.dual_value = d.value;
  rep.primal_attained = p.attained;
  rep.dual_attained = d.attained;
  rep.primal_witness = p.witness;
  rep.dual_witness = d.witness;
  rep.feasible = !p.value.is_plus_infinity();
  rep.gap = p.value == d.value ? ExtReal(0) : p.value - d.value;

  const std::vector<ConvexFn> ref = inst.reformulated();
  const std::size_t n = ref.front().dim();
  std::optional<RVector> feasible_point = p.witness;
  if (!feasible_point && rep.feasible && inst.all_polyhedral()) {
    feasible_point = inst.feasible_set().vrep().vertices.front();
  }

  using Task = std::function<Diagnostic()>;
  auto flag = [](bool holds, std::string witness, std::string detail) {
    return Diagnostic{holds, std::move(witness), std::move(detail)};
  };
  std::vector<std::pair<std::string, Task>> tasks;
  tasks.emplace_back("weak-duality", [&] {
    return flag(d.value <= p.value, "p=" + p.value.str() + " d=" + d.value.str(), "d <= p");
  });
  tasks.emplace_back("primal-routes", [&] {
    return flag(p.value == p.second_route, p.second_route.str(), "-(sum f)*(0) agrees with the solve");
  });
  tasks.emplace_back("dual-routes", [&] {
    return flag(d.value == d.second_route, d.second_route.str(),
                "-(f_1* [] ... [] f_m*)(0) agrees with the solve");
  });
  tasks.emplace_back("interiority", [&] {
    const CqResult r = interiority_check(ref);
    return flag(r.holds, r.witness ? inst.to_product(*r.witness).str() : "-", r.detail);
  });
  tasks.emplace_back("bertsekas", [&]() -> Diagnostic {
    if (!feasible_point) return {std::nullopt, "-", "no feasible point"};
    const CqResult r = bertsekas_cq_check(inst, *feasible_point, Rational(1));
    return flag(r.holds, feasible_point->str(), r.detail);
  });
  tasks.emplace_back("closed-epigraph", [&] {
    const EpiConjSum s = epi_conj_sum(ref);
    return flag(s.closed, s.witness ? s.witness->str() : "-", s.certificate);
  });
  tasks.emplace_back("condition-ii", [&] {
    std::vector<RVector> duals{RVector(n)};
    for (std::size_t k = 0; k < n; ++k) {
      duals.push_back(RVector::unit(n, k));
      duals.push_back(-RVector::unit(n, k));
    }
    const CheckResult r = condition_ii_check(ref, duals);
    return flag(r.holds, r.witness ? r.witness->str() : "-", r.detail);
  });
  tasks.emplace_back("transversality", [&] {
    std::vector<ConvexFn> rest(ref.begin() + 1, ref.end());
    const ConvexFn g = rest.empty() ? ConvexFn(PolyhedralFn::constant(n, 0)) : fn_sum(rest);
    const TransversalityResult r = transversality_check(ref.front(), g);
    std::string basis = "{";
    for (std::size_t i = 0; i < r.basis.size(); ++i) basis += (i ? " " : "") + r.basis[i].str();
    return flag(r.holds, basis + "}", r.detail);
  });

  std::vector<std::future<Diagnostic>> futures;
  for (auto& [name, task] : tasks) {
    futures.push_back(std::async(std::launch::async, [task = task]() -> Diagnostic {
      try {
        return task();
      } catch (const Error& e) {
        return {std::nullopt, "-", std::string("not applicable: ") + e.what()};
      }
    }));
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) rep.cq.emplace(tasks[i].first, futures[i].get());
  return rep;
}

}  // namespace convexlab
