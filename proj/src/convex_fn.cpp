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

#include "convexlab/convex_fn.hpp"

#include <mutex>
#include <sstream>

#include "convexlab/error.hpp"
#include "convexlab/lp.hpp"

namespace convexlab {

struct PolyhedralFn::Data {
  std::size_t dim = 0;
  Polyhedron epi = Polyhedron::empty(1);
  Polyhedron domain = Polyhedron::empty(1);
  std::vector<Halfspace> dom_ineqs;
  std::vector<Hyperplane> dom_eqs;
  std::vector<AffinePiece> pieces;
  mutable std::mutex mu;
  mutable std::shared_ptr<const Data> conj;
};

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RVector with_height(const RVector& x, const Rational& t) { return x.concat(RVector{t}); }

// Variables: block i holds (z_i, t_i) in R^{d+1}; `extra` trailing variables.
LpProblem stacked_epigraph_lp(const std::vector<PolyhedralFn>& fs, std::size_t d,
                              std::size_t extra) {
  const std::size_t n = fs.size() * (d + 1) + extra;
  LpProblem lp{RVector(n)};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::size_t off = i * (d + 1);
    lp.objective[off + d] = 1;
    const HRep& h = fs[i].epigraph().hrep();
    auto place = [&](const RVector& a) {
      RVector row(n);
      for (std::size_t k = 0; k <= d; ++k) row[off + k] = a[k];
      return row;
    };
    for (const auto& s : h.ineqs) lp.add_le(place(s.a), s.b);
    for (const auto& e : h.eqs) lp.add_eq(place(e.a), e.b);
  }
  return lp;
}

RVector block_point(const RVector& sol, std::size_t i, std::size_t d) {
  return sol.slice(i * (d + 1), d);
}

void require_same_dims(const std::vector<ConvexFn>& fs) {
  require(!fs.empty(), ErrorCode::kMalformedInput, "empty function list");
  for (const auto& f : fs) {
    require(f.dim() == fs.front().dim(), ErrorCode::kMalformedInput,
            "function list mixes dimensions");
  }
}

std::optional<std::size_t> single_tag_index(const std::vector<ConvexFn>& fs,
                                            std::string_view tag) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_polyhedral()) continue;
    if (!fs[i].has_tag(tag) || found) return std::nullopt;
    found = i;
  }
  return found;
}

std::vector<PolyhedralFn> polyhedral_rest(const std::vector<ConvexFn>& fs, std::size_t skip) {
  std::vector<PolyhedralFn> rest;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i != skip) rest.push_back(fs[i].polyhedral());
  }
  return rest;
}

bool all_polyhedral(const std::vector<ConvexFn>& fs) {
  for (const auto& f : fs) {
    if (!f.is_polyhedral()) return false;
  }
  return true;
}

std::string unsupported_list(const std::vector<ConvexFn>& fs) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out += (i ? ", " : "") + (fs[i].is_polyhedral() ? std::string("polyhedral") : fs[i].analytic().tag());
  }
  return out + "]";
}

// Parabola conjugate plus a polyhedral rest G_1..G_r on R^2.
struct ParabolaInfConv {
  bool unbounded = false;
  Rational mu;
  std::vector<RVector> base;        // argmin split of the rest
  std::vector<RVector> directions;  // sum to -e_1, heights sum to 0
  std::optional<std::vector<RVector>> exact;  // rest parts then (u, 0)
  std::string exact_note;
};

ParabolaInfConv analyze_parabola_inf_conv(const std::vector<PolyhedralFn>& rest, const RVector& y) {
  const std::size_t d = 2;
  const std::size_t r = rest.size();
  ParabolaInfConv out;

  // Recession split of (-e_1, 0).
  {
    const std::size_t n = r * (d + 1);
    LpProblem lp{RVector(n)};
    for (std::size_t j = 0; j < r; ++j) {
      const HRep& h = rest[j].epigraph().hrep();
      auto place = [&](const RVector& a) {
        RVector row(n);
        for (std::size_t k = 0; k <= d; ++k) row[j * (d + 1) + k] = a[k];
        return row;
      };
      for (const auto& s : h.ineqs) lp.add_le(place(s.a), 0);
      for (const auto& e : h.eqs) lp.add_eq(place(e.a), 0);
    }
    for (std::size_t k = 0; k <= d; ++k) {
      RVector row(n);
      for (std::size_t j = 0; j < r; ++j) row[j * (d + 1) + k] = 1;
      lp.add_eq(row, k == 0 ? Rational(-1) : Rational(0));
    }
    const LpOutcome o = lp_solve(lp);
    if (!o.optimal()) {
      fail(ErrorCode::kUnsupportedCombination,
           "parabola conjugate with a polyhedral part whose epigraph does not recede along "
           "(-1,0,0)");
    }
    for (std::size_t j = 0; j < r; ++j) out.directions.push_back(block_point(o.point, j, d));
  }

  // mu = min of the polyhedral part.
  {
    const LpOutcome o = lp_solve(stacked_epigraph_lp(rest, d, 0));
    require(o.status != LpStatus::kInfeasible, ErrorCode::kInvariantViolation,
            "proper polyhedral function with empty epigraph");
    if (o.status == LpStatus::kUnbounded) {
      out.unbounded = true;
      return out;
    }
    out.mu = o.value;
    for (std::size_t j = 0; j < r; ++j) out.base.push_back(block_point(o.point, j, d));
  }

  // Exact splits: rest parts z_j and (u, 0) with u >= 0.
  {
    const std::size_t n = r * (d + 1) + 1;
    LpProblem lp = stacked_epigraph_lp(rest, d, 1);
    RVector nonneg(n);
    nonneg[n - 1] = -1;
    lp.add_le(nonneg, 0);
    for (std::size_t k = 0; k < d; ++k) {
      RVector row(n);
      for (std::size_t j = 0; j < r; ++j) row[j * (d + 1) + k] = 1;
      if (k == 0) row[n - 1] = 1;
      lp.add_eq(row, y[k]);
    }
    const LpOutcome o = lp_solve(lp);
    if (o.optimal() && o.value == out.mu) {
      std::vector<RVector> parts;
      for (std::size_t j = 0; j < r; ++j) parts.push_back(block_point(o.point, j, d));
      parts.push_back(RVector{o.point[n - 1], Rational(0)});
      out.exact = std::move(parts);
    } else if (o.optimal()) {
      out.exact_note = "best exact split costs " + o.value.str();
    } else {
      out.exact_note = "no exact split reaches the zero set of the parabola conjugate";
    }
  }
  return out;
}

// Places the parabola part at index k among the rest parts.
std::vector<RVector> reorder(std::vector<RVector> rest_parts, const RVector& parabola_part,
                             std::size_t k) {
  rest_parts.insert(rest_parts.begin() + static_cast<std::ptrdiff_t>(k), parabola_part);
  return rest_parts;
}

PolyhedralFn sum_two(const PolyhedralFn& f, const PolyhedralFn& g) {
  const std::size_t n = f.dim();
  HRep h;
  h.dim = n + 1;
  for (const PolyhedralFn* p : {&f, &g}) {
    const HRep& e = p->epigraph().hrep();
    for (const auto& s : e.ineqs) {
      if (s.a[n].is_zero()) h.ineqs.push_back(s);
    }
    for (const auto& q : e.eqs) h.eqs.push_back(q);
  }
  for (const auto& a : f.pieces()) {
    for (const auto& b : g.pieces()) {
      h.ineqs.push_back({with_height(a.slope + b.slope, -1), -(a.offset + b.offset)});
    }
  }
  try {
    return PolyhedralFn::from_epigraph(Polyhedron::from_hrep(std::move(h)));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kImproperFunction) {
      fail(ErrorCode::kImproperFunction, "sum has empty domain: the domains do not intersect");
    }
    throw;
  }
}

}  // namespace

// ---------------------------------------------------------------- PolyhedralFn

PolyhedralFn PolyhedralFn::from_epigraph(const Polyhedron& epi) {
  require(epi.dim() >= 2, ErrorCode::kMalformedInput, "epigraph needs dimension >= 2");
  const Polyhedron c = epi.canonical();
  require(!c.is_empty(), ErrorCode::kImproperFunction, "empty epigraph: function is +inf");
  const std::size_t n = epi.dim() - 1;
  auto d = std::make_shared<Data>();
  d->dim = n;
  d->epi = c;
  const HRep& h = c.hrep();
  for (const auto& e : h.eqs) {
    require(e.a[n].is_zero(), ErrorCode::kInvariantViolation,
            "not an epigraph: an equality constrains the height");
    d->dom_eqs.push_back({e.a.slice(0, n), e.b});
  }
  for (const auto& s : h.ineqs) {
    const Rational& at = s.a[n];
    require(at.sign() <= 0, ErrorCode::kInvariantViolation,
            "not an epigraph: the height is bounded above");
    if (at.is_zero()) {
      d->dom_ineqs.push_back({s.a.slice(0, n), s.b});
    } else {
      const Rational inv = Rational(1) / at;
      d->pieces.push_back({s.a.slice(0, n) * (-inv), s.b * inv});
    }
  }
  require(!d->pieces.empty(), ErrorCode::kImproperFunction,
          "epigraph contains a downward line: function takes the value -inf");
  d->domain = Polyhedron::from_hrep(HRep{n, d->dom_ineqs, d->dom_eqs});
  return PolyhedralFn(std::move(d));
}

PolyhedralFn PolyhedralFn::max_affine(const std::vector<RVector>& slopes,
                                      const std::vector<Rational>& offsets,
                                      const std::optional<Polyhedron>& domain) {
  require(!slopes.empty() && slopes.size() == offsets.size(), ErrorCode::kMalformedInput,
          "max_affine needs matching nonempty slopes and offsets");
  const std::size_t n = slopes.front().dim();
  HRep h;
  h.dim = n + 1;
  for (std::size_t k = 0; k < slopes.size(); ++k) {
    require(slopes[k].dim() == n, ErrorCode::kMalformedInput, "slope dimension mismatch");
    h.ineqs.push_back({with_height(slopes[k], -1), -offsets[k]});
  }
  if (domain) {
    require(domain->dim() == n, ErrorCode::kMalformedInput, "domain dimension mismatch");
    const HRep& dh = domain->hrep();
    for (const auto& s : dh.ineqs) h.ineqs.push_back({with_height(s.a, 0), s.b});
    for (const auto& e : dh.eqs) h.eqs.push_back({with_height(e.a, 0), e.b});
  }
  return from_epigraph(Polyhedron::from_hrep(std::move(h)));
}

PolyhedralFn PolyhedralFn::indicator(const Polyhedron& set) {
  return max_affine({RVector(set.dim())}, {Rational(0)}, set);
}

PolyhedralFn PolyhedralFn::support(const Polyhedron& set) { return indicator(set).conjugate(); }

PolyhedralFn PolyhedralFn::constant(std::size_t dim, const Rational& c) {
  return max_affine({RVector(dim)}, {c});
}

std::size_t PolyhedralFn::dim() const { return d_->dim; }
const Polyhedron& PolyhedralFn::epigraph() const { return d_->epi; }
const Polyhedron& PolyhedralFn::domain() const { return d_->domain; }
const std::vector<AffinePiece>& PolyhedralFn::pieces() const { return d_->pieces; }

bool PolyhedralFn::in_domain(const RVector& x) const {
  require(x.dim() == d_->dim, ErrorCode::kMalformedInput, "evaluation point dimension mismatch");
  for (const auto& s : d_->dom_ineqs) {
    if (dot(s.a, x) > s.b) return false;
  }
  for (const auto& e : d_->dom_eqs) {
    if (dot(e.a, x) != e.b) return false;
  }
  return true;
}

ExtReal PolyhedralFn::evaluate(const RVector& x) const {
  if (!in_domain(x)) return ExtReal::plus_infinity();
  Rational best = d_->pieces.front().at(x);
  for (std::size_t k = 1; k < d_->pieces.size(); ++k) best = max(best, d_->pieces[k].at(x));
  return best;
}

PolyhedralFn PolyhedralFn::conjugate() const {
  {
    std::lock_guard lock(d_->mu);
    if (d_->conj) return PolyhedralFn(d_->conj);
  }
  const std::size_t n = d_->dim;
  const VRep& v = d_->epi.vrep();
  HRep h;
  h.dim = n + 1;
  for (const auto& p : v.vertices) h.ineqs.push_back({with_height(p.slice(0, n), -1), p[n]});
  for (const auto& r : v.rays) h.ineqs.push_back({with_height(r.slice(0, n), 0), r[n]});
  for (const auto& l : v.lines) h.eqs.push_back({with_height(l.slice(0, n), 0), l[n]});
  PolyhedralFn c = from_epigraph(Polyhedron::from_hrep(std::move(h)));
  std::lock_guard lock(d_->mu);
  if (!d_->conj) d_->conj = c.d_;
  return PolyhedralFn(d_->conj);
}

PolyhedralFn PolyhedralFn::lift(std::size_t offset, std::size_t total) const {
  const std::size_t n = d_->dim;
  require(offset + n <= total, ErrorCode::kMalformedInput, "lift outside the product space");
  auto place = [&](const RVector& a) {
    RVector row(total + 1);
    for (std::size_t k = 0; k < n; ++k) row[offset + k] = a[k];
    row[total] = a[n];
    return row;
  };
  const HRep& e = d_->epi.hrep();
  HRep h;
  h.dim = total + 1;
  for (const auto& s : e.ineqs) h.ineqs.push_back({place(s.a), s.b});
  for (const auto& q : e.eqs) h.eqs.push_back({place(q.a), q.b});
  return from_epigraph(Polyhedron::from_hrep(std::move(h)));
}

std::pair<ExtReal, std::optional<RVector>> PolyhedralFn::minimum() const {
  const LpOutcome o = lp_solve(stacked_epigraph_lp({*this}, d_->dim, 0));
  if (o.status == LpStatus::kUnbounded) return {ExtReal::minus_infinity(), std::nullopt};
  require(o.optimal(), ErrorCode::kInvariantViolation, "proper function with empty epigraph");
  return {ExtReal(o.value), o.point.slice(0, d_->dim)};
}

// ---------------------------------------------------------------- ConvexFn

AnalyticFn::AnalyticFn(std::shared_ptr<const CatalogEntry> entry) : entry_(std::move(entry)) {
  require(entry_ != nullptr, ErrorCode::kMalformedInput, "null catalog entry");
}

std::size_t ConvexFn::dim() const {
  return std::visit([](const auto& f) { return f.dim(); }, kind_);
}

const PolyhedralFn& ConvexFn::polyhedral() const {
  require(is_polyhedral(), ErrorCode::kInvariantViolation, "function is not polyhedral");
  return std::get<PolyhedralFn>(kind_);
}

const AnalyticFn& ConvexFn::analytic() const {
  require(!is_polyhedral(), ErrorCode::kInvariantViolation, "function is not a catalog entry");
  return std::get<AnalyticFn>(kind_);
}

bool ConvexFn::has_tag(std::string_view tag) const {
  return !is_polyhedral() && analytic().tag() == tag;
}

ExtReal ConvexFn::evaluate(const RVector& x) const {
  require(x.dim() == dim(), ErrorCode::kMalformedInput, "evaluation point dimension mismatch");
  return std::visit(Overloaded{
                        [&](const PolyhedralFn& f) { return f.evaluate(x); },
                        [&](const AnalyticFn& f) { return f.entry().evaluate(x); },
                    },
                    kind_);
}

std::string ConvexFn::describe() const {
  if (!is_polyhedral()) return "catalog:" + analytic().tag();
  const PolyhedralFn& f = polyhedral();
  std::ostringstream os;
  os << "max{";
  for (std::size_t k = 0; k < f.pieces().size(); ++k) {
    const AffinePiece& p = f.pieces()[k];
    os << (k ? ", " : "") << "<" << p.slope << ",x>+" << p.offset;
  }
  os << "} on " << f.domain().describe();
  return os.str();
}

ConvexFn conjugate(const ConvexFn& f) {
  if (f.is_polyhedral()) return f.polyhedral().conjugate();
  return ConvexFn::catalog(f.analytic().entry().conjugate_tag());
}

bool biconjugate_check(const ConvexFn& f) {
  const ConvexFn fc = conjugate(f);
  const ConvexFn fcc = conjugate(fc);
  if (f.is_polyhedral()) return fcc.polyhedral().epigraph().equals(f.polyhedral().epigraph());
  const auto grid = f.analytic().entry().sample_grid();
  for (const auto& x : grid) {
    const ExtReal fx = f.evaluate(x);
    if (fcc.evaluate(x) != fx) return false;
    for (const auto& y : grid) {
      const ExtReal fy = fc.evaluate(y);
      if (fx.is_finite() && fy.is_finite() && fx.value() + fy.value() < dot(x, y)) return false;
    }
  }
  return true;
}

ConvexFn fn_sum(const std::vector<ConvexFn>& fs) {
  require_same_dims(fs);
  if (fs.size() == 1) return fs.front();
  if (all_polyhedral(fs)) {
    PolyhedralFn acc = fs.front().polyhedral();
    for (std::size_t i = 1; i < fs.size(); ++i) acc = sum_two(acc, fs[i].polyhedral());
    return acc;
  }
  const auto k = single_tag_index(fs, kParabolaIndicator);
  if (!k) {
    fail(ErrorCode::kUnsupportedCombination,
         "sum of " + unsupported_list(fs) + " is outside the catalog's reducible patterns");
  }
  std::vector<ConvexFn> rest;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i != *k) rest.push_back(fs[i]);
  }
  const PolyhedralFn h = fn_sum(rest).polyhedral();
  if (h.epigraph().equals(PolyhedralFn::constant(2, 0).epigraph())) return fs[*k];
  HRep half{2, {{RVector{Rational(-1), Rational(0)}, Rational(0)}}, {}};
  if (!Polyhedron::from_hrep(half).includes(h.domain())) {
    fail(ErrorCode::kUnsupportedCombination,
         "parabola indicator plus a polyhedral part whose domain leaves {x1 >= 0}");
  }
  const RVector origin = RVector::zero(2);
  const ExtReal at_origin = h.evaluate(origin);
  require(at_origin.is_finite(), ErrorCode::kImproperFunction,
          "sum has empty domain: the parabola meets {x1 >= 0} only at the origin");
  return PolyhedralFn::max_affine({origin}, {at_origin.value()}, Polyhedron::point(origin));
}

InfConvResult inf_conv_value(const std::vector<ConvexFn>& gs, const RVector& y) {
  require_same_dims(gs);
  require(y.dim() == gs.front().dim(), ErrorCode::kMalformedInput, "inf-conv point dimension mismatch");
  const std::size_t d = y.dim();
  InfConvResult res;
  if (all_polyhedral(gs)) {
    std::vector<PolyhedralFn> ps;
    for (const auto& g : gs) ps.push_back(g.polyhedral());
    LpProblem lp = stacked_epigraph_lp(ps, d, 0);
    for (std::size_t k = 0; k < d; ++k) {
      RVector row(lp.dim());
      for (std::size_t i = 0; i < ps.size(); ++i) row[i * (d + 1) + k] = 1;
      lp.add_eq(row, y[k]);
    }
    const LpOutcome o = lp_solve(lp);
    switch (o.status) {
      case LpStatus::kOptimal: {
        res.value = o.value;
        res.attained = true;
        std::vector<RVector> parts;
        for (std::size_t i = 0; i < ps.size(); ++i) parts.push_back(block_point(o.point, i, d));
        res.witness = std::move(parts);
        res.certificate = "lp-optimal-split";
        break;
      }
      case LpStatus::kInfeasible:
        res.value = ExtReal::plus_infinity();
        res.certificate = "lp-infeasible: point outside the sum of domains";
        break;
      case LpStatus::kUnbounded:
        res.value = ExtReal::minus_infinity();
        res.certificate = "lp-unbounded";
        break;
    }
    return res;
  }
  if (gs.size() == 1) {
    res.value = gs.front().evaluate(y);
    res.attained = res.value.is_finite();
    if (res.attained) res.witness = std::vector<RVector>{y};
    res.certificate = "single-function";
    return res;
  }
  const auto k = single_tag_index(gs, kParabolaConjugate);
  if (!k) {
    fail(ErrorCode::kUnsupportedCombination,
         "infimal convolution of " + unsupported_list(gs) + " is outside the catalog");
  }
  const ParabolaInfConv a = analyze_parabola_inf_conv(polyhedral_rest(gs, *k), y);
  if (a.unbounded) {
    res.value = ExtReal::minus_infinity();
    res.certificate = "polyhedral part unbounded below";
    return res;
  }
  res.value = a.mu;
  if (a.exact) {
    res.attained = true;
    std::vector<RVector> rest(a.exact->begin(), a.exact->end() - 1);
    res.witness = reorder(std::move(rest), a.exact->back(), *k);
    res.certificate = "exact split into argmin + [0,inf)x{0}";
  } else {
    res.certificate = "not attained: inf " + a.mu.str() + " approached along -e1 (" + a.exact_note + ")";
  }
  return res;
}

std::vector<RVector> inf_conv_near_split(const std::vector<ConvexFn>& gs, const RVector& y,
                                         const Rational& eta) {
  require(eta.sign() > 0, ErrorCode::kMalformedInput, "near split needs eta > 0");
  if (all_polyhedral(gs) || gs.size() == 1) {
    InfConvResult r = inf_conv_value(gs, y);
    require(r.value.is_finite() && r.witness.has_value(), ErrorCode::kDecompositionFailed,
            "infimal convolution is not finite at " + y.str());
    return *r.witness;
  }
  require_same_dims(gs);
  const auto k = single_tag_index(gs, kParabolaConjugate);
  if (!k) {
    fail(ErrorCode::kUnsupportedCombination,
         "infimal convolution of " + unsupported_list(gs) + " is outside the catalog");
  }
  const ParabolaInfConv a = analyze_parabola_inf_conv(polyhedral_rest(gs, *k), y);
  require(!a.unbounded, ErrorCode::kDecompositionFailed, "infimal convolution is -inf");
  if (a.exact) {
    std::vector<RVector> rest(a.exact->begin(), a.exact->end() - 1);
    return reorder(std::move(rest), a.exact->back(), *k);
  }
  RVector w = y;
  for (const auto& z : a.base) w -= z;
  const Rational shift = max(w[0], w[1] * w[1] / (Rational(2) * eta)) - w[0];
  std::vector<RVector> rest;
  for (std::size_t j = 0; j < a.base.size(); ++j) {
    rest.push_back(a.base[j] + a.directions[j].slice(0, 2) * shift);
  }
  return reorder(std::move(rest), RVector{w[0] + shift, w[1]}, *k);
}

EpiConjSum epi_conj_sum(const std::vector<ConvexFn>& fs) {
  require_same_dims(fs);
  const std::size_t d = fs.front().dim();
  EpiConjSum out;
  if (all_polyhedral(fs)) {
    std::vector<Polyhedron> epis;
    for (const auto& f : fs) epis.push_back(f.polyhedral().conjugate().epigraph());
    out.set = Region(minkowski_sum(epis, d + 1));
    out.certificate = "polyhedral-minkowski-sum";
    return out;
  }
  if (fs.size() == 1) {
    out.certificate = "single conjugate epigraph";
    return out;
  }
  const auto k = single_tag_index(fs, kParabolaIndicator);
  if (!k) {
    fail(ErrorCode::kUnsupportedCombination,
         "conjugate epigraph sum of " + unsupported_list(fs) + " is outside the catalog");
  }
  std::vector<PolyhedralFn> rest;
  for (const auto& f : polyhedral_rest(fs, *k)) rest.push_back(f.conjugate());
  const ParabolaInfConv a = analyze_parabola_inf_conv(rest, RVector::zero(2));
  if (a.unbounded) {
    out.set = Region(Polyhedron::whole_space(3));
    out.certificate = "polyhedral part unbounded below";
    return out;
  }
  std::vector<Polyhedron> epis;
  for (const auto& g : rest) epis.push_back(g.epigraph());
  const Polyhedron total = minkowski_sum(epis, 3);
  const Polyhedron level =
      total.intersect(Polyhedron::from_hrep(HRep{3, {}, {{RVector{0, 0, 1}, a.mu}}}));
  const Polyhedron argmin = level.linear_image({RVector{1, 0, 0}, RVector{0, 1, 0}});
  const Polyhedron exact = minkowski_sum(argmin, Polyhedron::cone(2, {RVector{1, 0}}));
  out.set = Region(LevelSetWithExactCore{a.mu, exact});
  out.closed = out.set->is_closed();
  if (out.closed) {
    out.certificate = "every level point attained";
    return out;
  }
  RVector p{1, 1};
  if (exact.contains(p)) p = *Polyhedron::whole_space(2).point_outside(exact);
  out.witness = p.concat(RVector{a.mu});
  out.certificate = "closure point " + out.witness->str() + " needs an exact split at " + p.str() +
                    ", which does not exist";
  return out;
}

}  // namespace convexlab
