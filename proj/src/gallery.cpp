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

#include "convexlab/gallery.hpp"

#include <functional>
#include <set>

#include "convexlab/error.hpp"
#include "convexlab/generators.hpp"
#include "convexlab/subdiff.hpp"

namespace convexlab {

namespace {

std::string flag(bool b) { return b ? "T" : "F"; }

ReportRow claim(const std::string& name, bool ok, const std::string& value, const std::string& witness,
                const std::string& cert) {
  return {name, ok ? "pass" : "fail", value, witness, cert};
}

std::vector<RVector> grid2(long lo, long hi) {
  std::vector<RVector> out;
  for (long a = lo; a <= hi; ++a) {
    for (long b = lo; b <= hi; ++b) out.push_back(RVector{a, b});
  }
  return out;
}

std::vector<RVector> unit_duals(std::size_t n) {
  std::vector<RVector> out{RVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(RVector::unit(n, k));
    out.push_back(-RVector::unit(n, k));
  }
  return out;
}

// ------------------------------------------------------------- example33

Report example33() {
  const InstanceFile file = parse_instance(data_dir() / "example33.json");
  const MonotropicInstance inst = file.instance();
  const ConvexFn& f = inst.blocks()[0].fn;
  const ConvexFn& g = inst.blocks()[1].fn;
  const std::vector<ConvexFn> fg{f, g};
  const RVector origin{0, 0};
  Report rep;
  rep.title = "example33";

  {  // (a) (1, s) in d_eps f(0) iff s^2 <= 2 eps.
    std::size_t tested = 0;
    std::string bad;
    for (const Rational& eps : {Rational(1, 2), Rational(2), Rational(9, 2), Rational(1, 8)}) {
      const Region r = eps_subdiff(f, origin, eps);
      for (long i = -16; i <= 16; ++i) {
        const Rational s(i, 4);
        ++tested;
        if (r.contains(RVector{1, s}) != (s * s <= Rational(2) * eps)) bad = "(1," + s.str() + ") eps=" + eps.str();
      }
      const Rational root = *exact_sqrt(Rational(2) * eps);
      tested += 2;
      if (!r.contains(RVector{1, root})) bad = "boundary eps=" + eps.str();
      if (r.contains(RVector{1, root + Rational(1, 64)})) bad = "beyond boundary eps=" + eps.str();
    }
    rep.rows.push_back(claim("claim-a", bad.empty(), std::to_string(tested) + " memberships",
                             bad.empty() ? "(1,1) at eps=1/2" : bad, "parabola eps-region"));
  }
  {  // (b) d_eps g(0) = (-inf, 0] x {0}.
    const Polyhedron expect = Polyhedron::cone(2, {RVector{-1, 0}});
    bool ok = true;
    std::string seen;
    for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(1)}) {
      const Region r = eps_subdiff(g, origin, eps);
      ok = ok && r.is_polyhedral() && r.polyhedron().equals(expect);
      seen = r.describe();
    }
    rep.rows.push_back(claim("claim-b", ok, seen, "eps in {0,1/2,1}", "polyhedron equality"));
  }
  {  // (c) d_eps f(0) + d_eps g(0) = R^2.
    bool ok = true;
    std::string seen;
    for (const Rational& eps : {Rational(1, 2), Rational(1), Rational(1, 100)}) {
      const Region r = sum_eps_subdiffs(fg, origin, eps);
      ok = ok && r.is_polyhedral() && r.polyhedron().equals(Polyhedron::whole_space(2));
      seen = r.describe();
    }
    rep.rows.push_back(claim("claim-c", ok, seen, "eps in {1/100,1/2,1}", "recession (-1,0) absorbs the parabola"));
  }
  {  // (d) (f+g)* = 0 = f* [] g*, not exact at (1, 1).
    const ConvexFn sum_conj = conjugate(fn_sum(fg));
    const std::vector<ConvexFn> conj{conjugate(f), conjugate(g)};
    bool ok = true;
    std::string bad = "-";
    for (const auto& y : grid2(-3, 3)) {
      const ExtReal a = sum_conj.evaluate(y);
      const ExtReal b = inf_conv_value(conj, y).value;
      if (a != ExtReal(0) || b != ExtReal(0)) {
        ok = false;
        bad = y.str();
      }
    }
    const InfConvResult at = inf_conv_value(conj, RVector{1, 1});
    ok = ok && !at.attained && at.value == ExtReal(0);
    rep.rows.push_back(claim("claim-d", ok, "49 duals equal 0; attained at (1,1): " + std::string(at.attained ? "true" : "false"),
                             ok ? "(1,1)" : bad, at.certificate));
  }
  {  // (e) d(f+g)(0) = R^2 but df(0) + dg(0) = R x {0}.
    const SumRuleResult r = sum_rule_check(fg, origin);
    const Polyhedron axis = Polyhedron::from_hrep(HRep{2, {}, {{RVector{0, 1}, 0}}});
    const bool ok = !r.holds && r.lhs.is_polyhedral() && r.lhs.polyhedron().equals(Polyhedron::whole_space(2)) &&
                    r.rhs.is_polyhedral() && r.rhs.polyhedron().equals(axis);
    rep.rows.push_back(claim("claim-e", ok, r.lhs.describe() + " vs " + r.rhs.describe(),
                             r.witness ? r.witness->str() : "-", "sum rule fails at the origin"));
  }
  {  // (f) epi f* + epi g* is not closed; ((1,1),0) lies in the closure only.
    const EpiConjSum s = epi_conj_sum(fg);
    const bool ok = !s.closed && s.witness && *s.witness == RVector({1, 1, 0});
    rep.rows.push_back(claim("claim-f", ok, s.closed ? "closed" : "not closed", s.witness ? s.witness->str() : "-",
                             s.certificate));
  }
  rep.append(run_queries(file));
  return rep;
}

// ------------------------------------------------------------- polyhedral-demo

void theorem_rows(Report& rep, const CorpusInstance& c) {
  const std::size_t n = c.fns.front().dim();
  auto row = [&](const std::string& what, bool ok, const std::string& witness, const std::string& cert) {
    rep.rows.push_back({c.name + "." + what, ok ? "pass" : "fail", ok ? "true" : "false", witness, cert});
  };
  for (const auto& x : c.points) {
    const std::string at = x.str();
    const CheckResult ci = condition_i_check(c.fns, x, Rational(1), Rational(1));
    row("condition-i@" + at, ci.holds, ci.witness ? ci.witness->str() : at, "K=1 eps=1");
    for (const Rational& eta : {Rational(1), Rational(1, 4)}) {
      const ConditionIvResult civ = condition_iv_check(c.fns, x, Rational(1), eta);
      row("condition-iv@" + at + ",eta=" + eta.str(), civ.holds, civ.witness ? civ.witness->str() : at,
          std::to_string(civ.splits.size()) + " splits");
      const CheckResult s = hup_sandwich_check(c.fns, x, eta);
      row("sandwich@" + at + ",eta=" + eta.str(), s.holds, s.witness ? s.witness->str() : at, s.detail);
    }
    const SumRuleResult sr = sum_rule_check(c.fns, x);
    row("sumrule@" + at, sr.holds, sr.witness ? sr.witness->str() : at, sr.lhs.describe());
  }
  const CheckResult cii = condition_ii_check(c.fns, unit_duals(n));
  row("condition-ii", cii.holds, cii.witness ? cii.witness->str() : "-", "epigraph equality");
  std::vector<ConvexFn> conj;
  for (const auto& f : c.fns) conj.push_back(conjugate(f));
  for (const auto& y : unit_duals(n)) {
    const InfConvResult r = inf_conv_value(conj, y);
    row("exact@" + y.str(), r.value.is_plus_infinity() || r.attained, y.str(), r.value.str());
  }
  const GapReport g = gap_report(diagonal_instance(c.fns));
  const bool bounded = g.primal_value.is_finite();
  row("gap", g.gap == ExtReal(0), "p=" + g.primal_value.str() + " d=" + g.dual_value.str(),
      bounded ? "lp strong duality" : "infinite optimum");
}

Report polyhedral_demo(std::uint64_t seed) {
  Report rep;
  rep.title = "polyhedral-demo (seed " + std::to_string(seed) + ")";
  rep.append(run_queries(parse_instance(data_dir() / "poly_demo.json")));
  for (const auto& c : polyhedral_corpus(seed, 8, 1)) theorem_rows(rep, c);
  return rep;
}

// ------------------------------------------------------------- sublinear-demo

Report sublinear_demo(std::uint64_t seed) {
  Report rep;
  rep.title = "sublinear-demo (seed " + std::to_string(seed) + ")";
  InstanceGenerator gen(seed);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = static_cast<std::size_t>(gen.uniform(2, 3));
    const Polyhedron p = gen.polytope(d, static_cast<std::size_t>(gen.uniform(1, 5)));
    const Polyhedron q = gen.polytope(d, static_cast<std::size_t>(gen.uniform(1, 4)));
    const std::vector<ConvexFn> fs{PolyhedralFn::support(p), PolyhedralFn::support(q)};
    const RVector origin(d);
    const std::string name = "polytope-" + std::to_string(i);

    bool pin = true;
    for (const Rational& eps : {Rational(0), Rational(1, 2), Rational(1)}) {
      const Region r = eps_subdiff(fs[0], origin, eps);
      pin = pin && r.is_polyhedral() && r.polyhedron().equals(p);
    }
    rep.rows.push_back({name + ".pin", pin ? "pass" : "fail", pin ? "true" : "false", p.describe(),
                        "d_eps sigma_P(0) = P for eps in {0,1/2,1}"});

    std::vector<ConvexFn> conj{conjugate(fs[0]), conjugate(fs[1])};
    const std::vector<RVector> duals = unit_duals(d);
    bool exact = true;
    for (const auto& y : duals) {
      const InfConvResult r = inf_conv_value(conj, y);
      exact = exact && (r.value.is_plus_infinity() || r.attained);
    }
    const bool c1 = condition_i_check(fs, origin, Rational(1), Rational(1)).holds;
    const bool c2 = sum_eps_subdiffs(fs, origin, Rational(0)).is_closed();
    const bool c3 = condition_ii_check(fs, duals).holds;
    const bool c4 = c3;
    const bool c5 = condition_iv_check(fs, origin, Rational(0), Rational(1)).holds;
    const bool c6 = epi_conj_sum(fs).closed;
    const bool c7 = c3 && exact;
    const SumRuleResult sr = sum_rule_check(fs, origin);
    const bool c8 = sr.holds && sr.lhs.is_polyhedral() && sr.lhs.polyhedron().equals(minkowski_sum(p, q));
    const std::string flags = flag(c1) + flag(c2) + flag(c3) + flag(c4) + flag(c5) + flag(c6) + flag(c7) + flag(c8);
    const bool ok = flags == "TTTTTTTT";
    rep.rows.push_back({name + ".eight", ok ? "pass" : "fail", flags, sr.lhs.describe(),
                        "i,closed-sum,ii,lsc,iv,closed-epi,exact,sum-rule"});
  }
  return rep;
}

// ------------------------------------------------------------- cq-matrix

std::string tri(const std::optional<bool>& b) { return b ? flag(*b) : "-"; }

Report cq_matrix(std::uint64_t seed) {
  Report rep;
  rep.title = "cq-matrix (seed " + std::to_string(seed) + ")";
  std::vector<std::pair<std::string, MonotropicInstance>> corpus;
  for (const char* file : {"example33.json", "poly_demo.json", "cone_demo.json", "abs_interval.json"}) {
    corpus.emplace_back(file, parse_instance(data_dir() / file).instance());
  }
  for (const auto& c : polyhedral_corpus(seed, 10, 0)) corpus.emplace_back(c.name, diagonal_instance(c.fns));
  for (const auto& [name, inst] : corpus) {
    const GapReport g = gap_report(inst);
    const auto& cq = g.cq;
    const auto interior = cq.at("interiority").holds;
    const auto bert = cq.at("bertsekas").holds;
    const auto epi = cq.at("closed-epigraph").holds;
    const auto ii = cq.at("condition-ii").holds;
    const bool gap0 = g.gap == ExtReal(0);
    // interiority => Bertsekas, closed epigraphs => (ii).
    const bool ok = !(interior.value_or(false) && !bert.value_or(false)) && !(epi.value_or(false) && !ii.value_or(false));
    const std::string value = "interior=" + tri(interior) + " bertsekas=" + tri(bert) + " closed-epi=" + tri(epi) +
                              " ii=" + tri(ii) + " transversal=" + tri(cq.at("transversality").holds) +
                              " gap=" + g.gap.str();
    rep.rows.push_back({name, ok ? "pass" : "fail", value, "p=" + g.primal_value.str() + " d=" + g.dual_value.str(),
                        gap0 ? "zero gap" : "positive gap"});
  }
  return rep;
}

}  // namespace

std::vector<CorpusInstance> polyhedral_corpus(std::uint64_t seed, std::size_t count, std::size_t extra) {
  InstanceGenerator gen(seed);
  std::vector<CorpusInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    CorpusInstance c;
    c.name = "seed" + std::to_string(seed) + "-" + std::to_string(i);
    const auto d = static_cast<std::size_t>(gen.uniform(1, 3));
    const auto m = static_cast<std::size_t>(gen.uniform(1, 3));
    Polyhedron common = Polyhedron::whole_space(d);
    for (std::size_t k = 0; k < m; ++k) {
      PolyhedralFn f = gen.polyhedral_fn(d, 6);
      common = common.intersect(f.domain());
      c.fns.push_back(std::move(f));
    }
    c.points.push_back(RVector(d));
    const Polyhedron dom = common.canonical();
    std::set<RVector> seen{RVector(d)};
    for (std::size_t k = 0; k < extra; ++k) {
      RVector x = gen.point_in(dom);
      if (seen.insert(x).second) c.points.push_back(std::move(x));
    }
    out.push_back(std::move(c));
  }
  return out;
}

MonotropicInstance diagonal_instance(const std::vector<ConvexFn>& fns) {
  const std::size_t d = fns.front().dim();
  const std::size_t m = fns.size();
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < m; ++i) blocks.push_back({"f" + std::to_string(i + 1), fns[i]});
  SubspaceConstraint s;
  for (std::size_t k = 0; k < d; ++k) {
    RVector v(d * m);
    for (std::size_t i = 0; i < m; ++i) v[i * d + k] = 1;
    s.basis.push_back(std::move(v));
  }
  return MonotropicInstance(std::move(blocks), std::move(s));
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names{"example33", "polyhedral-demo", "sublinear-demo", "cq-matrix"};
  return names;
}

Report run_gallery(std::string_view name, std::uint64_t seed) {
  if (name == "example33") return example33();
  if (name == "polyhedral-demo") return polyhedral_demo(seed);
  if (name == "sublinear-demo") return sublinear_demo(seed);
  if (name == "cq-matrix") return cq_matrix(seed);
  fail(ErrorCode::kMalformedInput, "unknown gallery \"" + std::string(name) + "\"");
}

}  // namespace convexlab
