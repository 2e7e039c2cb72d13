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

// Acceptance suite: one PASS/FAIL line per criterion, details indented below.

#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

#include "convexlab/error.hpp"
#include "convexlab/gallery.hpp"
#include "convexlab/generators.hpp"
#include "convexlab/subdiff.hpp"
#include "../oracles.hpp"

namespace {

using namespace convexlab;

constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::size_t kCorpusSize = 50;

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures.size() < 20) failures.push_back(what);
    if (!ok && failures.size() == 20) failures.push_back("...");
  }
  void merge(const Tally& o) {
    checked += o.checked;
    for (const auto& f : o.failures) {
      if (failures.size() < 21) failures.push_back(f);
    }
  }
  bool ok() const { return failures.empty(); }
};

template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F f) {
  std::vector<std::future<T>> futures;
  for (std::size_t i = 0; i < n; ++i) futures.push_back(std::async(std::launch::async, f, i));
  std::vector<T> out;
  for (auto& fut : futures) out.push_back(fut.get());
  return out;
}

Tally guarded(const std::string& label, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, label + ": exception " + e.what());
  }
  return t;
}

std::vector<RVector> unit_duals(std::size_t n) {
  std::vector<RVector> out{RVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(RVector::unit(n, k));
    out.push_back(-RVector::unit(n, k));
  }
  return out;
}

std::vector<ConvexFn> conjugates(const std::vector<ConvexFn>& fs) {
  std::vector<ConvexFn> out;
  for (const auto& f : fs) out.push_back(conjugate(f));
  return out;
}

// Sum of max-affine functions in generated form: all piece sums, all domain rows.
std::optional<oracle::PlainFn> plain_sum(const std::vector<ConvexFn>& fs) {
  oracle::PlainFn s;
  s.dim = fs.front().dim();
  s.slopes = {RVector(s.dim)};
  s.offsets = {Rational(0)};
  for (const auto& f : fs) {
    const PolyhedralFn& p = f.polyhedral();
    std::vector<RVector> slopes;
    std::vector<Rational> offsets;
    for (std::size_t i = 0; i < s.slopes.size(); ++i) {
      for (const auto& piece : p.pieces()) {
        slopes.push_back(s.slopes[i] + piece.slope);
        offsets.push_back(s.offsets[i] + piece.offset);
      }
    }
    s.slopes = std::move(slopes);
    s.offsets = std::move(offsets);
    const HRep& h = p.domain().hrep();
    for (const auto& row : h.ineqs) {
      s.dom_a.push_back(row.a);
      s.dom_b.push_back(row.b);
    }
    for (const auto& e : h.eqs) {
      s.dom_a.push_back(e.a);
      s.dom_b.push_back(e.b);
      s.dom_a.push_back(-e.a);
      s.dom_b.push_back(-e.b);
    }
  }
  // Brute force only where vertex enumeration stays small.
  if (s.dim > 2 || s.slopes.size() + s.dom_a.size() > 24) return std::nullopt;
  return s;
}

ExtReal oracle_conjugate(const oracle::PlainFn& f, const RVector& y) {
  const auto v = oracle::conjugate_value(f, y);
  return v ? ExtReal(*v) : ExtReal::plus_infinity();
}

void line(bool ok, int n, const std::string& title, const Tally& t, const std::string& extra = "") {
  static auto last = std::chrono::steady_clock::now();
  const auto now = std::chrono::steady_clock::now();
  std::cerr << "criterion " << n << ": " << std::chrono::duration<double>(now - last).count() << " s\n";
  last = now;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << t.checked
            << " assertions" << (extra.empty() ? "" : "; " + extra) << ")\n";
  for (const auto& f : t.failures) std::cout << "    " << f << "\n";
}

// ------------------------------------------------------------------ 1

bool criterion1() {
  Tally t = guarded("example33", [](Tally& t) {
    const Report r = run_gallery("example33");
    std::size_t claims = 0;
    for (const auto& row : r.rows) {
      if (row.query.rfind("claim-", 0) == 0) ++claims;
      t.check(row.verdict != "fail", row.query + " = " + row.value);
    }
    t.check(claims == 6, "expected 6 claims, got " + std::to_string(claims));
  });
  line(t.ok(), 1, "example33 gallery reproduction", t, "6 claims plus shipped queries");
  return t.ok();
}

// ------------------------------------------------------------------ 2-4

struct CorpusTallies {
  Tally c2, c3, c4;
  std::size_t oracle_duals = 0;
};

CorpusTallies corpus_instance(const CorpusInstance& c) {
  CorpusTallies out;
  const std::size_t n = c.fns.front().dim();
  const std::size_t m = c.fns.size();
  const std::vector<ConvexFn> conj = conjugates(c.fns);
  out.c2 = guarded(c.name, [&](Tally& t) {
    for (const auto& x : c.points) {
      const std::string at = c.name + " at " + x.str();
      t.check(condition_i_check(c.fns, x, Rational(1), Rational(1)).holds, at + ": condition (i), K=1");
      t.check(condition_i_check(c.fns, x, Rational(1, 2), Rational(1)).holds, at + ": condition (i), K=1, eps=1/2");
      for (const Rational eta : {Rational(1), Rational(1, 4)}) {
        const ConditionIvResult iv = condition_iv_check(c.fns, x, Rational(1), eta);
        t.check(iv.holds && !iv.splits.empty(), at + ": condition (iv), eta=" + eta.str() + " " + iv.detail);
        t.check(hup_sandwich_check(c.fns, x, eta).holds, at + ": sandwich, eta=" + eta.str());
      }
    }
    const CheckResult ii = condition_ii_check(c.fns, unit_duals(n));
    t.check(ii.holds, c.name + ": condition (ii) " + ii.detail);
    // Independent values of (sum f)* by vertex enumeration.
    if (const auto plain = plain_sum(c.fns)) {
      const ConvexFn sum_conj = conjugate(fn_sum(c.fns));
      for (const auto& y : unit_duals(n)) {
        const ExtReal expect = oracle_conjugate(*plain, y);
        t.check(sum_conj.evaluate(y) == expect, c.name + ": (sum f)* at " + y.str());
        t.check(inf_conv_value(conj, y).value == expect, c.name + ": inf-convolution at " + y.str());
        ++out.oracle_duals;
      }
    }
  });
  out.c3 = guarded(c.name, [&](Tally& t) {
    for (const auto& x : c.points) {
      for (const Rational eps : {Rational(1, 2), Rational(1)}) {
        const KSweep s = condition_i_sweep(c.fns, x, eps);
        t.check(s.least_k && *s.least_k <= static_cast<long>(m + 1),
                c.name + " at " + x.str() + ": no K <= m+1 for eps=" + eps.str());
      }
    }
  });
  out.c4 = guarded(c.name, [&](Tally& t) {
    for (const auto& x : c.points) {
      const SumRuleResult r = sum_rule_check(c.fns, x);
      t.check(r.holds && r.lhs.is_polyhedral() && r.rhs.is_polyhedral() &&
                  r.lhs.polyhedron().equals(r.rhs.polyhedron()),
              c.name + ": sum rule at " + x.str());
    }
    InstanceGenerator gen(c.fns.size() * 1000 + n);
    std::vector<RVector> ys = unit_duals(n);
    for (int k = 0; k < 3; ++k) ys.push_back(gen.integer_vector(n, -3, 3));
    for (const auto& y : ys) {
      const InfConvResult r = inf_conv_value(conj, y);
      if (!r.value.is_finite()) continue;
      bool split_ok = r.attained && r.witness.has_value();
      if (split_ok) {
        RVector total(n);
        ExtReal value(0);
        for (std::size_t i = 0; i < m; ++i) {
          total += (*r.witness)[i];
          value = value + conj[i].evaluate((*r.witness)[i]);
        }
        split_ok = total == y && value == r.value;
      }
      t.check(split_ok, c.name + ": inf-convolution not exact at " + y.str());
    }
  });
  return out;
}

// ------------------------------------------------------------------ 5

bool criterion5(const std::vector<CorpusInstance>& corpus) {
  std::size_t bounded = 0;
  std::size_t with_oracle = 0;
  const auto parts = parallel_map<Tally>(corpus.size(), [&](std::size_t i) {
    const CorpusInstance& c = corpus[i];
    return guarded(c.name, [&](Tally& t) {
      const GapReport g = gap_report(diagonal_instance(c.fns));
      t.check(g.feasible, c.name + ": origin is feasible");
      t.check(g.gap == ExtReal(0), c.name + ": gap " + g.gap.str());
      t.check(g.cq.at("primal-routes").holds == true, c.name + ": primal routes disagree");
      t.check(g.cq.at("dual-routes").holds == true, c.name + ": dual routes disagree");
      if (g.primal_value.is_finite()) {
        t.check(g.primal_attained && g.dual_attained, c.name + ": attainment");
      }
      if (const auto plain = plain_sum(c.fns)) {
        // p = -(sum f)*(0).
        const ExtReal p = -oracle_conjugate(*plain, RVector(c.fns.front().dim()));
        t.check(g.primal_value == p, c.name + ": oracle p=" + p.str() + " got " + g.primal_value.str());
        t.check(g.dual_value == p, c.name + ": oracle d=" + p.str() + " got " + g.dual_value.str());
      }
    });
  });
  Tally t;
  for (const auto& p : parts) t.merge(p);
  for (const auto& c : corpus) {
    if (plain_sum(c.fns)) ++with_oracle;
  }
  t.merge(guarded("example33", [&](Tally& t) {
    const GapReport g = gap_report(parse_instance(data_dir() / "example33.json").instance());
    t.check(g.primal_value == ExtReal(0) && g.dual_value == ExtReal(0) && g.gap == ExtReal(0),
            "example33: p=" + g.primal_value.str() + " d=" + g.dual_value.str());
  }));
  t.merge(guarded("abs-interval", [&](Tally& t) {
    const GapReport g = gap_report(parse_instance(data_dir() / "abs_interval.json").instance());
    t.check(g.primal_value == ExtReal(1) && g.dual_value == ExtReal(1), "(|.|, [1,2]): p, d");
    t.check(g.primal_witness && *g.primal_witness == RVector({1, 1}), "(|.|, [1,2]): primal witness x = 1");
    t.check(g.dual_witness && *g.dual_witness == RVector({1, -1}), "(|.|, [1,2]): dual witness y* = 1");
    ++bounded;
  }));
  t.merge(guarded("cone", [&](Tally& t) {
    const GapReport g = gap_report(parse_instance(data_dir() / "cone_demo.json").instance());
    t.check(g.primal_value == ExtReal(1) && g.gap == ExtReal(0), "cone instance");
  }));
  line(t.ok(), 5, "duality gap and witnesses", t, std::to_string(with_oracle) + " instances with brute-force oracle");
  return t.ok();
}

// ------------------------------------------------------------------ 6

struct CqInstance {
  std::string name;
  MonotropicInstance inst;
  std::vector<RVector> points;  // reformulated-space feasible points
};

bool criterion6(const std::vector<CorpusInstance>& corpus) {
  std::vector<CqInstance> all;
  for (const auto& c : corpus) {
    InstanceGenerator gen(c.name.size() + 17 * c.fns.size() + 31 * c.fns.front().dim());
    Polyhedron dom = Polyhedron::whole_space(c.fns.front().dim());
    for (const auto& f : c.fns) dom = dom.intersect(f.polyhedral().domain());
    dom = dom.canonical();
    std::vector<RVector> pts{RVector(c.fns.front().dim())};
    for (int k = 0; k < 4; ++k) pts.push_back(gen.point_in(dom));
    all.push_back({c.name, diagonal_instance(c.fns), pts});
  }
  for (const char* file : {"poly_demo.json", "cone_demo.json", "abs_interval.json"}) {
    const MonotropicInstance inst = parse_instance(data_dir() / file).instance();
    const Polyhedron feas = inst.feasible_set();
    std::vector<RVector> pts;
    InstanceGenerator gen(7);
    for (int k = 0; k < 5; ++k) pts.push_back(inst.from_product(gen.point_in(feas)));
    all.push_back({file, inst, pts});
  }
  std::size_t interior = 0;
  for (const auto& c : all) interior += interiority_check(c.inst).holds ? 1 : 0;
  const auto parts = parallel_map<Tally>(all.size(), [&](std::size_t i) {
    const CqInstance& c = all[i];
    return guarded(c.name, [&](Tally& t) {
      const std::vector<ConvexFn> ref = c.inst.reformulated();
      if (interiority_check(c.inst).holds) {
        for (const auto& x : c.points) {
          for (const Rational eps : {Rational(1, 2), Rational(1)}) {
            t.check(bertsekas_cq_check(c.inst, c.inst.to_product(x), eps).holds,
                    c.name + ": Bertsekas CQ at " + x.str() + " eps=" + eps.str());
          }
        }
      }
      t.check(epi_conj_sum(ref).closed, c.name + ": epigraph sum not closed");
      t.check(condition_ii_check(ref, unit_duals(ref.front().dim())).holds, c.name + ": condition (ii)");
      const std::vector<ConvexFn> conj = conjugates(ref);
      for (const auto& y : unit_duals(ref.front().dim())) {
        const InfConvResult r = inf_conv_value(conj, y);
        t.check(!r.value.is_finite() || r.attained, c.name + ": exactness at " + y.str());
      }
    });
  });
  Tally t;
  for (const auto& p : parts) t.merge(p);
  t.merge(guarded("example33", [](Tally& t) {
    const MonotropicInstance inst = parse_instance(data_dir() / "example33.json").instance();
    t.check(bertsekas_cq_check(inst, RVector{0, 0, 0, 0}, Rational(1, 2)).holds, "example33: Bertsekas, eps=1/2");
    t.check(bertsekas_cq_check(inst, RVector{0, 0, 0, 0}, Rational(1)).holds, "example33: Bertsekas, eps=1");
    t.check(!epi_conj_sum(inst.reformulated()).closed, "example33: closed-epigraph must fail");
    t.check(!interiority_check(inst).holds, "example33: interiority must fail");
  }));
  line(t.ok(), 6, "CQ implication evidence", t,
       std::to_string(all.size()) + " instances, " + std::to_string(interior) + " with interiority");
  return t.ok();
}

// ------------------------------------------------------------------ 7

Tally calculus_function(std::uint64_t seed) {
  return guarded("calculus seed " + std::to_string(seed), [&](Tally& t) {
    InstanceGenerator gen(seed);
    const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 2));
    const PolyhedralFn p = gen.polyhedral_fn(d, 5);
    const ConvexFn f = p;
    const ConvexFn fc = conjugate(f);
    const std::string tag = "seed " + std::to_string(seed);
    t.check(conjugate(fc).polyhedral().epigraph().equals(p.epigraph()), tag + ": biconjugate epigraph");
    // Brute-force conjugate for the Fenchel-Young side.
    oracle::PlainFn plain;
    plain.dim = d;
    for (const auto& piece : p.pieces()) {
      plain.slopes.push_back(piece.slope);
      plain.offsets.push_back(piece.offset);
    }
    for (const auto& row : p.domain().hrep().ineqs) {
      plain.dom_a.push_back(row.a);
      plain.dom_b.push_back(row.b);
    }
    for (const auto& e : p.domain().hrep().eqs) {
      plain.dom_a.push_back(e.a);
      plain.dom_b.push_back(e.b);
      plain.dom_a.push_back(-e.a);
      plain.dom_b.push_back(-e.b);
    }
    std::vector<RVector> xs{RVector(d)};
    const Polyhedron dom = p.domain().canonical();
    for (int k = 0; k < 2; ++k) xs.push_back(gen.point_in(dom));
    std::vector<RVector> ys;
    for (int k = 0; k < 4; ++k) ys.push_back(gen.integer_vector(d, -3, 3));
    for (const auto& piece : p.pieces()) ys.push_back(piece.slope);
    for (const auto& y : ys) {
      t.check(fc.evaluate(y) == oracle_conjugate(plain, y), tag + ": f* at " + y.str());
    }
    for (const auto& x : xs) {
      const Region sub = subdiff(f, x);
      for (const auto& y : ys) {
        const ExtReal r = fenchel_young_residual(f, x, y);
        t.check(r >= ExtReal(0), tag + ": Fenchel-Young at " + x.str() + ", " + y.str());
        t.check((r == ExtReal(0)) == sub.contains(y), tag + ": equality iff subgradient at " + x.str() + ", " + y.str());
      }
      const Rational e1(gen.uniform(0, 4), 4);
      const Rational e2 = e1 + Rational(gen.uniform(0, 4), 4);
      t.check(eps_subdiff(f, x, e2).includes(eps_subdiff(f, x, e1)),
              tag + ": eps-monotonicity at " + x.str() + " " + e1.str() + " <= " + e2.str());
      t.check(eps_subdiff(f, x, e1).includes(sub), tag + ": subdifferential inside eps-subdifferential");
    }
  });
}

bool criterion7() {
  const auto parts = parallel_map<Tally>(60, [](std::size_t i) { return calculus_function(700 + i); });
  Tally t;
  for (const auto& p : parts) t.merge(p);
  std::size_t polytopes = 0;
  t.merge(guarded("sublinear", [&](Tally& t) {
    InstanceGenerator gen(11);
    for (int i = 0; i < 20; ++i, ++polytopes) {
      const std::size_t d = static_cast<std::size_t>(gen.uniform(1, 3));
      const Polyhedron p = gen.polytope(d, static_cast<std::size_t>(gen.uniform(1, 6)));
      const ConvexFn s = PolyhedralFn::support(p);
      const RVector origin(d);
      const Region sub = subdiff(s, origin);
      t.check(sub.is_polyhedral() && sub.polyhedron().equals(p), "polytope " + std::to_string(i) + ": df(0) = P");
      for (const Rational eps : {Rational(1, 4), Rational(1), Rational(7)}) {
        const Region r = eps_subdiff(s, origin, eps);
        t.check(r.is_polyhedral() && r.polyhedron().equals(p),
                "polytope " + std::to_string(i) + ": d_eps f(0) = P at eps=" + eps.str());
      }
      // Support values against the vertex maximum.
      for (int k = 0; k < 5; ++k) {
        const RVector y = gen.integer_vector(d, -3, 3);
        Rational best = dot(p.vrep().vertices.front(), y);
        for (const auto& v : p.vrep().vertices) best = max(best, dot(v, y));
        t.check(s.evaluate(y) == ExtReal(best), "polytope " + std::to_string(i) + ": support value at " + y.str());
      }
    }
  }));
  const bool ok = t.ok() && t.checked >= 1000 && polytopes >= 20;
  line(ok, 7, "calculus property suite", t, std::to_string(polytopes) + " sublinear polytopes");
  return ok;
}

// ------------------------------------------------------------------ 8

std::string full_report() {
  std::ostringstream os;
  for (const auto& name : gallery_names()) {
    const Report r = run_gallery(name, 0);
    os << r.markdown() << r.csv();
  }
  for (const char* file : {"example33.json", "poly_demo.json", "cone_demo.json", "abs_interval.json"}) {
    os << run_queries(parse_instance(data_dir() / file)).csv();
  }
  return os.str();
}

bool criterion8() {
  Tally t = guarded("determinism", [](Tally& t) {
    const std::string a = full_report();
    const std::string b = full_report();
    t.check(!a.empty() && a == b, "two report runs differ");
  });
  line(t.ok(), 8, "deterministic reports", t, "galleries and shipped queries rendered twice");
  return t.ok();
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  bool ok = criterion1();

  const std::vector<CorpusInstance> corpus = polyhedral_corpus(kCorpusSeed, kCorpusSize, 2);
  const auto parts = parallel_map<CorpusTallies>(corpus.size(), [&](std::size_t i) { return corpus_instance(corpus[i]); });
  CorpusTallies all;
  for (const auto& p : parts) {
    all.c2.merge(p.c2);
    all.c3.merge(p.c3);
    all.c4.merge(p.c4);
    all.oracle_duals += p.oracle_duals;
  }
  const std::string corpus_note = std::to_string(corpus.size()) + " seeded instances";
  line(all.c2.ok(), 2, "sum-rule conditions on the polyhedral corpus", all.c2,
       corpus_note + ", " + std::to_string(all.oracle_duals) + " duals against brute force");
  line(all.c3.ok(), 3, "K = m+1 suffices for condition (i)", all.c3, corpus_note);
  line(all.c4.ok(), 4, "sum rule and exact inf-convolution", all.c4, corpus_note);
  ok = ok && all.c2.ok() && all.c3.ok() && all.c4.ok();

  ok = criterion5(corpus) && ok;
  ok = criterion6(corpus) && ok;
  ok = criterion7() && ok;
  ok = criterion8() && ok;
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "acceptance finished in " << secs << " s\n";
  return ok ? 0 : 1;
}
