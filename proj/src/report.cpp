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

#include "convexlab/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "convexlab/error.hpp"
#include "convexlab/subdiff.hpp"

namespace convexlab {

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string split_str(const std::vector<RVector>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i].str();
  return out;
}

std::string markdown_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out.empty() ? "-" : out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class QueryRun {
 public:
  QueryRun(const InstanceFile& file, const Query& q)
      : file_(file), q_(q), inst_(file.instance()), ref_(inst_.reformulated()) {}

  Report run() {
    report_.title = q_.name;
    try {
      dispatch();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupportedCombination) throw;
      add("result", "n/a", "-", std::string("unsupported: ") + e.what(), std::nullopt);
    }
    for (const auto& [key, value] : q_.expect) {
      if (!used_.count(key)) {
        report_.rows.push_back({q_.name + "." + key, "fail", "missing", "-", "no row named " + key});
      }
    }
    return report_;
  }

 private:
  void add(const std::string& key, const std::string& value, const std::string& witness,
           const std::string& certificate, std::optional<std::string> expected) {
    used_.insert(key);
    if (auto it = q_.expect.find(key); it != q_.expect.end()) expected = it->second;
    std::string verdict = "info";
    if (expected && value != "n/a") verdict = value == *expected ? "pass" : "fail";
    if (expected && value == "n/a" && q_.expect.count(key)) verdict = "fail";
    report_.rows.push_back({q_.name + "." + key, verdict, value, witness.empty() ? "-" : witness,
                            certificate.empty() ? "-" : certificate});
  }
  void add_check(const std::string& key, bool holds, const std::string& witness, const std::string& cert) {
    add(key, bool_str(holds), witness, cert, "true");
  }
  // Unsupported sub-checks become n/a rows instead of aborting the query.
  template <typename F>
  void guarded(const std::string& key, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUnsupportedCombination && e.code() != ErrorCode::kDecompositionFailed) throw;
      add(key, "n/a", "-", std::string("unsupported: ") + e.what(), std::nullopt);
    }
  }

  [[noreturn]] void missing(const char* what) const {
    fail(ErrorCode::kMalformedInput, "query " + q_.name + ": " + what + " required");
  }
  const ConvexFn& fn() const {
    if (!q_.function) missing("function");
    require(*q_.function < file_.functions.size(), ErrorCode::kMalformedInput,
            "query " + q_.name + ": function index out of range");
    return inst_.blocks()[*q_.function].fn;
  }
  const RVector& x() const {
    if (!q_.x) missing("x");
    return *q_.x;
  }
  const RVector& y() const {
    if (!q_.y) missing("y");
    return *q_.y;
  }
  Rational eps(const Rational& fallback) const { return q_.eps.value_or(fallback); }
  std::vector<RVector> duals() const {
    if (!q_.duals.empty()) return q_.duals;
    if (q_.y) return {*q_.y};
    const std::size_t n = ref_.front().dim();
    std::vector<RVector> out{RVector(n)};
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(RVector::unit(n, k));
      out.push_back(-RVector::unit(n, k));
    }
    return out;
  }
  std::vector<ConvexFn> conjugates() const {
    std::vector<ConvexFn> out;
    for (const auto& f : ref_) out.push_back(conjugate(f));
    return out;
  }

  void dispatch() {
    const std::string& c = q_.check;
    if (c == "evaluate") {
      add("value", fn().evaluate(x()).str(), x().str(), "evaluation", std::nullopt);
    } else if (c == "conjugate") {
      add("value", conjugate(fn()).evaluate(y()).str(), y().str(), "conjugate", std::nullopt);
    } else if (c == "epssub" || c == "subdiff") {
      const Rational e = c == "subdiff" ? Rational(0) : eps(0);
      const Region r = eps_subdiff(fn(), x(), e);
      add("region", r.describe(), x().str(), "eps=" + e.str(), std::nullopt);
      if (q_.y) add("contains", bool_str(r.contains(*q_.y)), q_.y->str(), "fenchel-young", std::nullopt);
    } else if (c == "sum-eps") {
      const Region r = sum_eps_subdiffs(ref_, x(), eps(0));
      add("region", r.describe(), x().str(), "eps=" + eps(0).str(), std::nullopt);
      add("closed", bool_str(r.is_closed()), x().str(), "closure test", std::nullopt);
    } else if (c == "sum-conjugate") {
      const ConvexFn conj = conjugate(fn_sum(ref_));
      for (const auto& d : duals()) {
        add("value@" + d.str(), conj.evaluate(d).str(), d.str(), "conjugate of the sum", std::nullopt);
      }
    } else if (c == "infconv") {
      const InfConvResult r = inf_conv_value(conjugates(), y());
      add("value", r.value.str(), y().str(), r.certificate, std::nullopt);
      add("attained", bool_str(r.attained), r.witness ? split_str(*r.witness) : y().str(), r.certificate,
          std::nullopt);
    } else if (c == "epi-sum") {
      const EpiConjSum s = epi_conj_sum(ref_);
      add("closed", bool_str(s.closed), s.witness ? s.witness->str() : "-", s.certificate, std::nullopt);
    } else if (c == "sumrule") {
      const SumRuleResult r = sum_rule_check(ref_, x());
      add("lhs", r.lhs.describe(), x().str(), "subdifferential of the sum", std::nullopt);
      add("rhs", r.rhs.describe(), x().str(), "sum of subdifferentials", std::nullopt);
      add_check("holds", r.holds, r.witness ? r.witness->str() : x().str(), "region equality");
    } else if (c == "verify") {
      verify();
    } else if (c == "k-sweep") {
      const KSweep s = condition_i_sweep(ref_, x(), eps(1));
      add("least-K", s.least_k ? std::to_string(*s.least_k) : "none", x().str(),
          "K in 1.." + std::to_string(ref_.size() + 1), std::nullopt);
    } else if (c == "duality") {
      duality();
    } else if (c == "interiority") {
      const CqResult r = interiority_check(inst_);
      add("holds", bool_str(r.holds), r.witness ? r.witness->str() : "-", r.detail, std::nullopt);
    } else if (c == "bertsekas") {
      const CqResult r = bertsekas_cq_check(inst_, inst_.to_product(x()), eps(1));
      add("holds", bool_str(r.holds), x().str(), r.detail, std::nullopt);
    } else {
      fail(ErrorCode::kMalformedInput, "query " + q_.name + ": unknown check \"" + c + "\"");
    }
  }

  void verify() {
    const Rational e = eps(1);
    const Rational eta = q_.eta.value_or(1);
    const Rational k = q_.k.value_or(1);
    const std::string at = x().str();
    guarded("condition-i", [&] {
      const CheckResult r = condition_i_check(ref_, x(), e, k);
      add_check("condition-i", r.holds, r.witness ? r.witness->str() : at, "K=" + k.str() + " " + r.detail);
    });
    guarded("condition-ii", [&] {
      const CheckResult r = condition_ii_check(ref_, duals());
      add_check("condition-ii", r.holds, r.witness ? r.witness->str() : at, r.detail);
      add_check("condition-iii", r.holds, r.witness ? r.witness->str() : at,
                "closure of the inf-convolution is the conjugate of the sum");
    });
    guarded("condition-iv", [&] {
      const ConditionIvResult r = condition_iv_check(ref_, x(), e, eta);
      add_check("condition-iv", r.holds, r.witness ? r.witness->str() : at,
                "eta=" + eta.str() + " splits=" + std::to_string(r.splits.size()) + " " + r.detail);
    });
    guarded("sandwich", [&] {
      const CheckResult r = hup_sandwich_check(ref_, x(), eta);
      add_check("sandwich", r.holds, r.witness ? r.witness->str() : at, r.detail);
    });
  }

  void duality() {
    const GapReport g = gap_report(inst_);
    const std::string pw = g.primal_witness ? g.primal_witness->str() : "-";
    const std::string dw = g.dual_witness ? g.dual_witness->str() : "-";
    add("primal", g.primal_value.str(), pw, "primal solve", std::nullopt);
    add("dual", g.dual_value.str(), dw, "dual solve", std::nullopt);
    add("gap", g.gap.str(), pw + " / " + dw, "p - d", std::nullopt);
    add("primal-attained", bool_str(g.primal_attained), pw, "primal solve", std::nullopt);
    add("dual-attained", bool_str(g.dual_attained), dw, "dual solve", std::nullopt);
    for (const auto& [name, d] : g.cq) {
      const bool required = name == "weak-duality" || name == "primal-routes" || name == "dual-routes";
      add(name, d.holds ? bool_str(*d.holds) : "n/a", d.witness, d.detail,
          required ? std::optional<std::string>("true") : std::nullopt);
    }
  }

  const InstanceFile& file_;
  const Query& q_;
  MonotropicInstance inst_;
  std::vector<ConvexFn> ref_;
  Report report_;
  std::set<std::string> used_;
};

}  // namespace

std::size_t Report::count(std::string_view verdict) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const ReportRow& r) { return r.verdict == verdict; }));
}

void Report::append(const Report& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

std::string Report::markdown() const {
  std::ostringstream os;
  os << "# " << title << "\n\n";
  os << "| query | verdict | value | witness | certificate |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << markdown_cell(r.query) << " | " << markdown_cell(r.verdict) << " | " << markdown_cell(r.value)
       << " | " << markdown_cell(r.witness) << " | " << markdown_cell(r.certificate) << " |\n";
  }
  os << "\n" << rows.size() << " rows: " << count("pass") << " pass, " << count("fail") << " fail, "
     << count("info") << " info\n";
  return os.str();
}

std::string Report::csv() const {
  std::ostringstream os;
  os << "query,verdict,value,witness,certificate-id\r\n";
  for (const auto& r : rows) {
    os << csv_cell(r.query) << ',' << csv_cell(r.verdict) << ',' << csv_cell(r.value) << ','
       << csv_cell(r.witness) << ',' << csv_cell(r.certificate) << "\r\n";
  }
  return os.str();
}

Report run_query(const InstanceFile& file, const Query& q) { return QueryRun(file, q).run(); }

Report run_queries(const InstanceFile& file) {
  Report out;
  for (const auto& q : file.queries) out.append(run_query(file, q));
  return out;
}

const std::vector<std::string>& query_checks() {
  static const std::vector<std::string> checks{
      "evaluate", "conjugate", "epssub",   "subdiff",     "sum-eps",     "sum-conjugate", "infconv",
      "epi-sum",  "sumrule",   "verify",   "k-sweep",     "duality",     "interiority",   "bertsekas"};
  return checks;
}

}  // namespace convexlab
