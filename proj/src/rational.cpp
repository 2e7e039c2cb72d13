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

#include "convexlab/rational.hpp"

#include <cctype>

#include "convexlab/error.hpp"

namespace convexlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
    case ErrorCode::kUnknownCatalogTag: return "unknown-catalog-tag";
    case ErrorCode::kUnsupportedCombination: return "unsupported-combination";
    case ErrorCode::kImproperFunction: return "improper-function";
    case ErrorCode::kDecompositionFailed: return "decomposition-failed";
  }
  return "unknown";
}

Rational::Rational(long num, long den) {
  require(den != 0, ErrorCode::kMalformedInput, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (text.find('.') != std::string_view::npos || text.find_first_of("eE") != std::string_view::npos) {
    fail(ErrorCode::kParse, "exact rational required (\"p/q\"), got decimal \"" +
                                std::string(text) + "\"");
  }
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    fail(ErrorCode::kParse, "malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::kParse, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  require(!o.is_zero(), ErrorCode::kMalformedInput, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const mpz_class n = r.numerator();
  const mpz_class d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(sn, sd));
}

}  // namespace convexlab
