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

#include <compare>
#include <ostream>
#include <string>

#include "convexlab/rational.hpp"

namespace convexlab {

/// Rational extended by +inf and -inf. Proper convex functions never return
/// -inf; it shows up only in diagnostics such as unbounded LPs.
class ExtReal {
 public:
  enum class Kind { kMinusInfinity, kFinite, kPlusInfinity };

  ExtReal() = default;
  ExtReal(Rational v) : kind_(Kind::kFinite), value_(std::move(v)) {}
  ExtReal(int v) : ExtReal(Rational(v)) {}

  static ExtReal plus_infinity() { return ExtReal(Kind::kPlusInfinity); }
  static ExtReal minus_infinity() { return ExtReal(Kind::kMinusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_infinity() const { return kind_ == Kind::kPlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::kMinusInfinity; }
  /// Requires is_finite().
  const Rational& value() const;

  /// "+inf", "-inf" or the canonical rational.
  std::string str() const;
  static ExtReal parse(std::string_view text);

  /// +inf + (-inf) has no value; both operands infinite with opposite signs
  /// raises an error.
  friend ExtReal operator+(const ExtReal& a, const ExtReal& b);
  friend ExtReal operator-(const ExtReal& a);
  friend ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);
  friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) { return os << x.str(); }

 private:
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::kFinite;
  Rational value_;
};

}  // namespace convexlab
