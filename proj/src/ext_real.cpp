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

#include "convexlab/ext_real.hpp"

#include "convexlab/error.hpp"

namespace convexlab {

const Rational& ExtReal::value() const {
  require(is_finite(), ErrorCode::kInvariantViolation, "value() of an infinite ExtReal");
  return value_;
}

std::string ExtReal::str() const {
  switch (kind_) {
    case Kind::kPlusInfinity: return "+inf";
    case Kind::kMinusInfinity: return "-inf";
    case Kind::kFinite: break;
  }
  return value_.str();
}

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "+inf" || text == "inf") return plus_infinity();
  if (text == "-inf") return minus_infinity();
  return ExtReal(Rational::parse(text));
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if (a.is_finite() && b.is_finite()) return ExtReal(a.value_ + b.value_);
  const bool plus = a.is_plus_infinity() || b.is_plus_infinity();
  const bool minus = a.is_minus_infinity() || b.is_minus_infinity();
  require(!(plus && minus), ErrorCode::kInvariantViolation, "+inf + -inf is undefined");
  return plus ? ExtReal::plus_infinity() : ExtReal::minus_infinity();
}

ExtReal operator-(const ExtReal& a) {
  if (a.is_plus_infinity()) return ExtReal::minus_infinity();
  if (a.is_minus_infinity()) return ExtReal::plus_infinity();
  return ExtReal(-a.value_);
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

}  // namespace convexlab
