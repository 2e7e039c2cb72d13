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

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/rational.hpp"

namespace convexlab {

/// Fixed-dimension vector of exact rationals. Houses primal points and dual
/// points alike.
class RVector {
 public:
  RVector() = default;
  explicit RVector(std::size_t dim) : coords_(dim) {}
  RVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RVector zero(std::size_t dim) { return RVector(dim); }
  static RVector unit(std::size_t dim, std::size_t k);

  /// Parses a comma-separated list of rationals, e.g. "0,1/2,-3".
  static RVector parse(std::string_view text);

  std::size_t dim() const { return coords_.size(); }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  RVector& operator+=(const RVector& o);
  RVector& operator-=(const RVector& o);
  RVector& operator*=(const Rational& s);
  RVector operator-() const;

  friend RVector operator+(RVector a, const RVector& b) { return a += b; }
  friend RVector operator-(RVector a, const RVector& b) { return a -= b; }
  friend RVector operator*(RVector a, const Rational& s) { return a *= s; }
  friend RVector operator*(const Rational& s, RVector a) { return a *= s; }

  friend bool operator==(const RVector&, const RVector&) = default;
  friend auto operator<=>(const RVector& a, const RVector& b) {
    return a.coords_ <=> b.coords_;
  }

  /// Concatenation of two vectors.
  RVector concat(const RVector& tail) const;
  RVector slice(std::size_t offset, std::size_t length) const;

  /// "(a,b,...)" with canonical rationals.
  std::string str() const;
  /// "a,b,..." suitable for CLI round trips.
  std::string csv() const;

  friend std::ostream& operator<<(std::ostream& os, const RVector& v) {
    return os << v.str();
  }

 private:
  std::vector<Rational> coords_;
};

Rational dot(const RVector& a, const RVector& b);

/// Scales v to a primitive integer vector with the same direction.
RVector primitive(const RVector& v);

}  // namespace convexlab
