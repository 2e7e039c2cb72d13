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

#include "convexlab/vector.hpp"

#include "convexlab/error.hpp"

namespace convexlab {

RVector RVector::unit(std::size_t dim, std::size_t k) {
  RVector v(dim);
  v[k] = 1;
  return v;
}

RVector RVector::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    coords.push_back(Rational::parse(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RVector(std::move(coords));
}

bool RVector::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

RVector& RVector::operator+=(const RVector& o) {
  require(dim() == o.dim(), ErrorCode::kMalformedInput, "vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RVector& RVector::operator-=(const RVector& o) {
  require(dim() == o.dim(), ErrorCode::kMalformedInput, "vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RVector& RVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RVector RVector::operator-() const {
  RVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

RVector RVector::concat(const RVector& tail) const {
  std::vector<Rational> out(coords_);
  out.insert(out.end(), tail.coords_.begin(), tail.coords_.end());
  return RVector(std::move(out));
}

RVector RVector::slice(std::size_t offset, std::size_t length) const {
  require(offset + length <= dim(), ErrorCode::kMalformedInput, "vector slice out of range");
  return RVector(std::vector<Rational>(coords_.begin() + static_cast<std::ptrdiff_t>(offset),
                                       coords_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
}

std::string RVector::str() const { return "(" + csv() + ")"; }

std::string RVector::csv() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ',';
    out += coords_[i].str();
  }
  return out;
}

Rational dot(const RVector& a, const RVector& b) {
  require(a.dim() == b.dim(), ErrorCode::kMalformedInput, "dot product dimension mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

RVector primitive(const RVector& v) {
  if (v.is_zero()) return v;
  mpz_class lcm_den = 1;
  for (const auto& c : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.dim());
  for (const auto& c : v) {
    mpz_class n = c.raw().get_num() * (lcm_den / c.raw().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(std::move(n));
  }
  RVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(mpq_class(ints[i] / g));
  return out;
}

}  // namespace convexlab
