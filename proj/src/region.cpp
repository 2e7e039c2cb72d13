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

#include "convexlab/region.hpp"

#include "convexlab/catalog.hpp"
#include "convexlab/error.hpp"

namespace convexlab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool parabola_eps_contains(const ParabolaEpsRegion& r, const RVector& y) {
  const ExtReal s = parabola_support(y);
  if (!s.is_finite()) return false;
  return s.value() - dot(r.at, y) <= r.eps;
}

bool parabola_conjugate_eps_contains(const ParabolaConjugateEpsRegion& r, const RVector& x) {
  if (!in_parabola(x)) return false;
  const ExtReal s = parabola_support(r.at);
  return s.is_finite() && dot(x, r.at) >= s.value() - r.eps;
}

}  // namespace

std::size_t Region::dim() const {
  return std::visit(Overloaded{
                        [](const Polyhedron& p) { return p.dim(); },
                        [](const ParabolaEpsRegion&) { return std::size_t{2}; },
                        [](const ParabolaConjugateEpsRegion&) { return std::size_t{2}; },
                        [](const LevelSetWithExactCore& r) { return r.exact.dim() + 1; },
                    },
                    kind_);
}

const Polyhedron& Region::polyhedron() const {
  require(is_polyhedral(), ErrorCode::kInvariantViolation, "region is not polyhedral");
  return std::get<Polyhedron>(kind_);
}

bool Region::contains(const RVector& y) const {
  require(y.dim() == dim(), ErrorCode::kMalformedInput, "region membership dimension mismatch");
  return std::visit(Overloaded{
                        [&](const Polyhedron& p) { return p.contains(y); },
                        [&](const ParabolaEpsRegion& r) { return parabola_eps_contains(r, y); },
                        [&](const ParabolaConjugateEpsRegion& r) {
                          return parabola_conjugate_eps_contains(r, y);
                        },
                        [&](const LevelSetWithExactCore& r) {
                          const std::size_t d = r.exact.dim();
                          const Rational& s = y[d];
                          if (s > r.level) return true;
                          return s == r.level && r.exact.contains(y.slice(0, d));
                        },
                    },
                    kind_);
}

bool Region::closure_contains(const RVector& y) const {
  if (const auto* r = std::get_if<LevelSetWithExactCore>(&kind_)) {
    require(y.dim() == dim(), ErrorCode::kMalformedInput, "region membership dimension mismatch");
    return y[r->exact.dim()] >= r->level;
  }
  return contains(y);
}

bool Region::is_closed() const {
  if (const auto* r = std::get_if<LevelSetWithExactCore>(&kind_)) {
    return Polyhedron::whole_space(r->exact.dim()).equals(r->exact);
  }
  return true;
}

bool Region::is_empty() const {
  if (const auto* p = std::get_if<Polyhedron>(&kind_)) return p->is_empty();
  return false;
}

bool Region::includes(const Region& other) const {
  require(dim() == other.dim(), ErrorCode::kMalformedInput, "region dimension mismatch");
  if (other.is_empty()) return true;
  if (is_polyhedral() && other.is_polyhedral()) return polyhedron().includes(other.polyhedron());
  const auto* a = std::get_if<ParabolaEpsRegion>(&kind_);
  const auto* b = std::get_if<ParabolaEpsRegion>(&other.kind_);
  if (a && b && a->at == b->at) return b->eps <= a->eps;
  const auto* ca = std::get_if<ParabolaConjugateEpsRegion>(&kind_);
  const auto* cb = std::get_if<ParabolaConjugateEpsRegion>(&other.kind_);
  if (ca && cb && ca->at == cb->at) return cb->eps <= ca->eps;
  fail(ErrorCode::kUnsupportedCombination,
       "inclusion between " + describe() + " and " + other.describe() + " is not decidable here");
}

std::string Region::describe() const {
  return std::visit(
      Overloaded{
          [](const Polyhedron& p) { return p.describe(); },
          [](const ParabolaEpsRegion& r) {
            return "parabola-eps-subdiff(at=" + r.at.str() + ", eps=" + r.eps.str() + ")";
          },
          [](const ParabolaConjugateEpsRegion& r) {
            return "parabola-conjugate-eps-subdiff(at=" + r.at.str() + ", eps=" + r.eps.str() + ")";
          },
          [](const LevelSetWithExactCore& r) {
            return "{s > " + r.level.str() + "} u {s >= " + r.level.str() + ", y in " +
                   r.exact.describe() + "}";
          },
      },
      kind_);
}

}  // namespace convexlab
