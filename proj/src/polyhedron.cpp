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

#include "convexlab/polyhedron.hpp"

#include <mutex>
#include <sstream>

#include "convexlab/error.hpp"
#include "convexlab/linalg.hpp"

namespace convexlab {

struct Polyhedron::Impl {
  std::size_t dim = 0;
  mutable std::mutex mu;
  mutable std::optional<HRep> h;
  mutable std::optional<VRep> v;
};

namespace {

void check_hrep(const HRep& h) {
  require(h.dim > 0, ErrorCode::kMalformedInput, "polyhedron of dimension zero");
  for (const auto& s : h.ineqs) {
    require(s.a.dim() == h.dim, ErrorCode::kMalformedInput, "H-rep row dimension mismatch");
  }
  for (const auto& e : h.eqs) {
    require(e.a.dim() == h.dim, ErrorCode::kMalformedInput, "H-rep row dimension mismatch");
  }
}

void check_vrep(const VRep& v) {
  require(v.dim > 0, ErrorCode::kMalformedInput, "polyhedron of dimension zero");
  for (const auto* group : {&v.vertices, &v.rays, &v.lines}) {
    for (const auto& g : *group) {
      require(g.dim() == v.dim, ErrorCode::kMalformedInput, "V-rep generator dimension mismatch");
    }
  }
}

bool satisfies(const HRep& h, const RVector& x) {
  for (const auto& s : h.ineqs) {
    if (dot(s.a, x) > s.b) return false;
  }
  for (const auto& e : h.eqs) {
    if (dot(e.a, x) != e.b) return false;
  }
  return true;
}

bool recedes(const HRep& h, const RVector& r) {
  for (const auto& s : h.ineqs) {
    if (dot(s.a, r).sign() > 0) return false;
  }
  for (const auto& e : h.eqs) {
    if (!dot(e.a, r).is_zero()) return false;
  }
  return true;
}

void require_same_dim(const Polyhedron& a, const Polyhedron& b) {
  require(a.dim() == b.dim(), ErrorCode::kMalformedInput, "polyhedron dimension mismatch");
}

}  // namespace

Polyhedron Polyhedron::from_hrep(HRep h) {
  check_hrep(h);
  auto impl = std::make_shared<Impl>();
  impl->dim = h.dim;
  impl->h = std::move(h);
  return Polyhedron(std::move(impl));
}

Polyhedron Polyhedron::from_vrep(VRep v) {
  check_vrep(v);
  auto impl = std::make_shared<Impl>();
  impl->dim = v.dim;
  if (v.is_empty()) {
    v.rays.clear();
    v.lines.clear();
  }
  impl->v = std::move(v);
  return Polyhedron(std::move(impl));
}

Polyhedron Polyhedron::empty(std::size_t dim) { return from_vrep(VRep{dim, {}, {}, {}}); }

Polyhedron Polyhedron::whole_space(std::size_t dim) {
  VRep v{dim, {RVector(dim)}, {}, {}};
  for (std::size_t k = 0; k < dim; ++k) v.lines.push_back(RVector::unit(dim, k));
  return from_vrep(std::move(v));
}

Polyhedron Polyhedron::point(const RVector& p) { return from_vrep(VRep{p.dim(), {p}, {}, {}}); }

Polyhedron Polyhedron::box(const RVector& lo, const RVector& hi) {
  require(lo.dim() == hi.dim(), ErrorCode::kMalformedInput, "box bounds dimension mismatch");
  HRep h;
  h.dim = lo.dim();
  for (std::size_t k = 0; k < h.dim; ++k) {
    h.ineqs.push_back({RVector::unit(h.dim, k), hi[k]});
    h.ineqs.push_back({-RVector::unit(h.dim, k), -lo[k]});
  }
  return from_hrep(std::move(h));
}

Polyhedron Polyhedron::cone(std::size_t dim, std::vector<RVector> rays, std::vector<RVector> lines) {
  return from_vrep(VRep{dim, {RVector(dim)}, std::move(rays), std::move(lines)});
}

std::size_t Polyhedron::dim() const { return impl_->dim; }

const HRep& Polyhedron::hrep() const {
  std::lock_guard lock(impl_->mu);
  if (!impl_->h) impl_->h = to_hrep(*impl_->v);
  return *impl_->h;
}

const VRep& Polyhedron::vrep() const {
  std::lock_guard lock(impl_->mu);
  if (!impl_->v) impl_->v = to_vrep(*impl_->h);
  return *impl_->v;
}

bool Polyhedron::is_empty() const { return vrep().is_empty(); }

bool Polyhedron::contains(const RVector& x) const {
  require(x.dim() == dim(), ErrorCode::kMalformedInput, "point dimension mismatch");
  {
    std::lock_guard lock(impl_->mu);
    if (!impl_->h && impl_->v && impl_->v->is_empty()) return false;
  }
  return satisfies(hrep(), x);
}

bool Polyhedron::includes(const Polyhedron& other) const {
  require_same_dim(*this, other);
  const VRep& q = other.vrep();
  if (q.is_empty()) return true;
  const HRep& h = hrep();
  for (const auto& p : q.vertices) {
    if (!satisfies(h, p)) return false;
  }
  for (const auto& r : q.rays) {
    if (!recedes(h, r)) return false;
  }
  for (const auto& l : q.lines) {
    if (!recedes(h, l) || !recedes(h, -l)) return false;
  }
  return true;
}

bool Polyhedron::equals(const Polyhedron& other) const {
  return includes(other) && other.includes(*this);
}

bool Polyhedron::is_cone() const {
  const Polyhedron c = canonical();
  const VRep& v = c.vrep();
  if (v.is_empty()) return false;
  for (const auto& p : v.vertices) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool Polyhedron::is_subspace() const {
  const Polyhedron c = canonical();
  const VRep& v = c.vrep();
  return is_cone() && v.rays.empty();
}

Polyhedron Polyhedron::canonical() const {
  const HRep h = to_hrep(vrep());
  VRep v = to_vrep(h);
  auto impl = std::make_shared<Impl>();
  impl->dim = dim();
  impl->h = h;
  impl->v = std::move(v);
  return Polyhedron(std::move(impl));
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
  require_same_dim(*this, other);
  HRep h = hrep();
  const HRep& o = other.hrep();
  h.ineqs.insert(h.ineqs.end(), o.ineqs.begin(), o.ineqs.end());
  h.eqs.insert(h.eqs.end(), o.eqs.begin(), o.eqs.end());
  return from_hrep(std::move(h));
}

Polyhedron Polyhedron::linear_image(const std::vector<RVector>& rows) const {
  require(!rows.empty(), ErrorCode::kMalformedInput, "linear image into R^0");
  auto apply = [&](const RVector& x) {
    RVector y(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) y[i] = dot(rows[i], x);
    return y;
  };
  const VRep& v = vrep();
  VRep out;
  out.dim = rows.size();
  if (v.is_empty()) return from_vrep(std::move(out));
  for (const auto& p : v.vertices) out.vertices.push_back(apply(p));
  for (const auto& r : v.rays) {
    RVector y = apply(r);
    if (!y.is_zero()) out.rays.push_back(std::move(y));
  }
  for (const auto& l : v.lines) {
    RVector y = apply(l);
    if (!y.is_zero()) out.lines.push_back(std::move(y));
  }
  return from_vrep(std::move(out));
}

Polyhedron Polyhedron::embed(std::size_t offset, std::size_t total) const {
  require(offset + dim() <= total, ErrorCode::kMalformedInput, "embedding out of range");
  const std::size_t before = offset;
  const std::size_t after = total - offset - dim();
  auto pad = [&](const RVector& x) { return RVector(before).concat(x).concat(RVector(after)); };
  const VRep& v = vrep();
  VRep out;
  out.dim = total;
  for (const auto& p : v.vertices) out.vertices.push_back(pad(p));
  for (const auto& r : v.rays) out.rays.push_back(pad(r));
  for (const auto& l : v.lines) out.lines.push_back(pad(l));
  return from_vrep(std::move(out));
}

Polyhedron Polyhedron::negate() const {
  const VRep& v = vrep();
  VRep out;
  out.dim = dim();
  for (const auto& p : v.vertices) out.vertices.push_back(-p);
  for (const auto& r : v.rays) out.rays.push_back(-r);
  out.lines = v.lines;
  return from_vrep(std::move(out));
}

Polyhedron Polyhedron::recession_cone() const {
  const VRep& v = vrep();
  if (v.is_empty()) return empty(dim());
  return cone(dim(), v.rays, v.lines);
}

std::optional<RVector> Polyhedron::point_outside(const Polyhedron& other) const {
  require_same_dim(*this, other);
  const VRep& v = vrep();
  if (v.is_empty()) return std::nullopt;
  const HRep& h = other.hrep();
  for (const auto& p : v.vertices) {
    if (!satisfies(h, p)) return p;
  }
  const RVector& base = v.vertices.front();
  auto escape = [&](const RVector& r) -> std::optional<RVector> {
    for (const auto& s : h.ineqs) {
      const Rational ar = dot(s.a, r);
      if (ar.sign() <= 0) continue;
      const Rational t = max(Rational(0), (s.b - dot(s.a, base)) / ar) + 1;
      return base + r * t;
    }
    for (const auto& e : h.eqs) {
      if (!dot(e.a, r).is_zero()) return base + r;
    }
    return std::nullopt;
  };
  for (const auto& r : v.rays) {
    if (auto p = escape(r)) return p;
  }
  for (const auto& l : v.lines) {
    if (auto p = escape(l)) return p;
    if (auto p = escape(-l)) return p;
  }
  return std::nullopt;
}

std::string Polyhedron::describe() const {
  const VRep& v = vrep();
  std::ostringstream os;
  if (v.is_empty()) return "empty";
  auto list = [&](const char* name, const std::vector<RVector>& xs) {
    if (xs.empty()) return;
    os << name << "{";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << "}";
  };
  list("conv", v.vertices);
  if (!v.rays.empty()) os << " + ";
  list("cone", v.rays);
  if (!v.lines.empty()) os << " + ";
  list("span", v.lines);
  return os.str();
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
  require_same_dim(p, q);
  const VRep& a = p.vrep();
  const VRep& b = q.vrep();
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(p.dim());
  VRep out;
  out.dim = p.dim();
  for (const auto& u : a.vertices) {
    for (const auto& w : b.vertices) out.vertices.push_back(u + w);
  }
  out.rays = a.rays;
  out.rays.insert(out.rays.end(), b.rays.begin(), b.rays.end());
  out.lines = a.lines;
  out.lines.insert(out.lines.end(), b.lines.begin(), b.lines.end());
  return Polyhedron::from_vrep(std::move(out)).canonical();
}

Polyhedron minkowski_sum(const std::vector<Polyhedron>& terms, std::size_t dim) {
  Polyhedron acc = Polyhedron::point(RVector(dim));
  for (const auto& t : terms) acc = minkowski_sum(acc, t);
  return acc;
}

Polyhedron dual_cone(const Polyhedron& c) {
  require(c.is_cone(), ErrorCode::kMalformedInput, "dual cone requires a cone");
  const VRep& v = c.vrep();
  HRep h;
  h.dim = c.dim();
  for (const auto& r : v.rays) h.ineqs.push_back({-r, Rational(0)});
  for (const auto& l : v.lines) h.eqs.push_back({l, Rational(0)});
  return Polyhedron::from_hrep(std::move(h));
}

}  // namespace convexlab
