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

#include <algorithm>
#include <bit>
#include <cstdint>

#include "convexlab/error.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/polyhedron.hpp"

namespace convexlab {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  bool subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RVector z;
  Bitset zeros;  // processed inequality rows with <g, z> == 0
};

// Makes every vector in `vs` orthogonal to row h by subtracting multiples of
// pivot (which satisfies <h, pivot> != 0).
void eliminate_along(std::vector<RVector>& vs, const RVector& h, const RVector& pivot) {
  const Rational hp = dot(h, pivot);
  for (auto& v : vs) {
    const Rational hv = dot(h, v);
    if (!hv.is_zero()) v = primitive(v - pivot * (hv / hp));
  }
}

}  // namespace

ConeGenerators cone_generators(const std::vector<RVector>& ge_rows,
                               const std::vector<RVector>& eq_rows, std::size_t dim) {
  std::vector<RVector> lineality;
  for (std::size_t k = 0; k < dim; ++k) lineality.push_back(RVector::unit(dim, k));

  for (const auto& e : eq_rows) {
    require(e.dim() == dim, ErrorCode::kMalformedInput, "cone row dimension mismatch");
    auto it = std::find_if(lineality.begin(), lineality.end(),
                           [&](const RVector& l) { return !dot(e, l).is_zero(); });
    if (it == lineality.end()) continue;
    const RVector pivot = *it;
    lineality.erase(it);
    eliminate_along(lineality, e, pivot);
  }

  std::vector<Ray> rays;
  const std::size_t nrows = ge_rows.size();
  for (std::size_t row = 0; row < nrows; ++row) {
    const RVector& h = ge_rows[row];
    require(h.dim() == dim, ErrorCode::kMalformedInput, "cone row dimension mismatch");
    auto it = std::find_if(lineality.begin(), lineality.end(),
                           [&](const RVector& l) { return !dot(h, l).is_zero(); });
    if (it != lineality.end()) {
      RVector pivot = *it;
      lineality.erase(it);
      if (dot(h, pivot).sign() < 0) pivot = -pivot;
      eliminate_along(lineality, h, pivot);
      for (auto& r : rays) {
        const Rational hr = dot(h, r.z);
        if (!hr.is_zero()) r.z = primitive(r.z - pivot * (hr / dot(h, pivot)));
        r.zeros.set(row);
      }
      Bitset zeros(nrows);
      for (std::size_t k = 0; k < row; ++k) zeros.set(k);
      rays.push_back({primitive(pivot), zeros});
      continue;
    }

    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].z);
      if (val[i].sign() > 0) {
        pos.push_back(i);
      } else if (val[i].sign() < 0) {
        neg.push_back(i);
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i].sign() >= 0) {
        Ray r = rays[i];
        if (val[i].is_zero()) r.zeros.set(row);
        next.push_back(std::move(r));
      }
    }
    for (auto p : pos) {
      for (auto n : neg) {
        const Bitset common = rays[p].zeros & rays[n].zeros;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k != p && k != n && common.subset_of(rays[k].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        RVector z = primitive(rays[n].z * val[p] - rays[p].z * val[n]);
        Bitset zeros = common;
        zeros.set(row);
        next.push_back({std::move(z), std::move(zeros)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.z));
  out.lines = std::move(lineality);
  return out;
}

namespace {

void sort_unique(std::vector<RVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

VRep canonical_vrep(VRep v) {
  if (v.is_empty()) return VRep{v.dim, {}, {}, {}};
  RowEchelon lin;
  std::vector<RVector> lines;
  if (!v.lines.empty()) {
    lin = row_echelon(v.lines, v.dim);
    for (const auto& l : lin.rows) lines.push_back(sign_normalized(l));
  }
  std::vector<RVector> verts, rays;
  for (const auto& p : v.vertices) verts.push_back(lines.empty() ? p : lin.reduce(p));
  for (const auto& r : v.rays) {
    RVector red = lines.empty() ? r : lin.reduce(r);
    if (!red.is_zero()) rays.push_back(primitive(red));
  }
  sort_unique(verts);
  sort_unique(rays);
  std::sort(lines.begin(), lines.end());
  return VRep{v.dim, std::move(verts), std::move(rays), std::move(lines)};
}

}  // namespace

VRep to_vrep(const HRep& h) {
  const std::size_t n = h.dim;
  require(n > 0, ErrorCode::kMalformedInput, "polyhedron of dimension zero");
  std::vector<RVector> ge, eq;
  for (const auto& e : h.eqs) {
    require(e.a.dim() == n, ErrorCode::kMalformedInput, "H-rep row dimension mismatch");
    eq.push_back((-e.a).concat(RVector{e.b}));
  }
  ge.push_back(RVector::unit(n + 1, n));
  for (const auto& s : h.ineqs) {
    require(s.a.dim() == n, ErrorCode::kMalformedInput, "H-rep row dimension mismatch");
    ge.push_back((-s.a).concat(RVector{s.b}));
  }
  const ConeGenerators g = cone_generators(ge, eq, n + 1);
  VRep out;
  out.dim = n;
  for (const auto& z : g.rays) {
    const Rational t = z[n];
    if (t.sign() > 0) {
      out.vertices.push_back(z.slice(0, n) * (Rational(1) / t));
    } else {
      out.rays.push_back(z.slice(0, n));
    }
  }
  for (const auto& z : g.lines) out.lines.push_back(z.slice(0, n));
  return canonical_vrep(std::move(out));
}

namespace {

HRep canonical_hrep(HRep h) {
  const std::size_t n = h.dim;
  std::vector<RVector> eq_rows;
  for (const auto& e : h.eqs) eq_rows.push_back(e.a.concat(RVector{e.b}));
  RowEchelon ech;
  HRep out;
  out.dim = n;
  if (!eq_rows.empty()) {
    ech = row_echelon(eq_rows, n + 1);
    for (const auto& r : ech.rows) {
      const RVector s = sign_normalized(r);
      out.eqs.push_back({s.slice(0, n), s[n]});
    }
  }
  std::vector<RVector> ineq_rows;
  for (const auto& s : h.ineqs) {
    RVector r = s.a.concat(RVector{s.b});
    if (!eq_rows.empty()) r = ech.reduce(r);
    ineq_rows.push_back(primitive(r));
  }
  sort_unique(ineq_rows);
  for (const auto& r : ineq_rows) {
    if (r.slice(0, n).is_zero() && r[n].sign() >= 0) continue;  // 0 <= b
    out.ineqs.push_back({r.slice(0, n), r[n]});
  }
  std::sort(out.eqs.begin(), out.eqs.end());
  return out;
}

HRep empty_hrep(std::size_t n) {
  HRep h;
  h.dim = n;
  h.ineqs.push_back({RVector(n), Rational(-1)});
  return h;
}

}  // namespace

HRep to_hrep(const VRep& v) {
  const std::size_t n = v.dim;
  require(n > 0, ErrorCode::kMalformedInput, "polyhedron of dimension zero");
  if (v.is_empty()) return empty_hrep(n);
  std::vector<RVector> ge, eq;
  for (const auto& p : v.vertices) {
    require(p.dim() == n, ErrorCode::kMalformedInput, "V-rep generator dimension mismatch");
    ge.push_back(p.concat(RVector{1}));
  }
  for (const auto& r : v.rays) {
    require(r.dim() == n, ErrorCode::kMalformedInput, "V-rep generator dimension mismatch");
    ge.push_back(r.concat(RVector{0}));
  }
  for (const auto& l : v.lines) {
    require(l.dim() == n, ErrorCode::kMalformedInput, "V-rep generator dimension mismatch");
    eq.push_back(l.concat(RVector{0}));
  }
  const ConeGenerators g = cone_generators(ge, eq, n + 1);
  // (a, beta) in the dual cone encodes <a, x> + beta >= 0.
  HRep out;
  out.dim = n;
  for (const auto& z : g.rays) {
    const RVector a = z.slice(0, n);
    if (a.is_zero()) continue;
    out.ineqs.push_back({-a, z[n]});
  }
  for (const auto& z : g.lines) {
    out.eqs.push_back({z.slice(0, n), -z[n]});
  }
  return canonical_hrep(std::move(out));
}

}  // namespace convexlab
