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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/ext_real.hpp"
#include "convexlab/region.hpp"

namespace convexlab {

/// 2 x + y^2 <= 0.
bool in_parabola(const RVector& p);

/// Support function of the parabola region {2x + y^2 <= 0}:
///   (a, b) -> b^2 / (2a) for a > 0, 0 at the origin, +inf otherwise.
ExtReal parabola_support(const RVector& y);

/// A closed-form convex function. Entries must be proper, lower
/// semicontinuous and convex, and their conjugate must be another entry.
class CatalogEntry {
 public:
  virtual ~CatalogEntry() = default;

  virtual std::string tag() const = 0;
  virtual std::size_t dim() const = 0;
  virtual ExtReal evaluate(const RVector& x) const = 0;
  virtual std::string conjugate_tag() const = 0;
  /// eps-subdifferential at x; empty polyhedron outside the domain.
  virtual Region eps_subdiff(const RVector& x, const Rational& eps) const = 0;
  /// Points used by identity checks.
  virtual std::vector<RVector> sample_grid() const;
  /// True for indicator functions.
  virtual bool is_indicator() const { return false; }
};

/// Looks up a registered entry; unknown tags raise UnknownCatalogTag.
std::shared_ptr<const CatalogEntry> catalog_lookup(std::string_view tag);

/// Sorted list of registered tags.
std::vector<std::string> catalog_tags();

/// Registers an additional entry. Its tag must be new.
void register_catalog_entry(std::shared_ptr<const CatalogEntry> entry);

inline constexpr std::string_view kParabolaIndicator = "parabola-indicator";
inline constexpr std::string_view kParabolaConjugate = "parabola-conjugate";

}  // namespace convexlab
