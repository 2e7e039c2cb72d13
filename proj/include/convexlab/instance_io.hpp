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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/duality.hpp"

namespace convexlab {

/// Catalog tag for the half-plane indicator {x1 >= 0}; loads as a polyhedral
/// function.
inline constexpr std::string_view kHalfplaneIndicator = "halfplane-indicator";

struct FunctionSpec {
  std::string name;
  /// "polyhedral" or "catalog".
  std::string kind;
  std::size_t dim = 0;
  std::optional<std::string> tag;
  /// Epigraph rows over (x, t): a . (x, t) <= b, stored as given.
  std::optional<HRep> epigraph;

  ConvexFn build() const;
};

struct ConstraintSpec {
  /// "subspace" or "cone".
  std::string type;
  /// Subspace spanning vectors.
  std::vector<RVector> generators;
  /// Cone rows a with a . x <= 0.
  std::vector<RVector> rows;
};

struct Query {
  std::string name;
  std::string check;
  std::optional<std::size_t> function;
  std::optional<RVector> x;
  std::optional<RVector> y;
  std::optional<Rational> eps;
  std::optional<Rational> eta;
  std::optional<Rational> k;
  std::vector<RVector> duals;
  /// Expected value per report row key.
  std::map<std::string, std::string> expect;
};

struct InstanceFile {
  int version = 1;
  std::size_t dimension = 0;
  std::vector<FunctionSpec> functions;
  ConstraintSpec constraint;
  std::vector<Query> queries;

  MonotropicInstance instance() const;
};

InstanceFile parse_instance_text(std::string_view text, std::string_view origin = "<input>");
InstanceFile parse_instance(const std::filesystem::path& path);
/// Canonical JSON: sorted keys, two-space indent, rationals as "p/q" strings.
std::string serialize_instance(const InstanceFile& file);

/// "1,-1/2" -> (1, -1/2).
RVector parse_vector(std::string_view csv);

/// Directory holding the shipped instance files; the build tree's data/
/// unless overridden.
std::filesystem::path data_dir();
void set_data_dir(std::filesystem::path dir);

}  // namespace convexlab
