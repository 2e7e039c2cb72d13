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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "convexlab/report.hpp"

namespace convexlab {

/// A list of functions on one space with sample points in the common domain.
struct CorpusInstance {
  std::string name;
  std::vector<ConvexFn> fns;
  std::vector<RVector> points;
};

/// Seeded all-polyhedral lists: d in 1..3, m in 1..3, at most 6 epigraph
/// facets per function. Sample points are the origin and up to `extra`
/// further points of the common domain.
std::vector<CorpusInstance> polyhedral_corpus(std::uint64_t seed, std::size_t count, std::size_t extra = 2);

/// Diagonal monotropic instance over a single-space list.
MonotropicInstance diagonal_instance(const std::vector<ConvexFn>& fns);

const std::vector<std::string>& gallery_names();
/// Raises MalformedInput for an unknown name.
Report run_gallery(std::string_view name, std::uint64_t seed = 0);

}  // namespace convexlab
