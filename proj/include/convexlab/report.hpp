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

#include <string>
#include <vector>

#include "convexlab/instance_io.hpp"

namespace convexlab {

struct ReportRow {
  std::string query;
  /// "pass", "fail" or "info" (no expectation attached).
  std::string verdict;
  std::string value;
  std::string witness;
  std::string certificate;
};

struct Report {
  std::string title;
  std::vector<ReportRow> rows;

  std::size_t count(std::string_view verdict) const;
  bool all_pass() const { return count("fail") == 0; }
  void append(const Report& other);

  std::string markdown() const;
  /// Columns: query, verdict, value, witness, certificate-id (RFC 4180).
  std::string csv() const;
};

/// Evaluates one query against an instance. Checks that do not apply to the
/// instance produce "n/a" info rows.
Report run_query(const InstanceFile& file, const Query& q);
Report run_queries(const InstanceFile& file);

/// Query checks understood by run_query.
const std::vector<std::string>& query_checks();

}  // namespace convexlab
