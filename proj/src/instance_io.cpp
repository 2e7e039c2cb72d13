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

#include "convexlab/instance_io.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "convexlab/error.hpp"

namespace convexlab {

namespace {

using nlohmann::json;

constexpr int kVersion = 1;

// Cursor into the document that remembers its JSON path for diagnostics.
struct Node {
  const json& value;
  std::string path;

  Node at(std::string_view key) const {
    const auto it = value.find(std::string(key));
    if (it == value.end()) fail(ErrorCode::kMalformedInput, path + ": missing field \"" + std::string(key) + "\"");
    return {*it, path + "." + std::string(key)};
  }
  std::optional<Node> maybe(std::string_view key) const {
    const auto it = value.find(std::string(key));
    if (it == value.end()) return std::nullopt;
    return Node{*it, path + "." + std::string(key)};
  }
  Node operator[](std::size_t i) const { return {value[i], path + "[" + std::to_string(i) + "]"}; }

  [[noreturn]] void bad(const std::string& what, ErrorCode code = ErrorCode::kMalformedInput) const {
    fail(code, path + ": " + what);
  }
  void expect_object(std::initializer_list<std::string_view> allowed) const {
    if (!value.is_object()) bad("expected an object");
    const std::set<std::string_view> ok(allowed);
    for (const auto& [key, _] : value.items()) {
      if (!ok.count(key)) bad("unknown field \"" + key + "\"");
    }
  }
  const json& array() const {
    if (!value.is_array()) bad("expected an array");
    return value;
  }
  std::string string() const {
    if (!value.is_string()) bad("expected a string");
    return value.get<std::string>();
  }
  Rational rational() const {
    if (value.is_number_integer()) return Rational(value.get<long>());
    if (value.is_number()) bad("exact rational required (\"p/q\"), got a decimal number", ErrorCode::kParse);
    if (!value.is_string()) bad("expected a rational string");
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const Error& e) {
      bad(e.what(), e.code());
    }
  }
  std::size_t count() const {
    if (!value.is_number_unsigned()) bad("expected a non-negative integer");
    return value.get<std::size_t>();
  }
  RVector vector() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < array().size(); ++i) out.push_back((*this)[i].rational());
    return RVector(std::move(out));
  }
  std::vector<RVector> vectors(std::size_t dim) const {
    std::vector<RVector> out;
    for (std::size_t i = 0; i < array().size(); ++i) {
      out.push_back((*this)[i].vector());
      if (out.back().dim() != dim) {
        (*this)[i].bad("expected " + std::to_string(dim) + " entries, got " + std::to_string(out.back().dim()));
      }
    }
    return out;
  }
};

FunctionSpec parse_function(const Node& n) {
  n.expect_object({"name", "kind", "dim", "tag", "epigraph"});
  FunctionSpec f;
  f.name = n.at("name").string();
  f.kind = n.at("kind").string();
  f.dim = n.at("dim").count();
  if (f.dim == 0) n.at("dim").bad("dimension must be positive");
  if (f.kind == "catalog") {
    if (n.maybe("epigraph")) n.bad("catalog function with an epigraph");
    f.tag = n.at("tag").string();
  } else if (f.kind == "polyhedral") {
    if (n.maybe("tag")) n.bad("polyhedral function with a tag");
    const Node e = n.at("epigraph");
    e.expect_object({"ineqs", "eqs"});
    HRep h{f.dim + 1, {}, {}};
    if (auto rows = e.maybe("ineqs")) {
      for (const auto& r : rows->vectors(f.dim + 2)) h.ineqs.push_back({r.slice(0, f.dim + 1), r[f.dim + 1]});
    }
    if (auto rows = e.maybe("eqs")) {
      for (const auto& r : rows->vectors(f.dim + 2)) h.eqs.push_back({r.slice(0, f.dim + 1), r[f.dim + 1]});
    }
    f.epigraph = std::move(h);
  } else {
    n.at("kind").bad("kind must be \"polyhedral\" or \"catalog\"");
  }
  try {
    (void)f.build();
  } catch (const Error& e) {
    n.bad(e.what(), e.code());
  }
  return f;
}

Query parse_query(const Node& n) {
  n.expect_object({"name", "check", "function", "x", "y", "eps", "eta", "K", "duals", "expect"});
  Query q;
  q.name = n.at("name").string();
  q.check = n.at("check").string();
  if (auto v = n.maybe("function")) q.function = v->count();
  if (auto v = n.maybe("x")) q.x = v->vector();
  if (auto v = n.maybe("y")) q.y = v->vector();
  if (auto v = n.maybe("eps")) q.eps = v->rational();
  if (auto v = n.maybe("eta")) q.eta = v->rational();
  if (auto v = n.maybe("K")) q.k = v->rational();
  if (auto v = n.maybe("duals")) {
    for (std::size_t i = 0; i < v->array().size(); ++i) q.duals.push_back((*v)[i].vector());
  }
  if (auto v = n.maybe("expect")) {
    if (!v->value.is_object()) v->bad("expected an object");
    for (const auto& [key, val] : v->value.items()) q.expect[key] = Node{val, v->path + "." + key}.string();
  }
  return q;
}

json rational_json(const Rational& r) { return r.str(); }

json vector_json(const RVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(rational_json(v[i]));
  return out;
}

template <typename Row>
json rows_json(const std::vector<Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(vector_json(r.a.concat(RVector{r.b})));
  return out;
}

}  // namespace

ConvexFn FunctionSpec::build() const {
  if (kind == "polyhedral") {
    const PolyhedralFn f = PolyhedralFn::from_epigraph(Polyhedron::from_hrep(*epigraph));
    return f;
  }
  if (*tag == kHalfplaneIndicator) {
    require(dim == 2, ErrorCode::kMalformedInput, "halfplane-indicator lives on R^2");
    return PolyhedralFn::indicator(Polyhedron::from_hrep(HRep{2, {{RVector{-1, 0}, 0}}, {}}));
  }
  ConvexFn f = ConvexFn::catalog(*tag);
  require(f.dim() == dim, ErrorCode::kMalformedInput,
          "catalog function " + *tag + " has dimension " + std::to_string(f.dim()));
  return f;
}

MonotropicInstance InstanceFile::instance() const {
  std::vector<Block> blocks;
  for (const auto& f : functions) blocks.push_back({f.name, f.build()});
  if (constraint.type == "subspace") {
    return MonotropicInstance(std::move(blocks), SubspaceConstraint{constraint.generators});
  }
  HRep h{dimension, {}, {}};
  for (const auto& r : constraint.rows) h.ineqs.push_back({r, Rational(0)});
  return MonotropicInstance(std::move(blocks), ConeConstraint{Polyhedron::from_hrep(std::move(h))});
}

InstanceFile parse_instance_text(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string(origin) + ": " + e.what());
  }
  const Node root{doc, std::string(origin)};
  root.expect_object({"version", "dimension", "functions", "constraint", "queries"});
  InstanceFile out;
  const Node version = root.at("version");
  if (!version.value.is_number_integer() || version.value.get<int>() != kVersion) {
    version.bad("unsupported version (expected " + std::to_string(kVersion) + ")");
  }
  out.dimension = root.at("dimension").count();
  const Node fns = root.at("functions");
  if (fns.array().empty()) fns.bad("at least one function required");
  std::size_t total = 0;
  for (std::size_t i = 0; i < fns.array().size(); ++i) {
    out.functions.push_back(parse_function(fns[i]));
    total += out.functions.back().dim;
  }
  if (total != out.dimension) {
    root.at("dimension").bad("product dimension is " + std::to_string(total));
  }
  const Node c = root.at("constraint");
  c.expect_object({"type", "generators", "rows"});
  out.constraint.type = c.at("type").string();
  if (out.constraint.type == "subspace") {
    if (c.maybe("rows")) c.bad("subspace constraint takes generators");
    out.constraint.generators = c.at("generators").vectors(out.dimension);
  } else if (out.constraint.type == "cone") {
    if (c.maybe("generators")) c.bad("cone constraint takes rows");
    out.constraint.rows = c.at("rows").vectors(out.dimension);
  } else {
    c.at("type").bad("type must be \"subspace\" or \"cone\"");
  }
  if (auto qs = root.maybe("queries")) {
    for (std::size_t i = 0; i < qs->array().size(); ++i) out.queries.push_back(parse_query((*qs)[i]));
  }
  try {
    (void)out.instance();
  } catch (const Error& e) {
    fail(e.code(), std::string(origin) + ": " + e.what());
  }
  return out;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::kMalformedInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path.string());
}

std::string serialize_instance(const InstanceFile& file) {
  json doc;
  doc["version"] = file.version;
  doc["dimension"] = file.dimension;
  doc["functions"] = json::array();
  for (const auto& f : file.functions) {
    json j{{"name", f.name}, {"kind", f.kind}, {"dim", f.dim}};
    if (f.tag) j["tag"] = *f.tag;
    if (f.epigraph) j["epigraph"] = {{"ineqs", rows_json(f.epigraph->ineqs)}, {"eqs", rows_json(f.epigraph->eqs)}};
    doc["functions"].push_back(std::move(j));
  }
  json c{{"type", file.constraint.type}};
  auto list = [](const std::vector<RVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(vector_json(v));
    return out;
  };
  if (file.constraint.type == "subspace") {
    c["generators"] = list(file.constraint.generators);
  } else {
    c["rows"] = list(file.constraint.rows);
  }
  doc["constraint"] = std::move(c);
  doc["queries"] = json::array();
  for (const auto& q : file.queries) {
    json j{{"name", q.name}, {"check", q.check}};
    if (q.function) j["function"] = *q.function;
    if (q.x) j["x"] = vector_json(*q.x);
    if (q.y) j["y"] = vector_json(*q.y);
    if (q.eps) j["eps"] = rational_json(*q.eps);
    if (q.eta) j["eta"] = rational_json(*q.eta);
    if (q.k) j["K"] = rational_json(*q.k);
    if (!q.duals.empty()) j["duals"] = list(q.duals);
    if (!q.expect.empty()) j["expect"] = q.expect;
    doc["queries"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

RVector parse_vector(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    out.push_back(Rational::parse(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return RVector(std::move(out));
}

namespace {
std::mutex data_dir_mu;
std::filesystem::path& data_dir_slot() {
  static std::filesystem::path dir = CONVEXLAB_DATA_DIR;
  return dir;
}
}  // namespace

std::filesystem::path data_dir() {
  std::lock_guard lock(data_dir_mu);
  return data_dir_slot();
}

void set_data_dir(std::filesystem::path dir) {
  std::lock_guard lock(data_dir_mu);
  data_dir_slot() = std::move(dir);
}

}  // namespace convexlab
