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

#include <gtest/gtest.h>

#include "convexlab/error.hpp"
#include "convexlab/gallery.hpp"
#include "convexlab/report.hpp"

namespace convexlab {
namespace {

constexpr const char* kMinimal = R"({
  "version": 1,
  "dimension": 1,
  "functions": [{"name": "abs", "kind": "polyhedral", "dim": 1,
                 "epigraph": {"ineqs": [["1", "-1", "0"], ["-1", "-1", "0"]]}}],
  "constraint": {"type": "subspace", "generators": [["1"]]},
  "queries": []
})";

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kMalformedInput;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return s.replace(pos, from.size(), to);
}

TEST(InstanceIo, MinimalLoads) {
  const InstanceFile f = parse_instance_text(kMinimal);
  const MonotropicInstance inst = f.instance();
  EXPECT_EQ(inst.dim(), 1u);
  EXPECT_EQ(inst.blocks()[0].fn.evaluate(RVector{-3}), ExtReal(3));
}

TEST(InstanceIo, DecimalRejected) {
  EXPECT_EQ(code_of(replace(kMinimal, R"(["1", "-1", "0"])", R"(["0.5", "-1", "0"])")), ErrorCode::kParse);
  EXPECT_EQ(code_of(replace(kMinimal, R"(["1", "-1", "0"])", R"([0.5, -1, 0])")), ErrorCode::kParse);
  try {
    parse_instance_text(replace(kMinimal, R"(["-1", "-1", "0"])", R"(["-1", "-1", "1e2"])"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("functions[0].epigraph.ineqs[1][2]"), std::string::npos) << e.what();
  }
}

TEST(InstanceIo, IntegersAccepted) {
  const InstanceFile f = parse_instance_text(replace(kMinimal, R"(["1", "-1", "0"])", "[1, -1, 0]"));
  EXPECT_EQ(f.functions[0].epigraph->ineqs[0].a, (RVector{1, -1}));
}

TEST(InstanceIo, UnknownFieldRejected) {
  try {
    parse_instance_text(replace(kMinimal, R"("queries": [])", R"("queries": [], "extra": 1)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
    EXPECT_NE(std::string(e.what()).find("extra"), std::string::npos);
  }
  EXPECT_EQ(code_of(replace(kMinimal, R"("dim": 1,)", R"("dim": 1, "colour": "red",)")),
            ErrorCode::kMalformedInput);
}

TEST(InstanceIo, DistinctErrorCodes) {
  const std::string catalog = replace(
      replace(kMinimal, R"("kind": "polyhedral")", R"("kind": "catalog", "tag": "no-such-function")"),
      R"(,
                 "epigraph": {"ineqs": [["1", "-1", "0"], ["-1", "-1", "0"]]})",
      "");
  EXPECT_EQ(code_of(catalog), ErrorCode::kUnknownCatalogTag);
  EXPECT_EQ(code_of("{\"version\": 1,"), ErrorCode::kParse);
  // t unbounded below.
  EXPECT_EQ(code_of(replace(kMinimal, R"([["1", "-1", "0"], ["-1", "-1", "0"]])", R"([["1", "0", "1"]])")),
            ErrorCode::kImproperFunction);
  // An equality pinning the height.
  EXPECT_EQ(code_of(replace(kMinimal, R"("ineqs": [["1", "-1", "0"], ["-1", "-1", "0"]])",
                            R"("eqs": [["1", "-1", "0"]])")),
            ErrorCode::kInvariantViolation);
  EXPECT_EQ(code_of(replace(kMinimal, R"("version": 1)", R"("version": 2)")), ErrorCode::kMalformedInput);
  EXPECT_EQ(code_of(replace(kMinimal, R"("dimension": 1)", R"("dimension": 2)")), ErrorCode::kMalformedInput);
  EXPECT_EQ(code_of(replace(kMinimal, R"([["1"]])", R"([["1", "0"]])")), ErrorCode::kMalformedInput);
}

TEST(InstanceIo, ShippedFilesRoundTrip) {
  for (const char* name : {"example33.json", "poly_demo.json", "cone_demo.json", "abs_interval.json"}) {
    const InstanceFile f = parse_instance(data_dir() / name);
    const std::string once = serialize_instance(f);
    const std::string twice = serialize_instance(parse_instance_text(once));
    EXPECT_EQ(once, twice) << name;
  }
}

TEST(InstanceIo, Example33Loads) {
  const MonotropicInstance inst = parse_instance(data_dir() / "example33.json").instance();
  EXPECT_TRUE(inst.is_diagonal());
  EXPECT_TRUE(inst.blocks()[0].fn.has_tag(kParabolaIndicator));
  // x >= 0 half-plane.
  EXPECT_TRUE(inst.blocks()[1].fn.is_polyhedral());
  EXPECT_TRUE(inst.blocks()[1].fn.in_domain(RVector{0, -5}));
  EXPECT_FALSE(inst.blocks()[1].fn.in_domain(RVector{-1, 0}));
}

TEST(InstanceIo, ParseVector) {
  EXPECT_EQ(parse_vector("1,-1/2,0"), (RVector{1, Rational(-1, 2), 0}));
  try {
    parse_vector("1,,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
}

TEST(Report, CsvQuoting) {
  Report r;
  r.rows.push_back({"q.a", "pass", "1/2", "(1,2)", "say \"hi\""});
  EXPECT_EQ(r.csv(), "query,verdict,value,witness,certificate-id\r\nq.a,pass,1/2,\"(1,2)\",\"say \"\"hi\"\"\"\r\n");
}

TEST(Report, MarkdownEscapesPipes) {
  Report r;
  r.title = "t";
  r.rows.push_back({"q", "info", "a|b", "", "c"});
  EXPECT_NE(r.markdown().find("| q | info | a\\|b | - | c |"), std::string::npos);
}

TEST(Report, ExpectationsDecideVerdicts) {
  InstanceFile f = parse_instance_text(kMinimal);
  Query q;
  q.name = "conj";
  q.check = "conjugate";
  q.function = 0;
  q.y = RVector{Rational(1, 2)};
  q.expect["value"] = "0";
  EXPECT_EQ(run_query(f, q).rows.at(0).verdict, "pass");
  q.y = RVector{2};
  const Report r = run_query(f, q);
  EXPECT_EQ(r.rows.at(0).value, "+inf");
  EXPECT_EQ(r.rows.at(0).verdict, "fail");
  q.expect["nonexistent"] = "x";
  EXPECT_EQ(run_query(f, q).count("fail"), 2u);
}

TEST(Report, MissingParameterIsInputError) {
  InstanceFile f = parse_instance_text(kMinimal);
  Query q;
  q.name = "c";
  q.check = "conjugate";
  try {
    run_query(f, q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
}

TEST(Gallery, Example33AllClaimsPass) {
  const Report r = run_gallery("example33");
  std::size_t claims = 0;
  for (const auto& row : r.rows) {
    if (row.query.rfind("claim-", 0) == 0) {
      ++claims;
      EXPECT_EQ(row.verdict, "pass") << row.query << ": " << row.value;
    }
  }
  EXPECT_EQ(claims, 6u);
  EXPECT_TRUE(r.all_pass());
}

TEST(Gallery, SublinearAllFlagsTrue) {
  const Report r = run_gallery("sublinear-demo", 3);
  EXPECT_EQ(r.rows.size(), 40u);
  for (const auto& row : r.rows) {
    EXPECT_EQ(row.verdict, "pass") << row.query << " " << row.value;
  }
}

TEST(Gallery, Deterministic) {
  EXPECT_EQ(run_gallery("cq-matrix", 5).csv(), run_gallery("cq-matrix", 5).csv());
}

TEST(Gallery, UnknownName) {
  try {
    run_gallery("nope");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
}

}  // namespace
}  // namespace convexlab
