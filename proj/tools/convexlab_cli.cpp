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

// convexlab command-line front end.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "convexlab/error.hpp"
#include "convexlab/gallery.hpp"
#include "convexlab/report.hpp"

namespace {

using namespace convexlab;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string instance;
  std::optional<std::size_t> function;
  std::string x, y, eps, eta, k;
  std::string format = "markdown";
  std::string out;
  std::uint64_t seed = 0;
  std::string gallery;
};

Query make_query(const Options& o, const std::string& check) {
  Query q;
  q.name = check;
  q.check = check;
  q.function = o.function;
  if (!o.x.empty()) q.x = parse_vector(o.x);
  if (!o.y.empty()) q.y = parse_vector(o.y);
  if (!o.eps.empty()) q.eps = Rational::parse(o.eps);
  if (!o.eta.empty()) q.eta = Rational::parse(o.eta);
  if (!o.k.empty()) q.k = Rational::parse(o.k);
  return q;
}

int emit(const Report& rep, const Options& o) {
  const std::string text = o.format == "csv" ? rep.csv() : rep.markdown();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return kExitInput;
    }
    f << text;
  }
  return rep.all_pass() ? kExitPass : kExitFail;
}

void instance_flags(CLI::App* sub, Options& o) {
  sub->add_option("--instance", o.instance, "instance file (JSON)")->required();
  sub->add_option("--format", o.format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
  sub->add_option("--out", o.out, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact convex calculus and duality checks"};
  app.require_subcommand(1);
  Options o;

  auto* conj = app.add_subcommand("conjugate", "f_i*(y) for one function of the instance");
  instance_flags(conj, o);
  conj->add_option("--function", o.function, "function index")->required();
  conj->add_option("--y", o.y, "dual point, e.g. 1,-1/2")->required();

  auto* eps = app.add_subcommand("epssub", "eps-subdifferential of one function");
  instance_flags(eps, o);
  eps->add_option("--function", o.function, "function index")->required();
  eps->add_option("--x", o.x, "point")->required();
  eps->add_option("--eps", o.eps, "eps >= 0")->required();
  eps->add_option("--y", o.y, "optional membership test");

  auto* ic = app.add_subcommand("infconv", "infimal convolution of the conjugates at y");
  instance_flags(ic, o);
  ic->add_option("--y", o.y, "dual point")->required();

  auto* sr = app.add_subcommand("sumrule", "subdifferential sum rule at x");
  instance_flags(sr, o);
  sr->add_option("--x", o.x, "point")->required();

  auto* du = app.add_subcommand("duality", "primal and dual values, gap and CQ flags");
  instance_flags(du, o);

  auto* ve = app.add_subcommand("verify", "conditions (i)-(iv) at x; without --x runs the file's queries");
  instance_flags(ve, o);
  ve->add_option("--x", o.x, "point");
  ve->add_option("--eps", o.eps, "eps > 0 (default 1)");
  ve->add_option("--eta", o.eta, "eta > 0 (default 1)");
  ve->add_option("--K", o.k, "closure constant (default 1)");

  auto* ga = app.add_subcommand("gallery", "reproduction runs");
  ga->add_option("name", o.gallery, "example33, polyhedral-demo, sublinear-demo or cq-matrix")
      ->required()
      ->check(CLI::IsMember(gallery_names()));
  ga->add_option("--seed", o.seed, "generator seed for the demos");
  ga->add_option("--format", o.format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));
  ga->add_option("--out", o.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (ga->parsed()) return emit(run_gallery(o.gallery, o.seed), o);
    const InstanceFile file = parse_instance(o.instance);
    if (ve->parsed() && o.x.empty()) {
      Report rep = run_queries(file);
      rep.title = o.instance;
      return emit(rep, o);
    }
    std::string check;
    for (auto* sub : app.get_subcommands()) check = sub->get_name();
    Report rep = run_query(file, make_query(o, check));
    rep.title = check + " " + o.instance;
    return emit(rep, o);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitInput;
  }
}
