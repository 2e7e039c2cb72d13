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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convexlab/error.hpp"
#include "convexlab/gallery.hpp"
#include "convexlab/report.hpp"
#include "convexlab/subdiff.hpp"

namespace py = pybind11;
using namespace convexlab;

namespace {

Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) {
    throw Error(ErrorCode::kParse, "exact rational required, got float " + py::str(h).cast<std::string>());
  }
  return Rational::parse(py::str(h).cast<std::string>());
}

RVector to_vector(const py::handle& h) {
  std::vector<Rational> out;
  for (const auto& item : h) out.push_back(to_rational(item));
  return RVector(std::move(out));
}

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.str());
}

py::object ext(const ExtReal& x) {
  if (x.is_plus_infinity()) return py::float_(std::numeric_limits<double>::infinity());
  if (x.is_minus_infinity()) return py::float_(-std::numeric_limits<double>::infinity());
  return fraction(x.value());
}

py::list fractions(const RVector& v) {
  py::list out;
  for (std::size_t i = 0; i < v.dim(); ++i) out.append(fraction(v[i]));
  return out;
}

py::object maybe_vector(const std::optional<RVector>& v) {
  return v ? py::object(fractions(*v)) : py::object(py::none());
}

std::vector<ConvexFn> fn_list(const py::iterable& fs) {
  std::vector<ConvexFn> out;
  for (const auto& f : fs) out.push_back(f.cast<ConvexFn>());
  return out;
}

Polyhedron box(const py::iterable& lo, const py::iterable& hi) { return Polyhedron::box(to_vector(lo), to_vector(hi)); }

Polyhedron hull(const py::iterable& points) {
  VRep v;
  for (const auto& p : points) v.vertices.push_back(to_vector(p));
  if (v.vertices.empty()) throw Error(ErrorCode::kMalformedInput, "hull of no points");
  v.dim = v.vertices.front().dim();
  return Polyhedron::from_vrep(std::move(v));
}

py::dict gap_dict(const GapReport& g) {
  py::dict cq;
  for (const auto& [name, d] : g.cq) {
    cq[py::str(name)] = py::dict(py::arg("holds") = d.holds ? py::object(py::bool_(*d.holds)) : py::object(py::none()),
                                 py::arg("witness") = d.witness, py::arg("detail") = d.detail);
  }
  return py::dict(py::arg("feasible") = g.feasible, py::arg("primal") = ext(g.primal_value),
                  py::arg("dual") = ext(g.dual_value), py::arg("gap") = ext(g.gap),
                  py::arg("primal_attained") = g.primal_attained, py::arg("dual_attained") = g.dual_attained,
                  py::arg("primal_witness") = maybe_vector(g.primal_witness),
                  py::arg("dual_witness") = maybe_vector(g.dual_witness), py::arg("cq") = cq);
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") return r.csv();
  if (format == "markdown") return r.markdown();
  throw Error(ErrorCode::kMalformedInput, "format must be markdown or csv");
}

}  // namespace

PYBIND11_MODULE(_convexlab, m) {
  m.doc() = "Exact convex calculus and monotropic duality";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] {
    return py::object(py::reinterpret_steal<py::object>(
        PyErr_NewException("convexlab.ConvexlabError", PyExc_ValueError, nullptr)));
  });
  m.attr("ConvexlabError") = error_type.get_stored();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = error_type.get_stored();
      py::object exc = type(py::str(e.what()));
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Region>(m, "Region")
      .def("contains", [](const Region& r, const py::iterable& y) { return r.contains(to_vector(y)); })
      .def("is_closed", &Region::is_closed)
      .def("is_empty", &Region::is_empty)
      .def("is_polyhedral", &Region::is_polyhedral)
      .def("equals", &Region::equals)
      .def("describe", &Region::describe)
      .def("__repr__", [](const Region& r) { return "<Region " + r.describe() + ">"; });

  py::class_<ConvexFn>(m, "Function")
      .def_static(
          "max_affine",
          [](const py::iterable& slopes, const py::iterable& offsets) {
            std::vector<RVector> s;
            std::vector<Rational> o;
            for (const auto& v : slopes) s.push_back(to_vector(v));
            for (const auto& v : offsets) o.push_back(to_rational(v));
            return ConvexFn(PolyhedralFn::max_affine(s, o));
          },
          py::arg("slopes"), py::arg("offsets"), "max_k <a_k, x> + b_k on the whole space")
      .def_static(
          "box_indicator", [](const py::iterable& lo, const py::iterable& hi) { return ConvexFn(PolyhedralFn::indicator(box(lo, hi))); },
          py::arg("lo"), py::arg("hi"))
      .def_static(
          "support", [](const py::iterable& points) { return ConvexFn(PolyhedralFn::support(hull(points))); },
          py::arg("points"), "support function of the convex hull of the points")
      .def_static("catalog", [](const std::string& tag) { return ConvexFn::catalog(tag); }, py::arg("tag"))
      .def_property_readonly("dim", &ConvexFn::dim)
      .def_property_readonly("is_polyhedral", &ConvexFn::is_polyhedral)
      .def("__call__", [](const ConvexFn& f, const py::iterable& x) { return ext(f.evaluate(to_vector(x))); })
      .def("conjugate", [](const ConvexFn& f) { return conjugate(f); })
      .def(
          "eps_subdiff",
          [](const ConvexFn& f, const py::iterable& x, const py::object& eps) {
            return eps_subdiff(f, to_vector(x), to_rational(eps));
          },
          py::arg("x"), py::arg("eps"))
      .def("subdiff", [](const ConvexFn& f, const py::iterable& x) { return subdiff(f, to_vector(x)); })
      .def("__repr__", [](const ConvexFn& f) { return "<Function " + f.describe() + ">"; });

  m.def("conjugate", [](const ConvexFn& f) { return conjugate(f); });
  m.def("fn_sum", [](const py::iterable& fs) { return fn_sum(fn_list(fs)); });
  m.def(
      "inf_conv_value",
      [](const py::iterable& gs, const py::iterable& y) {
        const InfConvResult r = inf_conv_value(fn_list(gs), to_vector(y));
        py::object split = py::none();
        if (r.witness) {
          py::list parts;
          for (const auto& p : *r.witness) parts.append(fractions(p));
          split = parts;
        }
        return py::dict(py::arg("value") = ext(r.value), py::arg("attained") = r.attained,
                        py::arg("split") = split, py::arg("certificate") = r.certificate);
      },
      py::arg("functions"), py::arg("y"));
  m.def(
      "sum_eps_subdiffs",
      [](const py::iterable& fs, const py::iterable& x, const py::object& eps) {
        return sum_eps_subdiffs(fn_list(fs), to_vector(x), to_rational(eps));
      },
      py::arg("functions"), py::arg("x"), py::arg("eps"));
  m.def(
      "sum_rule_check",
      [](const py::iterable& fs, const py::iterable& x) {
        const SumRuleResult r = sum_rule_check(fn_list(fs), to_vector(x));
        return py::dict(py::arg("holds") = r.holds, py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs,
                        py::arg("witness") = maybe_vector(r.witness));
      },
      py::arg("functions"), py::arg("x"));
  m.def(
      "condition_i_check",
      [](const py::iterable& fs, const py::iterable& x, const py::object& eps, const py::object& k) {
        const CheckResult r = condition_i_check(fn_list(fs), to_vector(x), to_rational(eps), to_rational(k));
        return py::make_tuple(r.holds, maybe_vector(r.witness));
      },
      py::arg("functions"), py::arg("x"), py::arg("eps"), py::arg("K") = 1);

  py::class_<InstanceFile>(m, "Instance")
      .def_property_readonly("dimension", [](const InstanceFile& f) { return f.dimension; })
      .def_property_readonly("names",
                             [](const InstanceFile& f) {
                               std::vector<std::string> out;
                               for (const auto& fn : f.functions) out.push_back(fn.name);
                               return out;
                             })
      .def("function", [](const InstanceFile& f, std::size_t i) { return f.instance().blocks().at(i).fn; })
      .def("gap_report", [](const InstanceFile& f) { return gap_dict(gap_report(f.instance())); })
      .def(
          "run_queries",
          [](const InstanceFile& f, const std::string& format) {
            const Report r = run_queries(f);
            return py::make_tuple(render(r, format), r.all_pass());
          },
          py::arg("format") = "markdown")
      .def("to_json", &serialize_instance);

  m.def("load_instance", [](const std::string& path) { return parse_instance(path); }, py::arg("path"));
  m.def("loads_instance", [](const std::string& text) { return parse_instance_text(text); }, py::arg("text"));
  m.def("gallery_names", &gallery_names);
  m.def(
      "run_gallery",
      [](const std::string& name, std::uint64_t seed, const std::string& format) {
        const Report r = run_gallery(name, seed);
        return py::make_tuple(render(r, format), r.all_pass());
      },
      py::arg("name"), py::arg("seed") = 0, py::arg("format") = "markdown");
  m.def("set_data_dir", [](const std::string& dir) { set_data_dir(dir); });
}
