// Copyright 2026 The zetalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "zetalab/cli.hpp"
#include "zetalab/complex.hpp"
#include "zetalab/cycles.hpp"
#include "zetalab/determinant.hpp"
#include "zetalab/transfer.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta.hpp"

namespace py = pybind11;
using namespace zetalab;

namespace {

// (type, level, offset, leg)
using LabelTuple = std::tuple<int, int, int, int>;

EdgeLabel to_label(const LabelTuple& t) {
  const auto [type, level, offset, leg] = t;
  if (leg < 1 || leg > 3) throw py::value_error("leg must be 1, 2 or 3");
  if (level < 0 || offset < 0) throw py::value_error("level and offset must be non-negative");
  return {edge_type_from_int(type), level, offset, leg};
}

LabelTuple to_tuple(const EdgeLabel& e) { return {static_cast<int>(e.type), e.level, e.offset, e.leg}; }

std::optional<Rational> to_q(const std::optional<std::string>& q) {
  if (!q) return std::nullopt;
  return parse_rational(*q);
}

std::vector<std::string> strings(const USeries& s, const std::optional<std::string>& q) {
  return q ? series_strings(specialize(s, parse_rational(*q))) : series_strings(s);
}

RationalFunction zeta_by_name(const std::string& which) {
  if (which == "1") return zeta_type1();
  if (which == "2") return zeta_type2();
  if (which == "full") return zeta_full();
  throw py::value_error("which must be '1', '2' or 'full'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact edge zeta functions of the PGL(3, F_q[t]) quotient complex";

  py::register_exception<Error>(m, "ZetalabError", PyExc_ValueError);

  py::class_<QPoly>(m, "QPoly")
      .def(py::init(&QPoly::parse), py::arg("text"))
      .def("__str__", &QPoly::to_string)
      .def("__repr__", [](const QPoly& p) { return "QPoly('" + p.to_string() + "')"; })
      .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
      .def("__add__", [](const QPoly& a, const QPoly& b) { return a + b; })
      .def("__sub__", [](const QPoly& a, const QPoly& b) { return a - b; })
      .def("__mul__", [](const QPoly& a, const QPoly& b) { return a * b; })
      .def_property_readonly("degree", &QPoly::degree)
      .def("coefficients", [](const QPoly& p) {
        std::vector<std::string> out;
        for (const auto& c : p.coeffs()) out.push_back(c.get_str());
        return out;
      })
      .def("eval", [](const QPoly& p, const std::string& q) { return p.eval(parse_rational(q)).get_str(); },
           py::arg("q"), "Value at q (rational given and returned as a string)");

  m.def("edge_source", [](const LabelTuple& e) {
    const auto v = edge_source(to_label(e));
    return std::make_pair(v.m, v.n);
  });
  m.def("edge_target", [](const LabelTuple& e) {
    const auto v = edge_target(to_label(e));
    return std::make_pair(v.m, v.n);
  });
  m.def("edges_in_region", [](int type, int max_level, int max_offset) {
    std::vector<LabelTuple> out;
    for (const auto& e : edges_in_region(edge_type_from_int(type), Region(max_level, max_offset))) out.push_back(to_tuple(e));
    return out;
  }, py::arg("edge_type"), py::arg("max_level"), py::arg("max_offset"));

  m.def("out_neighbors", [](const LabelTuple& e, std::optional<int> truncation) {
    const TruncationMode mode = truncation ? TruncationMode::truncated(*truncation) : TruncationMode::full();
    std::vector<std::pair<LabelTuple, QPoly>> out;
    for (const auto& a : out_neighbors(to_label(e), mode)) out.emplace_back(to_tuple(a.target), a.weight);
    return out;
  }, py::arg("edge"), py::arg("truncation") = py::none());
  m.def("row_sum", [](const LabelTuple& e) { return row_sum(to_label(e)); });

  m.def("trace_power", [](int type, int power, std::optional<std::string> q) {
    py::gil_scoped_release release;
    const EdgeType t = edge_type_from_int(type);
    if (q) {
      const auto r = trace_power(t, power, parse_rational(*q));
      return std::make_tuple(r.value.get_str(), std::make_pair(r.region.max_level(), r.region.max_offset()));
    }
    const auto r = trace_power(t, power);
    return std::make_tuple(r.value.to_string(), std::make_pair(r.region.max_level(), r.region.max_offset()));
  }, py::arg("edge_type"), py::arg("m"), py::arg("q") = py::none(),
        "Tr(T^m) as a string, with the window (levels, offsets) where it stabilised");

  m.def("enumerate_cycles", [](int type, int n) {
    py::list out;
    for (const auto& c : enumerate_cycles(edge_type_from_int(type), n)) {
      py::dict d;
      std::vector<LabelTuple> edges;
      for (const auto& e : c.edges) edges.push_back(to_tuple(e));
      d["edges"] = edges;
      d["weight"] = c.weight;
      d["primitive_length"] = c.primitive_length;
      out.append(d);
    }
    return out;
  }, py::arg("edge_type"), py::arg("n"));
  m.def("weighted_count", [](int type, int n, std::optional<std::string> q) {
    const EdgeType t = edge_type_from_int(type);
    return q ? weighted_count(t, n, parse_rational(*q)).get_str() : weighted_count(t, n).to_string();
  }, py::arg("edge_type"), py::arg("n"), py::arg("q") = py::none());

  m.def("det_via_alpha", [](int order, std::optional<std::string> q) { return strings(det_via_alpha(order), q); },
        py::arg("order"), py::arg("q") = py::none());
  m.def("det_via_traces", [](int type, int order, std::optional<std::string> q) {
    return strings(det_via_traces(edge_type_from_int(type), order), q);
  }, py::arg("edge_type"), py::arg("order"), py::arg("q") = py::none());
  m.def("det_direct", [](int k, int blocks, int order, const std::string& q) {
    py::gil_scoped_release release;
    return series_strings(det_direct(build_blocks(k), blocks, order, parse_rational(q)));
  }, py::arg("k"), py::arg("blocks"), py::arg("order"), py::arg("q"));

  m.def("zeta_series", [](const std::string& which, int order, std::optional<std::string> q) {
    return strings(zeta_by_name(which).series(order), q);
  }, py::arg("which"), py::arg("order"), py::arg("q") = py::none());
  m.def("zeta_closed_form", [](const std::string& which) { return zeta_by_name(which).s_form(); });
  m.def("counts_from_zeta", [](int order) {
    std::map<int, QPoly> out = counts_from_zeta(order).entries;
    return out;
  });
  m.def("counts_closed_form", &counts_closed_form, py::arg("m"));

  m.def("verify_all", [](int max_m, int order, std::vector<std::string> q_values) {
    VerifyOptions opts;
    opts.max_m = max_m;
    opts.order = order;
    opts.q_values.clear();
    for (const auto& q : q_values) opts.q_values.push_back(parse_rational(q));
    std::vector<std::tuple<std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (const auto& r : verify_all(opts)) out.emplace_back(r.name, r.pass, r.detail);
    }
    return out;
  }, py::arg("max_m") = 9, py::arg("order") = 12, py::arg("q_values") = std::vector<std::string>{"2", "3"});

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
