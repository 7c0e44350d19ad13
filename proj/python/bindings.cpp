// Copyright 2026 The edgecolor Authors
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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgecolor/drivers.hpp"
#include "edgecolor/generators.hpp"
#include "edgecolor/graph.hpp"
#include "edgecolor/types.hpp"
#include "edgecolor/verify.hpp"

namespace py = pybind11;

namespace edgecolor {
namespace {

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

py::dict color_edges(std::size_t n, const EdgePairs& edges, const std::string& algorithm, std::uint64_t seed) {
  const auto algo = ParseAlgorithm(algorithm);
  if (!algo) throw py::value_error("unknown algorithm '" + algorithm + "'");
  const Graph g = build_graph(n, edges);
  ColorOptions opt;
  opt.seed = seed;
  ColoringResult r;
  {
    py::gil_scoped_release release;
    r = color_graph(g, *algo, opt);
  }
  py::dict out;
  out["colors"] = r.colors;
  out["colors_used"] = r.colors_used;
  out["palette"] = r.palette;
  out["max_degree"] = g.max_degree();
  out["color_many_calls"] = r.stats.color_many_calls;
  out["flip_count"] = r.stats.flip_count;
  return out;
}

py::dict verify_edges(std::size_t n, const EdgePairs& edges, const std::vector<Color>& colors, std::int64_t budget) {
  const Graph g = build_graph(n, edges);
  const std::size_t b = budget < 0 ? g.max_degree() + 1 : static_cast<std::size_t>(budget);
  const ValidationReport rep = verify_coloring(g, colors, b);
  py::dict out;
  out["legal"] = rep.legal;
  out["colors_used"] = rep.colors_used;
  out["max_degree"] = rep.max_degree;
  out["uncolored"] = rep.uncolored;
  out["budget"] = rep.budget;
  out["within_budget"] = rep.within_budget;
  py::list conflicts;
  for (const Conflict& c : rep.violations) conflicts.append(py::make_tuple(c.vertex, c.color, c.first, c.second));
  out["conflicts"] = conflicts;
  return out;
}

}  // namespace
}  // namespace edgecolor

PYBIND11_MODULE(_core, m) {
  using namespace edgecolor;
  m.doc() = "Edge coloring with d+1 and 2d-1 colors.";

  py::register_exception<Error>(m, "EdgeColorError", PyExc_ValueError);

  m.def("families", [] {
    std::vector<std::string> out;
    for (const auto f : generator_families()) out.emplace_back(f);
    return out;
  });
  m.def(
      "generate",
      [](const std::string& family, std::size_t n, std::size_t edges, std::size_t degree, std::uint64_t seed) {
        GeneratorParams p;
        p.family = family;
        p.n = n;
        p.m = edges;
        p.degree = degree;
        p.seed = seed;
        const EdgeList list = generate(p);
        return py::make_tuple(list.n, list.edges);
      },
      py::arg("family"), py::arg("n"), py::arg("m") = 0, py::arg("degree") = 0, py::arg("seed") = 0,
      "Returns (n, edges) for a generator family.");
  m.def("color", &color_edges, py::arg("n"), py::arg("edges"), py::arg("algorithm") = "euler", py::arg("seed") = 0,
        "Colors the edges; returns a dict with colors[i] for edges[i].");
  m.def("verify", &verify_edges, py::arg("n"), py::arg("edges"), py::arg("colors"), py::arg("budget") = -1,
        "Checks a coloring; budget defaults to max degree + 1.");
  m.def(
      "chromatic_index",
      [](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        return chromatic_index_oracle(build_graph(n, edges));
      },
      py::arg("n"), py::arg("edges"), "Exact chromatic index for graphs with at most 10 vertices.");
}
