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

#ifndef EDGECOLOR_VERIFY_HPP_
#define EDGECOLOR_VERIFY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "edgecolor/graph.hpp"

namespace edgecolor {

// Two edges at `vertex` sharing `color`.
struct Conflict {
  Vertex vertex;
  Color color;
  EdgeId first;
  EdgeId second;
};

struct ValidationReport {
  bool legal = false;
  std::size_t colors_used = 0;
  std::size_t max_degree = 0;
  std::vector<Conflict> violations;
  std::size_t uncolored = 0;
  std::size_t budget = 0;
  bool within_budget = false;

  // One-line JSON object; lists at most the first 20 conflicts.
  std::string to_text() const;
};

// Checks every vertex for repeated colors. Throws Error{kMissingEdges} if
// `coloring` does not have one entry per edge.
ValidationReport verify_coloring(const Graph& graph, std::span<const Color> coloring, std::size_t budget);

// Exact chromatic index by backtracking. Throws Error{kTooLarge} for more
// than 10 vertices.
std::size_t chromatic_index_oracle(const Graph& graph);

}  // namespace edgecolor

#endif  // EDGECOLOR_VERIFY_HPP_
