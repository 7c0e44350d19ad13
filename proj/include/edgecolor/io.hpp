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

#ifndef EDGECOLOR_IO_HPP_
#define EDGECOLOR_IO_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgecolor/graph.hpp"

namespace edgecolor {

struct EdgeList {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Edge-list text: a header line "ec <n> <m>", then m lines "<u> <v>" with
// 0-based ids. Lines starting with '#' and blank lines are ignored.
// Throws Error{kParseError}.
EdgeList read_edge_list(std::istream& in);
EdgeList read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const EdgeList& list);

// Coloring text: one "<edge-index> <color>" line per edge, colors 1-based.
// Throws Error{kParseError} on malformed or duplicate lines and
// Error{kMissingEdges} if some edge has no line.
std::vector<Color> read_coloring(std::istream& in, std::size_t num_edges);
std::vector<Color> read_coloring_file(const std::string& path, std::size_t num_edges);
void write_coloring(std::ostream& out, std::span<const Color> colors);

}  // namespace edgecolor

#endif  // EDGECOLOR_IO_HPP_
