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

#ifndef EDGECOLOR_GRAPH_HPP_
#define EDGECOLOR_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "edgecolor/types.hpp"

namespace edgecolor {

struct Incidence {
  EdgeId edge;
  Vertex other;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Immutable undirected multigraph. Edge ids are the input order; incidence
// lists are stored in one CSR array.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return endpoints_.size(); }

  const std::pair<Vertex, Vertex>& endpoints(EdgeId e) const { return endpoints_[e]; }
  std::span<const std::pair<Vertex, Vertex>> edges() const { return endpoints_; }

  Vertex other_endpoint(EdgeId e, Vertex v) const {
    const auto& [a, b] = endpoints_[e];
    return a == v ? b : a;
  }

  std::span<const Incidence> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const { return max_degree_; }
  bool is_simple() const { return is_simple_; }

 private:
  friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::vector<std::pair<Vertex, Vertex>> endpoints_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
  std::size_t max_degree_ = 0;
  bool is_simple_ = true;
};

// Throws Error{kVertexOutOfRange, kSelfLoop, kIsolatedVertex}.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

}  // namespace edgecolor

#endif  // EDGECOLOR_GRAPH_HPP_
