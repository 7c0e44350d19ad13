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

#include "edgecolor/graph.hpp"

#include <algorithm>
#include <string>

namespace edgecolor {

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.endpoints_.assign(edges.begin(), edges.end());
  g.offsets_.assign(n + 1, 0);

  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge " + std::to_string(e) + " has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) {
      throw Error(ErrorCode::kSelfLoop, "edge " + std::to_string(e) + " is a self-loop at " + std::to_string(u));
    }
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (g.offsets_[v + 1] == 0) {
      throw Error(ErrorCode::kIsolatedVertex, "vertex " + std::to_string(v) + " has no incident edge");
    }
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }

  g.incidence_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    g.incidence_[cursor[u]++] = {static_cast<EdgeId>(e), v};
    g.incidence_[cursor[v]++] = {static_cast<EdgeId>(e), u};
  }

  // Parallel edges: a repeated neighbour inside one incidence list.
  std::vector<EdgeId> last_seen(n, kAbsent);
  for (std::size_t v = 0; v < n && g.is_simple_; ++v) {
    for (const Incidence& inc : g.incident(static_cast<Vertex>(v))) {
      if (last_seen[inc.other] == v) {
        g.is_simple_ = false;
        break;
      }
      last_seen[inc.other] = static_cast<EdgeId>(v);
    }
  }
  return g;
}

}  // namespace edgecolor
