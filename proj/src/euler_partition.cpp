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

#include "edgecolor/euler_partition.hpp"

#include <algorithm>
#include <utility>

namespace edgecolor {
namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

struct Tour {
  std::uint32_t begin;  // into the flat step arrays
  std::uint32_t length;
  bool closed;
};

}  // namespace

Partition euler_partition(const Graph& graph, std::span<const EdgeId> scope) {
  PartitionWorkspace workspace(graph.num_vertices());
  return euler_partition(graph, scope, workspace);
}

Partition euler_partition(const Graph& graph, std::span<const EdgeId> scope, PartitionWorkspace& ws) {
  Partition result;
  const std::uint32_t m = static_cast<std::uint32_t>(scope.size());
  if (m == 0) return result;

  // Local vertex ids in ascending global order.
  const std::uint32_t gen = ++ws.generation_;
  std::vector<Vertex> verts;
  verts.reserve(std::min<std::size_t>(2 * m, graph.num_vertices()));
  for (const EdgeId e : scope) {
    const auto [u, v] = graph.endpoints(e);
    for (const Vertex x : {u, v}) {
      if (ws.stamp_[x] != gen) {
        ws.stamp_[x] = gen;
        verts.push_back(x);
      }
    }
  }
  std::sort(verts.begin(), verts.end());
  const std::uint32_t nv = static_cast<std::uint32_t>(verts.size());
  for (std::uint32_t i = 0; i < nv; ++i) ws.local_id_[verts[i]] = i;

  // Local CSR: for each local vertex, (scope index, other local vertex).
  std::vector<std::uint32_t> degree(nv, 0);
  for (const EdgeId e : scope) {
    const auto [u, v] = graph.endpoints(e);
    ++degree[ws.local_id_[u]];
    ++degree[ws.local_id_[v]];
  }
  std::vector<std::uint32_t> offset(nv + 1, 0);
  for (std::uint32_t i = 0; i < nv; ++i) offset[i + 1] = offset[i] + degree[i];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> adj(offset[nv]);
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto [u, v] = graph.endpoints(scope[i]);
    const std::uint32_t a = ws.local_id_[u];
    const std::uint32_t b = ws.local_id_[v];
    adj[cursor[a]++] = {i, b};
    adj[cursor[b]++] = {i, a};
  }
  std::copy(offset.begin(), offset.end() - 1, cursor.begin());

  std::vector<std::uint32_t> remaining(degree);
  std::vector<std::uint8_t> used(m, 0);
  std::vector<std::uint32_t> step_edge;    // scope index of each tour step
  std::vector<std::uint32_t> step_vertex;  // local vertex the step leaves from
  step_edge.reserve(m);
  step_vertex.reserve(m);
  std::vector<Tour> tours;

  auto walk = [&](std::uint32_t start, bool closed) {
    Tour tour{static_cast<std::uint32_t>(step_edge.size()), 0, closed};
    std::uint32_t x = start;
    for (;;) {
      std::uint32_t& c = cursor[x];
      while (c < offset[x + 1] && used[adj[c].first]) ++c;
      if (c == offset[x + 1]) break;
      const auto [idx, y] = adj[c];
      used[idx] = 1;
      --remaining[x];
      --remaining[y];
      step_edge.push_back(idx);
      step_vertex.push_back(x);
      x = y;
    }
    tour.length = static_cast<std::uint32_t>(step_edge.size()) - tour.begin;
    tours.push_back(tour);
  };

  // Open tours join the odd-degree vertices in pairs; what is left is even
  // everywhere and decomposes into closed tours.
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (remaining[v] % 2 == 1) walk(v, false);
  }
  for (std::uint32_t v = 0; v < nv; ++v) {
    if (remaining[v] > 0) walk(v, true);
  }

  // An odd closed tour puts its first and last edge on the same side of its
  // start vertex. Rotate it to start at a vertex of minimum degree so the
  // surplus lands where it cannot raise the maximum degree.
  std::vector<std::uint32_t> rotated_edge;
  std::vector<std::uint32_t> tour_start(tours.size(), kNone);
  for (std::size_t t = 0; t < tours.size(); ++t) {
    Tour& tour = tours[t];
    if (!tour.closed) {
      ++result.open_tours;
      continue;
    }
    ++result.closed_tours;
    if (tour.length % 2 == 0) continue;
    ++result.odd_closed_tours;
    std::uint32_t best = 0;
    for (std::uint32_t p = 1; p < tour.length; ++p) {
      const std::uint32_t cand = step_vertex[tour.begin + p];
      const std::uint32_t cur = step_vertex[tour.begin + best];
      if (degree[cand] < degree[cur] || (degree[cand] == degree[cur] && cand < cur)) best = p;
    }
    if (best != 0) {
      rotated_edge.assign(step_edge.begin() + tour.begin, step_edge.begin() + tour.begin + tour.length);
      std::rotate(rotated_edge.begin(), rotated_edge.begin() + best, rotated_edge.end());
      std::copy(rotated_edge.begin(), rotated_edge.end(), step_edge.begin() + tour.begin);
      // step_vertex is only consulted for the start from here on.
      step_vertex[tour.begin] = step_vertex[tour.begin + best];
    }
    tour_start[t] = step_vertex[tour.begin];
  }

  // Sides: +1 puts the first edge of a tour on the left. Odd closed tours at
  // the same start vertex are paired with opposite signs; every other
  // odd-length tour takes a globally alternating sign so the halves differ by
  // at most one edge.
  std::vector<int> sign(tours.size(), 1);
  std::vector<std::uint32_t> pending(nv, kNone);
  std::vector<std::uint8_t> paired(tours.size(), 0);
  for (std::size_t t = 0; t < tours.size(); ++t) {
    if (tour_start[t] == kNone) continue;
    std::uint32_t& slot = pending[tour_start[t]];
    if (slot == kNone) {
      slot = static_cast<std::uint32_t>(t);
    } else {
      paired[slot] = paired[t] = 1;
      sign[slot] = 1;
      sign[t] = -1;
      slot = kNone;
    }
  }
  int next_sign = 1;
  for (std::size_t t = 0; t < tours.size(); ++t) {
    if (tours[t].length % 2 == 0 || paired[t]) continue;
    if (tour_start[t] != kNone) ++result.unpaired_odd_closed_tours;
    sign[t] = next_sign;
    next_sign = -next_sign;
  }

  result.left.reserve((m + 1) / 2);
  result.right.reserve(m / 2);
  for (std::size_t t = 0; t < tours.size(); ++t) {
    const Tour& tour = tours[t];
    for (std::uint32_t p = 0; p < tour.length; ++p) {
      const bool left = (p % 2 == 0) == (sign[t] > 0);
      (left ? result.left : result.right).push_back(scope[step_edge[tour.begin + p]]);
    }
  }
  return result;
}

}  // namespace edgecolor
