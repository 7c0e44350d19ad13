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

#include "edgecolor/coloring_state.hpp"

#include <string>

namespace edgecolor {

ColoringState::ColoringState(const Graph& graph)
    : graph_(&graph),
      dict_(graph.num_vertices(), graph.max_degree(), graph.num_edges()),
      color_(graph.num_edges(), kUncolored),
      scope_gen_(graph.num_edges(), 0),
      pool_pos_(graph.num_edges(), kNil),
      touched_gen_(graph.num_vertices(), 0),
      scope_degree_(graph.num_vertices(), 0),
      incidence_offset_(graph.num_vertices(), 0),
      tracker_offset_(graph.num_vertices(), 0),
      tracker_head_(graph.num_vertices(), kNil),
      tracker_tail_(graph.num_vertices(), kNil),
      mark_stamp_(graph.num_vertices(), 0) {}

void ColoringState::throw_color_range(Color c) const {
  throw Error(ErrorCode::kColorOutOfRange,
              "color " + std::to_string(c) + " outside palette [1," + std::to_string(palette_) + "]");
}

void ColoringState::check_scoped(EdgeId e) const {
  if (e >= color_.size() || !in_scope(e)) {
    throw Error(ErrorCode::kEdgeNotInScope, "edge " + std::to_string(e) + " is not in the bound scope");
  }
}

void ColoringState::bind_scope(std::span<const EdgeId> edges, std::size_t palette) {
  if (bound_) throw Error(ErrorCode::kScopeNotEmpty, "a scope is already bound");
  if (palette == 0 || palette > dict_.max_color()) {
    throw Error(ErrorCode::kColorOutOfRange,
                "palette " + std::to_string(palette) + " exceeds the dictionary range " +
                    std::to_string(dict_.max_color()));
  }
  ++generation_;
  palette_ = palette;
  scope_.assign(edges.begin(), edges.end());
  touched_.clear();
  pool_.clear();

  for (const EdgeId e : scope_) {
    if (e >= color_.size()) throw Error(ErrorCode::kEdgeNotInScope, "edge " + std::to_string(e) + " out of range");
    if (color_[e] > palette_) throw_color_range(color_[e]);
    scope_gen_[e] = generation_;
    const auto [u, v] = graph_->endpoints(e);
    for (const Vertex x : {u, v}) {
      if (touched_gen_[x] != generation_) {
        touched_gen_[x] = generation_;
        scope_degree_[x] = 0;
        touched_.push_back(x);
      }
      ++scope_degree_[x];
    }
  }

  std::uint32_t incidence_total = 0;
  std::uint32_t node_total = 0;
  for (const Vertex x : touched_) {
    incidence_offset_[x] = incidence_total;
    tracker_offset_[x] = node_total;
    incidence_total += scope_degree_[x];
    node_total += tracker_size(x);
  }
  scoped_incidence_.resize(incidence_total);
  node_prev_.resize(node_total);
  node_next_.resize(node_total);
  node_linked_.assign(node_total, 1);

  // Reuse scope_degree_ as a fill cursor, then restore it.
  for (const Vertex x : touched_) scope_degree_[x] = 0;
  for (const EdgeId e : scope_) {
    const auto [u, v] = graph_->endpoints(e);
    scoped_incidence_[incidence_offset_[u] + scope_degree_[u]++] = {e, v};
    scoped_incidence_[incidence_offset_[v] + scope_degree_[v]++] = {e, u};
  }

  for (const Vertex x : touched_) {
    const std::uint32_t first = tracker_offset_[x];
    const std::uint32_t last = first + tracker_size(x) - 1;
    for (std::uint32_t node = first; node <= last; ++node) {
      node_prev_[node] = node == first ? kNil : node - 1;
      node_next_[node] = node == last ? kNil : node + 1;
    }
    tracker_head_[x] = first;
    tracker_tail_[x] = last;
  }

  bound_ = true;
  for (std::size_t i = 0; i < scope_.size(); ++i) {
    const EdgeId e = scope_[i];
    const Color c = color_[e];
    if (c == kUncolored) {
      pool_push(e);
      continue;
    }
    const auto [u, v] = graph_->endpoints(e);
    if (dict_.search(u, c) != kAbsent || dict_.search(v, c) != kAbsent) {
      for (std::size_t j = 0; j < i; ++j) {
        const EdgeId f = scope_[j];
        if (color_[f] == kUncolored) continue;
        const auto [a, b] = graph_->endpoints(f);
        dict_.erase(a, color_[f]);
        dict_.erase(b, color_[f]);
      }
      bound_ = false;
      pool_.clear();
      throw Error(ErrorCode::kColorConflict, "pre-colored scope is not a legal coloring at edge " + std::to_string(e));
    }
    dict_.insert(u, c, e);
    dict_.insert(v, c, e);
    tracker_remove(u, c);
    tracker_remove(v, c);
  }
}

void ColoringState::unbind_scope() {
  if (!bound_) return;
  for (const EdgeId e : scope_) {
    const Color c = color_[e];
    if (c == kUncolored) {
      pool_pos_[e] = kNil;
      continue;
    }
    const auto [u, v] = graph_->endpoints(e);
    dict_.erase(u, c);
    dict_.erase(v, c);
  }
  pool_.clear();
  scope_.clear();
  touched_.clear();
  journal_.clear();
  journaling_ = false;
  bound_ = false;
  palette_ = 0;
}

void ColoringState::preset_color(EdgeId e, Color c) {
  if (in_scope(e)) {
    throw Error(ErrorCode::kEdgeNotInScope, "preset_color on edge " + std::to_string(e) + " of the bound scope");
  }
  color_[e] = c;
}

void ColoringState::set_color(EdgeId e, Color c) {
  check_scoped(e);
  if (color_[e] != kUncolored) {
    throw Error(ErrorCode::kAlreadyColored, "edge " + std::to_string(e) + " already has color " + std::to_string(color_[e]));
  }
  check_color(c);
  const auto [u, v] = graph_->endpoints(e);
  if (dict_.search(u, c) != kAbsent || dict_.search(v, c) != kAbsent) {
    throw Error(ErrorCode::kColorConflict,
                "color " + std::to_string(c) + " is not missing at both endpoints of edge " + std::to_string(e));
  }
  if (journaling_) journal_.push_back({e, kUncolored});
  color_[e] = c;
  dict_.insert(u, c, e);
  dict_.insert(v, c, e);
  tracker_remove(u, c);
  tracker_remove(v, c);
  pool_remove(e);
}

void ColoringState::unset_color(EdgeId e) {
  check_scoped(e);
  const Color c = color_[e];
  if (c == kUncolored) throw Error(ErrorCode::kNotColored, "edge " + std::to_string(e) + " is uncolored");
  if (journaling_) journal_.push_back({e, c});
  const auto [u, v] = graph_->endpoints(e);
  color_[e] = kUncolored;
  dict_.erase(u, c);
  dict_.erase(v, c);
  tracker_append(u, c);
  tracker_append(v, c);
  pool_push(e);
}

Color ColoringState::pick_missing(Vertex v) const {
  if (!touches(v)) throw Error(ErrorCode::kVertexOutOfRange, "vertex " + std::to_string(v) + " has no scoped edge");
  if (tracker_head_[v] == kNil) {
    throw Error(ErrorCode::kColorOutOfRange, "every palette color is used at vertex " + std::to_string(v));
  }
  return tracker_head_[v] - tracker_offset_[v] + 1;
}

EdgeId ColoringState::sample_uncolored(Rng& rng) const {
  if (pool_.empty()) throw Error(ErrorCode::kNoUncoloredEdges, "no uncolored edge to sample");
  std::uniform_int_distribution<std::size_t> pick(0, pool_.size() - 1);
  return pool_[pick(rng)];
}

std::span<const Incidence> ColoringState::scoped_incident(Vertex v) const {
  if (!touches(v)) return {};
  return {scoped_incidence_.data() + incidence_offset_[v], scope_degree_[v]};
}

std::vector<Color> ColoringState::tracked_missing(Vertex v) const {
  std::vector<Color> out;
  if (!touches(v)) return out;
  for (std::uint32_t node = tracker_head_[v]; node != kNil; node = node_next_[node]) {
    out.push_back(node - tracker_offset_[v] + 1);
  }
  return out;
}

void ColoringState::tracker_remove(Vertex v, Color c) {
  if (c > tracker_size(v)) return;
  const std::uint32_t node = tracker_offset_[v] + c - 1;
  if (!node_linked_[node]) return;
  const std::uint32_t prev = node_prev_[node];
  const std::uint32_t next = node_next_[node];
  (prev == kNil ? tracker_head_[v] : node_next_[prev]) = next;
  (next == kNil ? tracker_tail_[v] : node_prev_[next]) = prev;
  node_linked_[node] = 0;
}

void ColoringState::tracker_append(Vertex v, Color c) {
  if (c > tracker_size(v)) return;
  const std::uint32_t node = tracker_offset_[v] + c - 1;
  if (node_linked_[node]) return;
  const std::uint32_t tail = tracker_tail_[v];
  node_prev_[node] = tail;
  node_next_[node] = kNil;
  (tail == kNil ? tracker_head_[v] : node_next_[tail]) = node;
  tracker_tail_[v] = node;
  node_linked_[node] = 1;
}

void ColoringState::pool_push(EdgeId e) {
  pool_pos_[e] = static_cast<std::uint32_t>(pool_.size());
  pool_.push_back(e);
}

void ColoringState::pool_remove(EdgeId e) {
  const std::uint32_t pos = pool_pos_[e];
  const EdgeId moved = pool_.back();
  pool_[pos] = moved;
  pool_pos_[moved] = pos;
  pool_.pop_back();
  pool_pos_[e] = kNil;
}

void ColoringState::begin_journal() {
  journal_.clear();
  journaling_ = true;
}

void ColoringState::rollback_journal() {
  journaling_ = false;
  for (auto it = journal_.rbegin(); it != journal_.rend(); ++it) {
    if (color_[it->edge] != kUncolored) unset_color(it->edge);
    if (it->before != kUncolored) set_color(it->edge, it->before);
  }
  journal_.clear();
}

void ColoringState::end_journal() {
  journaling_ = false;
  journal_.clear();
}

}  // namespace edgecolor
