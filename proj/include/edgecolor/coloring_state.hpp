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

#ifndef EDGECOLOR_COLORING_STATE_HPP_
#define EDGECOLOR_COLORING_STATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "edgecolor/graph.hpp"
#include "edgecolor/pair_dictionary.hpp"
#include "edgecolor/types.hpp"

namespace edgecolor {

using Rng = std::mt19937_64;

// Partial edge-coloring of a Graph, restricted to a bound scope of edges.
//
// The colors of all edges live here for the whole lifetime of the state.
// While a scope is bound, the edges of the scope may only change through
// set_color/unset_color, which keep the following structures exact:
//
//   * the missing tracker of each vertex v: a linked list holding
//     M(v) restricted to colors 1..deg_scope(v)+1, so a missing color is
//     always available in O(1);
//   * the shared PairDictionary (v, c) -> edge;
//   * the pool of uncolored scope edges, supporting O(1) uniform sampling.
//
// The dictionary is sized once from the full graph and repopulated on every
// bind, so sibling scopes never see each other's entries. Edges outside the
// bound scope are invisible to every query.
class ColoringState {
 public:
  explicit ColoringState(const Graph& graph);

  ColoringState(const ColoringState&) = delete;
  ColoringState& operator=(const ColoringState&) = delete;

  const Graph& graph() const { return *graph_; }
  const PairDictionary& dictionary() const { return dict_; }

  // Binds `edges` with palette 1..palette. Every colored edge of the scope
  // must already use a color in the palette and the coloring must be legal.
  // Throws Error{kScopeNotEmpty} when a scope is already bound.
  void bind_scope(std::span<const EdgeId> edges, std::size_t palette);
  void unbind_scope();

  bool bound() const { return bound_; }
  std::span<const EdgeId> scope() const { return scope_; }
  bool in_scope(EdgeId e) const { return bound_ && scope_gen_[e] == generation_; }
  std::size_t palette_size() const { return palette_; }

  Color color(EdgeId e) const { return color_[e]; }
  std::span<const Color> colors() const { return color_; }

  // Direct write for edges outside the bound scope (recursion bookkeeping).
  void preset_color(EdgeId e, Color c);

  // Throws Error{kEdgeNotInScope, kAlreadyColored, kColorOutOfRange, kColorConflict}.
  void set_color(EdgeId e, Color c);
  // Throws Error{kEdgeNotInScope, kNotColored}.
  void unset_color(EdgeId e);

  EdgeId edge_with_color(Vertex v, Color c) const {
    check_color(c);
    return dict_.search(v, c);
  }
  bool is_missing(Vertex v, Color c) const { return edge_with_color(v, c) == kAbsent; }

  // Some color missing at v, taken from the head of its tracker. Throws
  // Error{kColorOutOfRange} if the palette is exhausted at v.
  Color pick_missing(Vertex v) const;

  std::size_t num_uncolored() const { return pool_.size(); }
  std::span<const EdgeId> uncolored_edges() const { return pool_; }
  // Throws Error{kNoUncoloredEdges}.
  EdgeId sample_uncolored(Rng& rng) const;

  bool touches(Vertex v) const { return bound_ && touched_gen_[v] == generation_; }
  std::size_t scope_degree(Vertex v) const { return touches(v) ? scope_degree_[v] : 0; }
  std::span<const Incidence> scoped_incident(Vertex v) const;
  std::span<const Vertex> scope_vertices() const { return touched_; }

  // Contents of v's missing tracker, head first.
  std::vector<Color> tracked_missing(Vertex v) const;

  // Records every color change until rollback_journal() or end_journal().
  void begin_journal();
  // Undoes every recorded change, newest first, and stops recording.
  void rollback_journal();
  void end_journal();

  // Generation-stamped vertex marks; begin_marks() clears all marks in O(1).
  void begin_marks() { ++mark_gen_; }
  void mark(Vertex v) { mark_stamp_[v] = mark_gen_; }
  void unmark(Vertex v) { mark_stamp_[v] = 0; }
  bool marked(Vertex v) const { return mark_stamp_[v] == mark_gen_; }

 private:
  static constexpr std::uint32_t kNil = UINT32_MAX;

  void check_color(Color c) const {
    if (c == kUncolored || c > palette_) throw_color_range(c);
  }
  [[noreturn]] void throw_color_range(Color c) const;
  void check_scoped(EdgeId e) const;

  // Colors 1..min(deg_scope(v) + 1, palette) are tracked.
  std::uint32_t tracker_size(Vertex v) const {
    return std::min<std::uint32_t>(scope_degree_[v] + 1, static_cast<std::uint32_t>(palette_));
  }
  void tracker_remove(Vertex v, Color c);
  void tracker_append(Vertex v, Color c);

  void pool_push(EdgeId e);
  void pool_remove(EdgeId e);

  const Graph* graph_;
  PairDictionary dict_;

  bool bound_ = false;
  std::uint32_t generation_ = 0;
  std::size_t palette_ = 0;
  std::vector<EdgeId> scope_;

  // Per edge.
  std::vector<Color> color_;
  std::vector<std::uint32_t> scope_gen_;
  std::vector<std::uint32_t> pool_pos_;

  // Per vertex, valid when touched_gen_[v] == generation_.
  std::vector<std::uint32_t> touched_gen_;
  std::vector<std::uint32_t> scope_degree_;
  std::vector<std::uint32_t> incidence_offset_;
  std::vector<std::uint32_t> tracker_offset_;
  std::vector<std::uint32_t> tracker_head_;
  std::vector<std::uint32_t> tracker_tail_;
  std::vector<Vertex> touched_;

  // Arenas rebuilt on each bind.
  std::vector<Incidence> scoped_incidence_;
  std::vector<std::uint32_t> node_prev_;
  std::vector<std::uint32_t> node_next_;
  std::vector<std::uint8_t> node_linked_;

  std::vector<EdgeId> pool_;

  struct JournalEntry {
    EdgeId edge;
    Color before;
  };
  bool journaling_ = false;
  std::vector<JournalEntry> journal_;

  std::uint32_t mark_gen_ = 1;
  std::vector<std::uint32_t> mark_stamp_;
};

}  // namespace edgecolor

#endif  // EDGECOLOR_COLORING_STATE_HPP_
