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

#ifndef EDGECOLOR_REPAIR_HPP_
#define EDGECOLOR_REPAIR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgecolor/coloring_state.hpp"
#include "edgecolor/fans.hpp"

namespace edgecolor {

// Result of coloring one edge with a primed c-fan.
struct SingleColoring {
  EdgeId edge = kAbsent;
  Vertex center = kNoVertex;
  Color alpha = kUncolored;
  std::size_t fan_leaves = 0;
  std::size_t build_iterations = 0;
  std::size_t flip_length = 0;
};

// Colors the uncolored edge at the front of the pool, centering the fan at
// its first endpoint. Throws Error{kNoUncoloredEdges}.
SingleColoring color_one(ColoringState& state);

// Colors a uniformly random uncolored edge around a uniformly chosen endpoint,
// with alpha uniform over every palette color missing there.
// Throws Error{kNoUncoloredEdges}.
SingleColoring random_color_one(ColoringState& state, Rng& rng);

struct AlphaChoice {
  Color alpha = kUncolored;
  std::vector<Vertex> i_alpha;        // incomplete vertices missing alpha
  std::size_t incomplete = 0;         // |I|
  std::vector<std::size_t> counts;    // counts[c]: colored edges at incomplete vertices
};

// Picks the color missing at the most incomplete vertices, ties to the
// smallest color. Throws Error{kNoUncoloredEdges}.
AlphaChoice choose_alpha(const ColoringState& state);

enum class FanRole : std::uint8_t { kCenter, kLeaf };
enum class FanKind : std::uint8_t { kCFan, kUFan };

struct CollectionFan {
  FanKind kind = FanKind::kCFan;
  bool alive = false;
  PrimedCFan cfan;  // kind == kCFan
  UFan ufan;        // kind == kUFan

  Vertex center() const { return kind == FanKind::kCFan ? cfan.center : ufan.center; }
  std::size_t num_leaves() const { return kind == FanKind::kCFan ? cfan.leaves.size() : ufan.leaves.size(); }
};

enum class MakeFanOutcome : std::uint8_t {
  kAdded,      // primed c-fan joined the collection
  kConsumed,   // a leaf missed alpha; one edge colored
  kMergeI,
  kMergeII,
  kMergeIII,
  kMergeIV,
};

struct BuildStats {
  std::size_t ell_before = 0;
  std::size_t ell_after = 0;
  std::size_t i_alpha = 0;
  std::size_t covered = 0;  // |V(C) ∩ I_alpha| after building
  std::size_t fans_added = 0;
  std::size_t consumed = 0;
  std::size_t merges[4] = {0, 0, 0, 0};
  std::size_t skipped = 0;

  bool bound_holds() const { return covered + 3 * (ell_before - ell_after) >= i_alpha; }
};

struct ActivateStats {
  std::size_t ell_before = 0;
  std::size_t ell_after = 0;
  std::size_t covered_before = 0;
  std::size_t activations = 0;
  std::size_t requeues = 0;
  std::size_t leave_violations = 0;     // iterations losing more than r + 6 covered vertices
  std::size_t disjoint_violations = 0;  // vertices shared by two paths of one stage
  std::size_t leftover_fans = 0;
  std::size_t cycles = 0;               // disconnect paths that closed into a cycle
  std::size_t disconnect_cases[4] = {0, 0, 0, 0};  // 1, 2, 3a, 3b
  std::size_t flip_count = 0;
  std::size_t flip_length_sum = 0;
  std::size_t checker_failures = 0;

  bool bound_holds() const { return 7 * (ell_before - ell_after) >= covered_before; }
};

// A set of vertex-disjoint fans sharing one alpha, plus the per-vertex
// bookkeeping needed to answer "which fan holds v" in O(1). Sized once for
// a graph and reused across calls; reset() clears it in O(1).
class AlphaCollection {
 public:
  explicit AlphaCollection(std::size_t num_vertices);

  // Starts a new collection for alpha over the vertex set I_alpha.
  void reset(const ColoringState& state, Color alpha, std::span<const Vertex> i_alpha);

  Color alpha() const { return alpha_; }
  std::size_t num_fans() const { return alive_fans_; }
  std::size_t covered() const { return covered_; }
  bool in_i_alpha(Vertex v) const { return i_stamp_[v] == gen_; }
  bool contains(Vertex v) const { return slot_stamp_[v] == gen_; }
  std::uint32_t fan_of(Vertex v) const { return fan_of_[v]; }
  FanRole role_of(Vertex v) const { return role_[v]; }
  const CollectionFan& fan(std::uint32_t id) const { return fans_[id]; }
  std::size_t num_slots() const { return fans_.size(); }
  Vertex damaged() const { return damaged_; }
  std::vector<std::uint32_t> live_fans() const;

  // Direct insertion for fixtures; the caller guarantees disjointness.
  std::uint32_t add_cfan(PrimedCFan fan);
  std::uint32_t add_ufan(UFan fan);

  // Grows a fan at v from the uncolored edge e0, merging or coloring on
  // collisions. Vertices leaving the worklist are cleared with unlist().
  MakeFanOutcome make_collection_fan(ColoringState& state, Vertex v, EdgeId e0);
  // F's last leaf lies in fan `other`; F itself is always discarded.
  MakeFanOutcome merge_fans(ColoringState& state, PrimedCFan& fan, std::uint32_t other);

  // Worklist membership used by build_collection.
  void list(Vertex v) { s_stamp_[v] = gen_; }
  void unlist(Vertex v) { s_stamp_[v] = 0; }
  bool listed(Vertex v) const { return s_stamp_[v] == gen_; }

  // Runs every stage until no fan is left.
  ActivateStats activate(ColoringState& state);

  // Cleans up after the activation of the fan centered at v in the stage of
  // color beta, until neither end of the alpha-beta path through v is in a fan.
  void disconnect_vertex(ColoringState& state, Vertex v, Color beta, ActivateStats* stats = nullptr);
  // Marks the next disconnect_vertex calls as one stage (needed only when
  // driving disconnect_vertex by hand).
  void begin_stage() { ++stage_key_; }
  void set_damaged(Vertex v) { damaged_ = v; }

  // Verifies every collection invariant against the live state.
  bool check(const ColoringState& state, std::string* why = nullptr) const;

  // Also run check() at every loop boundary of the build and activation.
  void set_debug_checks(bool on) { debug_checks_ = on; }
  bool debug_checks() const { return debug_checks_; }
  std::size_t debug_failures() const { return debug_failures_; }
  void note_check(const ColoringState& state);

 private:
  std::uint32_t new_slot();
  void claim(Vertex v, std::uint32_t id, FanRole role, std::uint32_t pos);
  void release(Vertex v);
  // c-fan centers and u-fan leaves in I_alpha.
  bool counts_toward_cover(Vertex v) const {
    const bool cfan = fans_[fan_of_[v]].kind == FanKind::kCFan;
    return in_i_alpha(v) && cfan == (role_[v] == FanRole::kCenter);
  }
  void discard(std::uint32_t id);
  void remove_ufan_leaf(std::uint32_t id, std::uint32_t pos);
  bool on_path(Vertex v) const { return path_mark_[v] == path_counter_; }
  void mark_path(Vertex v, ActivateStats* stats);
  Vertex walk(const ColoringState& state, Vertex from, Color first, Color other, ActivateStats* stats, bool* cycle);
  Color next_stage_color(std::uint32_t id, Color after);

  Color alpha_ = kUncolored;
  std::size_t palette_ = 0;
  std::uint32_t gen_ = 0;
  std::vector<CollectionFan> fans_;
  std::size_t alive_fans_ = 0;
  std::size_t covered_ = 0;
  Vertex damaged_ = kNoVertex;

  std::vector<std::uint32_t> slot_stamp_;
  std::vector<std::uint32_t> fan_of_;
  std::vector<FanRole> role_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> i_stamp_;
  std::vector<std::uint32_t> s_stamp_;

  std::uint32_t path_counter_ = 0;
  std::uint32_t stage_key_ = 0;
  std::vector<std::uint32_t> path_mark_;
  std::vector<std::uint32_t> path_stage_;

  // Stage schedule of u-fans: colors used at the center, ascending.
  std::vector<std::vector<Color>> used_at_center_;
  std::vector<std::uint32_t> used_cursor_;

  bool debug_checks_ = false;
  std::size_t debug_failures_ = 0;
};

BuildStats build_collection(ColoringState& state, AlphaCollection& coll, Color alpha, std::span<const Vertex> i_alpha);
ActivateStats activate_collection(ColoringState& state, AlphaCollection& coll);

struct ColorManyStats {
  Color alpha = kUncolored;
  std::size_t palette = 0;
  std::size_t ell_before = 0;
  std::size_t ell_mid = 0;
  std::size_t ell_after = 0;
  std::size_t i_alpha = 0;
  BuildStats build;
  ActivateStats activate;

  std::size_t colored() const { return ell_before - ell_after; }
  bool choose_bound_holds() const { return i_alpha * palette >= 2 * ell_before; }
  bool build_bound_holds() const { return build.bound_holds(); }
  bool activate_bound_holds() const { return activate.bound_holds(); }
  bool progress_bound_holds() const { return 7 * palette * colored() >= 2 * ell_before; }
};

// Colors a constant fraction of ell / palette edges in time linear in the
// scope. Throws Error{kNoUncoloredEdges}.
ColorManyStats color_many(ColoringState& state, AlphaCollection& coll);
ColorManyStats color_many(ColoringState& state);

}  // namespace edgecolor

#endif  // EDGECOLOR_REPAIR_HPP_
