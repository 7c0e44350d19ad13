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

#include "edgecolor/repair.hpp"

#include <algorithm>
#include <utility>

namespace edgecolor {
namespace {

SingleColoring color_with_fan(ColoringState& state, EdgeId e, Vertex center, Color alpha) {
  PrimedCFan fan = make_primed_fan(state, center, e, alpha);
  SingleColoring out;
  out.edge = e;
  out.center = center;
  out.alpha = alpha;
  out.fan_leaves = fan.leaves.size();
  out.build_iterations = fan.build_iterations;
  out.flip_length = activate_c_fan(state, fan).length;
  return out;
}

bool fail(std::string* why, std::string msg) {
  if (why != nullptr) *why = std::move(msg);
  return false;
}

}  // namespace

SingleColoring color_one(ColoringState& state) {
  if (state.num_uncolored() == 0) throw Error(ErrorCode::kNoUncoloredEdges, "color_one: nothing to color");
  const EdgeId e = state.uncolored_edges()[0];
  const Vertex v = state.graph().endpoints(e).first;
  return color_with_fan(state, e, v, state.pick_missing(v));
}

SingleColoring random_color_one(ColoringState& state, Rng& rng) {
  const EdgeId e = state.sample_uncolored(rng);
  const auto [a, b] = state.graph().endpoints(e);
  const Vertex v = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? a : b;
  const Color palette = static_cast<Color>(state.palette_size());
  std::size_t missing = 0;
  for (Color c = 1; c <= palette; ++c) missing += state.is_missing(v, c) ? 1 : 0;
  std::size_t pick = std::uniform_int_distribution<std::size_t>(0, missing - 1)(rng);
  Color alpha = kUncolored;
  for (Color c = 1; c <= palette; ++c) {
    if (!state.is_missing(v, c)) continue;
    if (pick-- == 0) {
      alpha = c;
      break;
    }
  }
  return color_with_fan(state, e, v, alpha);
}

AlphaChoice choose_alpha(const ColoringState& state) {
  if (state.num_uncolored() == 0) throw Error(ErrorCode::kNoUncoloredEdges, "choose_alpha: nothing to color");
  const std::size_t palette = state.palette_size();
  AlphaChoice out;
  out.counts.assign(palette + 1, 0);
  std::vector<Vertex> incomplete;
  for (const Vertex v : state.scope_vertices()) {
    bool has_uncolored = false;
    for (const Incidence& inc : state.scoped_incident(v)) {
      if (state.color(inc.edge) == kUncolored) {
        has_uncolored = true;
        break;
      }
    }
    if (!has_uncolored) continue;
    incomplete.push_back(v);
    for (const Incidence& inc : state.scoped_incident(v)) {
      const Color c = state.color(inc.edge);
      if (c != kUncolored) ++out.counts[c];
    }
  }
  out.incomplete = incomplete.size();
  out.alpha = 1;
  for (Color c = 2; c <= palette; ++c) {
    if (out.counts[c] < out.counts[out.alpha]) out.alpha = c;
  }
  for (const Vertex v : incomplete) {
    if (state.is_missing(v, out.alpha)) out.i_alpha.push_back(v);
  }
  return out;
}

AlphaCollection::AlphaCollection(std::size_t num_vertices)
    : slot_stamp_(num_vertices, 0),
      fan_of_(num_vertices, 0),
      role_(num_vertices, FanRole::kCenter),
      pos_(num_vertices, 0),
      i_stamp_(num_vertices, 0),
      s_stamp_(num_vertices, 0),
      path_mark_(num_vertices, 0),
      path_stage_(num_vertices, 0) {}

void AlphaCollection::reset(const ColoringState& state, Color alpha, std::span<const Vertex> i_alpha) {
  ++gen_;
  alpha_ = alpha;
  palette_ = state.palette_size();
  fans_.clear();
  alive_fans_ = 0;
  covered_ = 0;
  damaged_ = kNoVertex;
  debug_failures_ = 0;
  for (const Vertex v : i_alpha) i_stamp_[v] = gen_;
}

std::vector<std::uint32_t> AlphaCollection::live_fans() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t id = 0; id < fans_.size(); ++id) {
    if (fans_[id].alive) out.push_back(id);
  }
  return out;
}

std::uint32_t AlphaCollection::new_slot() {
  fans_.emplace_back();
  fans_.back().alive = true;
  ++alive_fans_;
  return static_cast<std::uint32_t>(fans_.size() - 1);
}

void AlphaCollection::claim(Vertex v, std::uint32_t id, FanRole role, std::uint32_t pos) {
  slot_stamp_[v] = gen_;
  fan_of_[v] = id;
  role_[v] = role;
  pos_[v] = pos;
  if (counts_toward_cover(v)) ++covered_;
}

void AlphaCollection::release(Vertex v) {
  if (!contains(v)) return;
  if (counts_toward_cover(v)) --covered_;
  slot_stamp_[v] = 0;
  if (damaged_ == v) damaged_ = kNoVertex;
}

std::uint32_t AlphaCollection::add_cfan(PrimedCFan fan) {
  const std::uint32_t id = new_slot();
  CollectionFan& slot = fans_[id];
  slot.kind = FanKind::kCFan;
  slot.cfan = std::move(fan);
  claim(slot.cfan.center, id, FanRole::kCenter, 0);
  for (std::uint32_t i = 0; i < slot.cfan.leaves.size(); ++i) claim(slot.cfan.leaves[i], id, FanRole::kLeaf, i);
  return id;
}

std::uint32_t AlphaCollection::add_ufan(UFan fan) {
  const std::uint32_t id = new_slot();
  CollectionFan& slot = fans_[id];
  slot.kind = FanKind::kUFan;
  slot.ufan = std::move(fan);
  claim(slot.ufan.center, id, FanRole::kCenter, 0);
  for (std::uint32_t i = 0; i < slot.ufan.leaves.size(); ++i) claim(slot.ufan.leaves[i], id, FanRole::kLeaf, i);
  return id;
}

void AlphaCollection::discard(std::uint32_t id) {
  CollectionFan& f = fans_[id];
  if (!f.alive) return;
  f.alive = false;
  --alive_fans_;
  release(f.center());
  const std::vector<Vertex>& leaves = f.kind == FanKind::kCFan ? f.cfan.leaves : f.ufan.leaves;
  for (const Vertex x : leaves) release(x);
}

void AlphaCollection::remove_ufan_leaf(std::uint32_t id, std::uint32_t pos) {
  UFan& f = fans_[id].ufan;
  release(f.leaves[pos]);
  f.remove_leaf_at(pos);
  if (pos < f.leaves.size()) pos_[f.leaves[pos]] = pos;
}

MakeFanOutcome AlphaCollection::make_collection_fan(ColoringState& state, Vertex v, EdgeId e0) {
  const Graph& g = state.graph();
  PrimedCFan fan;
  fan.alpha = alpha_;
  fan.center = v;
  fan.leaves.push_back(g.other_endpoint(e0, v));
  fan.edges.push_back(e0);
  state.begin_marks();
  for (;;) {
    ++fan.build_iterations;
    const std::size_t k = fan.last();
    const Vertex xk = fan.leaves[k];
    if (contains(xk)) return merge_fans(state, fan, fan_of_[xk]);
    if (state.is_missing(xk, alpha_)) {
      shift_cfan(state, fan, k);
      state.set_color(fan.edges[k], alpha_);
      unlist(xk);
      return MakeFanOutcome::kConsumed;
    }
    const Color beta = state.pick_missing(xk);
    if (state.is_missing(v, beta)) {
      fan.beta = beta;
      add_cfan(std::move(fan));
      return MakeFanOutcome::kAdded;
    }
    const EdgeId e = state.edge_with_color(v, beta);
    const Vertex x = g.other_endpoint(e, v);
    if (state.marked(x)) {
      fan.beta = beta;
      add_cfan(std::move(fan));
      return MakeFanOutcome::kAdded;
    }
    state.mark(x);
    fan.leaves.push_back(x);
    fan.edges.push_back(e);
  }
}

MakeFanOutcome AlphaCollection::merge_fans(ColoringState& state, PrimedCFan& fan, std::uint32_t other) {
  const std::size_t k = fan.last();
  const Vertex v = fan.center;
  const Vertex xk = fan.leaves[k];
  const EdgeId ek = fan.edges[k];
  shift_cfan(state, fan, k);

  CollectionFan& f = fans_[other];
  if (f.kind == FanKind::kCFan) {
    if (f.cfan.center == xk) {
      state.set_color(ek, alpha_);
      discard(other);
      return MakeFanOutcome::kMergeI;
    }
    const std::uint32_t j = pos_[xk];
    const Vertex u = f.cfan.center;
    const EdgeId eu = f.cfan.edges[j];
    shift_cfan(state, f.cfan, j);
    discard(other);
    UFan uf;
    uf.alpha = alpha_;
    uf.center = xk;
    uf.leaves = {u, v};
    uf.edges = {eu, ek};
    add_ufan(std::move(uf));
    return MakeFanOutcome::kMergeII;
  }
  if (f.ufan.center == xk) {
    f.ufan.leaves.push_back(v);
    f.ufan.edges.push_back(ek);
    claim(v, other, FanRole::kLeaf, static_cast<std::uint32_t>(f.ufan.leaves.size() - 1));
    return MakeFanOutcome::kMergeIII;
  }
  state.set_color(ek, alpha_);
  remove_ufan_leaf(other, pos_[xk]);
  if (fans_[other].ufan.degenerate()) discard(other);
  return MakeFanOutcome::kMergeIV;
}

void AlphaCollection::mark_path(Vertex v, ActivateStats* stats) {
  if (stats != nullptr && path_stage_[v] == stage_key_ && path_mark_[v] != path_counter_) {
    ++stats->disjoint_violations;
  }
  path_stage_[v] = stage_key_;
  path_mark_[v] = path_counter_;
}

Vertex AlphaCollection::walk(const ColoringState& state, Vertex from, Color first, Color other, ActivateStats* stats,
                             bool* cycle) {
  const Graph& g = state.graph();
  Vertex x = from;
  Color c = first;
  for (;;) {
    const EdgeId e = state.edge_with_color(x, c);
    if (e == kAbsent) return x;
    const Vertex y = g.other_endpoint(e, x);
    if (on_path(y)) {
      *cycle = true;
      return x;
    }
    mark_path(y, stats);
    x = y;
    c = c == first ? other : first;
  }
}

void AlphaCollection::disconnect_vertex(ColoringState& state, Vertex v, Color beta, ActivateStats* stats) {
  ++path_counter_;
  bool cycle = false;
  mark_path(v, stats);
  Vertex ends[2];
  ends[0] = walk(state, v, alpha_, beta, stats, &cycle);
  if (!cycle) ends[1] = walk(state, v, beta, alpha_, stats, &cycle);
  if (cycle) {
    if (stats != nullptr) ++stats->cycles;
    return;
  }

  for (;;) {
    const bool in0 = contains(ends[0]);
    const bool in1 = contains(ends[1]);
    if (!in0 && !in1) break;
    const int side = ((in0 && ends[0] == damaged_) || !in1) ? 0 : 1;
    const Vertex w = ends[side];
    const std::uint32_t id = fan_of_[w];
    CollectionFan& f = fans_[id];

    if (f.kind == FanKind::kCFan || f.ufan.leaves.size() <= 2) {
      discard(id);
      if (stats != nullptr) ++stats->disconnect_cases[0];
      continue;
    }
    if (role_[w] == FanRole::kLeaf) {
      remove_ufan_leaf(id, pos_[w]);
      if (stats != nullptr) ++stats->disconnect_cases[1];
      continue;
    }

    const std::uint32_t p = on_path(f.ufan.leaves[0]) ? 1 : 0;
    const Vertex x = f.ufan.leaves[p];
    const EdgeId wx = f.ufan.edges[p];
    remove_ufan_leaf(id, p);
    Color used;
    if (state.is_missing(w, alpha_)) {
      state.set_color(wx, alpha_);
      used = alpha_;
      if (damaged_ == w) damaged_ = kNoVertex;
      if (stats != nullptr) ++stats->disconnect_cases[2];
    } else {
      const FlipRecord rec = flip_path(state, x, alpha_, beta);
      state.set_color(wx, beta);
      used = beta;
      damaged_ = (rec.length > 0 && contains(rec.endpoint)) ? rec.endpoint : kNoVertex;
      if (stats != nullptr) {
        ++stats->disconnect_cases[3];
        if (rec.length > 0) {
          ++stats->flip_count;
          stats->flip_length_sum += rec.length;
        }
      }
    }
    mark_path(x, stats);
    const Color next = used == alpha_ ? beta : alpha_;
    ends[side] = walk(state, x, next, used, stats, &cycle);
    if (cycle) {
      if (stats != nullptr) ++stats->cycles;
      return;
    }
  }
}

Color AlphaCollection::next_stage_color(std::uint32_t id, Color after) {
  const std::vector<Color>& used = used_at_center_[id];
  std::uint32_t& cur = used_cursor_[id];
  for (Color x = after + 1; x <= palette_; ++x) {
    if (x == alpha_) continue;
    while (cur < used.size() && used[cur] < x) ++cur;
    if (cur < used.size() && used[cur] == x) continue;
    return x;
  }
  return kUncolored;
}

ActivateStats AlphaCollection::activate(ColoringState& state) {
  ActivateStats stats;
  stats.ell_before = state.num_uncolored();
  stats.covered_before = covered_;

  std::vector<std::vector<std::uint32_t>> queue(palette_ + 1);
  used_at_center_.assign(fans_.size(), {});
  used_cursor_.assign(fans_.size(), 0);
  auto enqueue_next = [&](std::uint32_t id, Color after) {
    const Color c = next_stage_color(id, after);
    if (c != kUncolored) queue[c].push_back(id);
  };
  for (std::uint32_t id = 0; id < fans_.size(); ++id) {
    const CollectionFan& f = fans_[id];
    if (!f.alive) continue;
    if (f.kind == FanKind::kCFan) {
      queue[f.cfan.beta].push_back(id);
      continue;
    }
    std::vector<Color>& used = used_at_center_[id];
    for (const Incidence& inc : state.scoped_incident(f.ufan.center)) {
      const Color c = state.color(inc.edge);
      if (c != kUncolored) used.push_back(c);
    }
    std::sort(used.begin(), used.end());
    enqueue_next(id, kUncolored);
  }

  for (Color beta = 1; beta <= palette_; ++beta) {
    if (beta == alpha_) continue;
    ++stage_key_;
    std::vector<std::uint32_t>& q = queue[beta];
    while (!q.empty()) {
      const std::uint32_t id = q.back();
      q.pop_back();
      if (!fans_[id].alive) continue;
      CollectionFan& f = fans_[id];
      const Vertex v = f.center();
      const std::size_t ell0 = state.num_uncolored();
      const std::size_t cov0 = covered_;
      FlipRecord rec;
      if (f.kind == FanKind::kCFan) {
        rec = activate_c_fan(state, f.cfan);
        discard(id);
        if (rec.length > 0 && contains(rec.endpoint)) damaged_ = rec.endpoint;
      } else {
        if (f.ufan.degenerate()) {
          ++stats.checker_failures;
          discard(id);
          continue;
        }
        if (!state.is_missing(v, beta)) {
          ++stats.requeues;
          enqueue_next(id, beta);
          continue;
        }
        rec = flip_path(state, v, alpha_, beta);
        const Vertex w = rec.endpoint;
        if (contains(w)) {
          if (fan_of_[w] == id && role_[w] == FanRole::kLeaf) {
            remove_ufan_leaf(id, pos_[w]);
          } else {
            damaged_ = w;
          }
        }
        state.set_color(f.ufan.edges[0], alpha_);
        remove_ufan_leaf(id, 0);
        if (f.ufan.degenerate()) discard(id);
      }
      ++stats.activations;
      if (rec.length > 0) {
        ++stats.flip_count;
        stats.flip_length_sum += rec.length;
      }
      disconnect_vertex(state, v, beta, &stats);
      const std::size_t r = ell0 - state.num_uncolored();
      if (cov0 - covered_ > r + 6) ++stats.leave_violations;
      if (fans_[id].alive) enqueue_next(id, beta);
      if (debug_checks_) note_check(state);
    }
  }
  stats.leftover_fans = alive_fans_;
  stats.ell_after = state.num_uncolored();
  return stats;
}

bool AlphaCollection::check(const ColoringState& state, std::string* why) const {
  std::size_t covered = 0;
  std::size_t alive = 0;
  auto claimed_as = [&](Vertex x, std::uint32_t id, FanRole role, std::uint32_t pos) {
    return contains(x) && fan_of_[x] == id && role_[x] == role && (role == FanRole::kCenter || pos_[x] == pos);
  };
  for (std::uint32_t id = 0; id < fans_.size(); ++id) {
    const CollectionFan& f = fans_[id];
    if (!f.alive) continue;
    ++alive;
    if (f.kind == FanKind::kCFan) {
      if (f.cfan.alpha != alpha_ || f.cfan.beta == kUncolored) return fail(why, "c-fan not primed for this alpha");
      if (!is_valid_cfan(state, f.cfan, why)) return false;
      if (!in_i_alpha(f.cfan.center)) return fail(why, "c-fan center outside I_alpha");
      if (!claimed_as(f.cfan.center, id, FanRole::kCenter, 0)) return fail(why, "c-fan center bookkeeping");
      for (std::uint32_t i = 0; i < f.cfan.leaves.size(); ++i) {
        const Vertex x = f.cfan.leaves[i];
        if (state.is_missing(x, alpha_)) return fail(why, "c-fan leaf misses alpha");
        if (!claimed_as(x, id, FanRole::kLeaf, i)) return fail(why, "c-fan leaf bookkeeping or overlap");
      }
      ++covered;
    } else {
      if (f.ufan.alpha != alpha_) return fail(why, "u-fan for another alpha");
      if (!is_valid_ufan(state, f.ufan, why)) return false;
      if (!claimed_as(f.ufan.center, id, FanRole::kCenter, 0)) return fail(why, "u-fan center bookkeeping or overlap");
      for (std::uint32_t i = 0; i < f.ufan.leaves.size(); ++i) {
        const Vertex x = f.ufan.leaves[i];
        if (!in_i_alpha(x)) return fail(why, "u-fan leaf outside I_alpha");
        if (!claimed_as(x, id, FanRole::kLeaf, i)) return fail(why, "u-fan leaf bookkeeping or overlap");
      }
      covered += f.ufan.leaves.size();
    }
  }
  if (alive != alive_fans_) return fail(why, "live fan count mismatch");
  if (covered != covered_) return fail(why, "covered count mismatch");
  if (damaged_ != kNoVertex) return fail(why, "a damaged fan remains");
  return true;
}

void AlphaCollection::note_check(const ColoringState& state) {
  if (!check(state)) ++debug_failures_;
}

BuildStats build_collection(ColoringState& state, AlphaCollection& coll, Color alpha, std::span<const Vertex> i_alpha) {
  BuildStats stats;
  stats.ell_before = state.num_uncolored();
  stats.i_alpha = i_alpha.size();
  coll.reset(state, alpha, i_alpha);
  for (const Vertex v : i_alpha) coll.list(v);
  for (const Vertex v : i_alpha) {
    if (!coll.listed(v)) continue;
    coll.unlist(v);
    if (coll.contains(v) || !state.is_missing(v, alpha)) {
      ++stats.skipped;
      continue;
    }
    EdgeId e0 = kAbsent;
    for (const Incidence& inc : state.scoped_incident(v)) {
      if (state.color(inc.edge) == kUncolored) {
        e0 = inc.edge;
        break;
      }
    }
    if (e0 == kAbsent) {
      ++stats.skipped;
      continue;
    }
    switch (coll.make_collection_fan(state, v, e0)) {
      case MakeFanOutcome::kAdded: ++stats.fans_added; break;
      case MakeFanOutcome::kConsumed: ++stats.consumed; break;
      case MakeFanOutcome::kMergeI: ++stats.merges[0]; break;
      case MakeFanOutcome::kMergeII: ++stats.merges[1]; break;
      case MakeFanOutcome::kMergeIII: ++stats.merges[2]; break;
      case MakeFanOutcome::kMergeIV: ++stats.merges[3]; break;
    }
    if (coll.debug_checks()) coll.note_check(state);
  }
  stats.ell_after = state.num_uncolored();
  stats.covered = coll.covered();
  return stats;
}

ActivateStats activate_collection(ColoringState& state, AlphaCollection& coll) { return coll.activate(state); }

ColorManyStats color_many(ColoringState& state, AlphaCollection& coll) {
  ColorManyStats stats;
  stats.palette = state.palette_size();
  stats.ell_before = state.num_uncolored();
  const AlphaChoice choice = choose_alpha(state);
  stats.alpha = choice.alpha;
  stats.i_alpha = choice.i_alpha.size();
  stats.build = build_collection(state, coll, choice.alpha, choice.i_alpha);
  stats.ell_mid = state.num_uncolored();
  stats.activate = activate_collection(state, coll);
  stats.ell_after = state.num_uncolored();
  return stats;
}

ColorManyStats color_many(ColoringState& state) {
  AlphaCollection coll(state.graph().num_vertices());
  return color_many(state, coll);
}

}  // namespace edgecolor
