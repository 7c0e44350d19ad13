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

#include "edgecolor/drivers.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "edgecolor/repair.hpp"

namespace edgecolor {

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kGreedyEuler: return "greedy";
    case Algorithm::kEuler: return "euler";
    case Algorithm::kRandomEuler: return "random-euler";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "greedy" || name == "greedy-euler") return Algorithm::kGreedyEuler;
  if (name == "euler") return Algorithm::kEuler;
  if (name == "random-euler" || name == "random") return Algorithm::kRandomEuler;
  return std::nullopt;
}

std::size_t palette_for(Algorithm a, std::size_t d) {
  if (a == Algorithm::kGreedyEuler) return d == 0 ? 1 : 2 * d - 1;
  return d + 1;
}

PruneResult prune(std::span<const EdgeId> scope, std::span<Color> colors, std::size_t target) {
  PruneResult out;
  Color top = 0;
  for (const EdgeId e : scope) top = std::max(top, colors[e]);
  std::vector<std::size_t> freq(static_cast<std::size_t>(top) + 1, 0);
  for (const EdgeId e : scope) ++freq[colors[e]];
  std::vector<Color> used;
  for (Color c = 1; c <= top; ++c) {
    if (freq[c] > 0) used.push_back(c);
  }
  out.distinct_before = used.size();
  std::vector<Color> remap(static_cast<std::size_t>(top) + 1, kUncolored);
  if (used.size() > target) {
    std::vector<Color> order(used);
    std::sort(order.begin(), order.end(), [&](Color a, Color b) {
      return freq[a] != freq[b] ? freq[a] < freq[b] : a > b;
    });
    out.removed = used.size() - target;
    for (std::size_t i = 0; i < out.removed; ++i) {
      out.uncolored += freq[order[i]];
      freq[order[i]] = 0;
    }
    out.bound = static_cast<double>(scope.size()) * static_cast<double>(out.removed) /
                static_cast<double>(target + out.removed);
  }
  Color next = 1;
  for (const Color c : used) {
    if (freq[c] > 0) remap[c] = next++;
  }
  for (const EdgeId e : scope) colors[e] = remap[colors[e]];
  return out;
}

namespace {

class Driver {
 public:
  Driver(const Graph& graph, Algorithm algorithm, const ColorOptions& options)
      : g_(graph),
        algo_(algorithm),
        opt_(options),
        colors_(graph.num_edges(), kUncolored),
        partition_ws_(graph.num_vertices()),
        deg_stamp_(graph.num_vertices(), 0),
        deg_count_(graph.num_vertices(), 0),
        rng_(options.seed) {
    stats_.min_prune_margin = std::numeric_limits<double>::infinity();
  }

  ColoringResult run();

 private:
  struct Frame {
    std::uint32_t begin;
    std::uint32_t end;
    std::uint32_t split = 0;
    std::uint32_t depth;
    std::int64_t parent;
    bool second;  // right child of its parent
    bool expanded = false;
    std::size_t d = 0;
    std::size_t child_palette[2] = {0, 0};
    std::size_t child_d[2] = {0, 0};
  };

  std::size_t max_degree(std::span<const EdgeId> scope);
  void repair_greedy(std::span<const EdgeId> scope, std::size_t palette);
  void repair_with_state(std::span<const EdgeId> scope, const Frame& f, std::size_t palette);

  const Graph& g_;
  Algorithm algo_;
  const ColorOptions& opt_;
  std::vector<Color> colors_;
  std::vector<EdgeId> order_;
  PartitionWorkspace partition_ws_;
  std::vector<std::uint32_t> deg_stamp_;
  std::vector<std::uint32_t> deg_count_;
  std::uint32_t deg_gen_ = 0;

  // Greedy repair scratch.
  std::vector<std::uint32_t> local_offset_;
  std::vector<EdgeId> local_incidence_;
  std::vector<std::uint32_t> color_stamp_;
  std::uint32_t color_gen_ = 0;

  std::unique_ptr<ColoringState> state_;
  std::unique_ptr<AlphaCollection> collection_;
  Rng rng_;
  RunStats stats_;
};

std::size_t Driver::max_degree(std::span<const EdgeId> scope) {
  ++deg_gen_;
  std::uint32_t best = 0;
  for (const EdgeId e : scope) {
    const auto [u, v] = g_.endpoints(e);
    for (const Vertex x : {u, v}) {
      if (deg_stamp_[x] != deg_gen_) {
        deg_stamp_[x] = deg_gen_;
        deg_count_[x] = 0;
      }
      best = std::max(best, ++deg_count_[x]);
    }
  }
  return best;
}

void Driver::repair_greedy(std::span<const EdgeId> scope, std::size_t palette) {
  // Local incidence lists; deg_count_ still holds the scope degrees.
  max_degree(scope);
  if (local_offset_.size() < g_.num_vertices()) local_offset_.assign(g_.num_vertices(), 0);
  std::uint32_t total = 0;
  for (const EdgeId e : scope) {
    const auto [u, v] = g_.endpoints(e);
    for (const Vertex x : {u, v}) {
      if (deg_count_[x] != 0) {
        local_offset_[x] = total;
        total += deg_count_[x];
        deg_count_[x] = 0;
      }
    }
  }
  local_incidence_.resize(total);
  for (const EdgeId e : scope) {
    const auto [u, v] = g_.endpoints(e);
    local_incidence_[local_offset_[u] + deg_count_[u]++] = e;
    local_incidence_[local_offset_[v] + deg_count_[v]++] = e;
  }
  if (color_stamp_.size() < palette + 1) color_stamp_.assign(palette + 1, 0);
  for (const EdgeId e : scope) {
    if (colors_[e] != kUncolored) continue;
    const auto [u, v] = g_.endpoints(e);
    ++color_gen_;
    for (const Vertex x : {u, v}) {
      for (std::uint32_t i = 0; i < deg_count_[x]; ++i) {
        const Color c = colors_[local_incidence_[local_offset_[x] + i]];
        if (c != kUncolored) color_stamp_[c] = color_gen_;
      }
    }
    Color pick = 1;
    while (pick <= palette && color_stamp_[pick] == color_gen_) ++pick;
    if (pick > palette) throw Error(ErrorCode::kColorOutOfRange, "greedy repair found no free color");
    colors_[e] = pick;
    ++stats_.single_calls;
  }
}

void Driver::repair_with_state(std::span<const EdgeId> scope, const Frame& f, std::size_t palette) {
  ColoringState& state = *state_;
  for (const EdgeId e : scope) state.preset_color(e, colors_[e]);
  state.bind_scope(scope, palette);
  if (opt_.before_repair) {
    opt_.before_repair(state, RepairNode{f.depth, scope.size(), f.d, palette, state.num_uncolored()});
  }
  if (algo_ == Algorithm::kEuler) {
    const double threshold = 2.0 * static_cast<double>(scope.size()) * static_cast<double>(f.d) /
                             static_cast<double>(g_.num_vertices());
    while (state.num_uncolored() > 0 && static_cast<double>(state.num_uncolored()) >= threshold) {
      const ColorManyStats cm = color_many(state, *collection_);
      ++stats_.color_many_calls;
      stats_.color_many_edges += cm.colored();
      if (!cm.choose_bound_holds() || !cm.build_bound_holds() || !cm.activate_bound_holds() ||
          !cm.progress_bound_holds()) {
        ++stats_.color_many_bound_failures;
      }
      stats_.leave_violations += cm.activate.leave_violations;
      stats_.disjoint_violations += cm.activate.disjoint_violations;
      stats_.leftover_fans += cm.activate.leftover_fans;
      stats_.collection_check_failures += collection_->debug_failures() + cm.activate.checker_failures;
      stats_.flip_count += cm.activate.flip_count;
      stats_.flip_length_sum += cm.activate.flip_length_sum;
      if (cm.colored() == 0) break;
    }
    while (state.num_uncolored() > 0) {
      const SingleColoring one = color_one(state);
      ++stats_.single_calls;
      if (one.flip_length > 0) {
        ++stats_.flip_count;
        stats_.flip_length_sum += one.flip_length;
      }
    }
  } else {
    while (state.num_uncolored() > 0) {
      const SingleColoring one = random_color_one(state, rng_);
      ++stats_.single_calls;
      if (one.flip_length > 0) {
        ++stats_.flip_count;
        stats_.flip_length_sum += one.flip_length;
      }
    }
  }
  for (const EdgeId e : scope) colors_[e] = state.color(e);
  state.unbind_scope();
}

ColoringResult Driver::run() {
  ColoringResult result;
  const std::size_t m = g_.num_edges();
  if (m == 0) return result;
  order_.resize(m);
  for (EdgeId e = 0; e < m; ++e) order_[e] = e;
  if (algo_ != Algorithm::kGreedyEuler) {
    state_ = std::make_unique<ColoringState>(g_);
    collection_ = std::make_unique<AlphaCollection>(g_.num_vertices());
    collection_->set_debug_checks(opt_.debug_checks);
  }

  std::vector<Frame> stack;
  stack.push_back(Frame{0, static_cast<std::uint32_t>(m), 0, 0, -1, false});
  std::size_t root_palette = 0;
  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    const std::span<EdgeId> seg(order_.data() + stack[top].begin, stack[top].end - stack[top].begin);
    if (!stack[top].expanded) {
      Frame& f = stack[top];
      f.d = max_degree(seg);
      ++stats_.nodes;
      stats_.max_depth = std::max<std::size_t>(stats_.max_depth, f.depth);
      if (f.d > 1 && seg.size() > 1) {
        const Partition p = euler_partition(g_, seg, partition_ws_);
        if (opt_.on_partition) opt_.on_partition(seg, p);
        std::copy(p.left.begin(), p.left.end(), seg.begin());
        std::copy(p.right.begin(), p.right.end(), seg.begin() + static_cast<std::ptrdiff_t>(p.left.size()));
        f.split = f.begin + static_cast<std::uint32_t>(p.left.size());
        f.expanded = true;
        const Frame right{f.split, f.end, 0, f.depth + 1, static_cast<std::int64_t>(top), true};
        const Frame left{f.begin, f.split, 0, f.depth + 1, static_cast<std::int64_t>(top), false};
        stack.push_back(right);
        stack.push_back(left);
        continue;
      }
      ++stats_.base_nodes;
      for (const EdgeId e : seg) colors_[e] = 1;
    } else {
      Frame& f = stack[top];
      const std::size_t half_d = (f.d + 1) / 2 + 1;
      const std::size_t half_m = (seg.size() + 1) / 2;
      for (int side = 0; side < 2; ++side) {
        if (f.child_d[side] > half_d) ++stats_.child_degree_violations;
      }
      if (f.split - f.begin > half_m || f.end - f.split > half_m) ++stats_.child_size_violations;
      const Color offset = static_cast<Color>(f.child_palette[0]);
      for (std::uint32_t i = f.split; i < f.end; ++i) colors_[order_[i]] += offset;

      const std::size_t palette = palette_for(algo_, f.d);
      const PruneResult pr = prune(seg, colors_, palette);
      if (pr.removed > 0) {
        stats_.min_prune_margin = std::min(stats_.min_prune_margin, pr.bound - static_cast<double>(pr.uncolored));
        if (!pr.within_bound()) ++stats_.prune_violations;
      }
      if (opt_.record_nodes) stats_.node_records.push_back(NodeRecord{f.depth, seg.size(), f.d, palette, pr});
      if (pr.uncolored > 0) {
        if (algo_ == Algorithm::kGreedyEuler) {
          repair_greedy(seg, palette);
        } else {
          repair_with_state(seg, f, palette);
        }
      }
    }
    const Frame done = stack[top];
    stack.pop_back();
    const std::size_t palette = palette_for(algo_, done.d);
    if (done.parent < 0) {
      root_palette = palette;
    } else {
      Frame& parent = stack[static_cast<std::size_t>(done.parent)];
      parent.child_palette[done.second ? 1 : 0] = palette;
      parent.child_d[done.second ? 1 : 0] = done.d;
    }
  }

  if (stats_.min_prune_margin == std::numeric_limits<double>::infinity()) stats_.min_prune_margin = 0.0;
  result.palette = root_palette;
  std::vector<std::uint8_t> seen(root_palette + 1, 0);
  for (const Color c : colors_) {
    if (c < seen.size() && !seen[c]) {
      seen[c] = 1;
      ++result.colors_used;
    }
  }
  result.colors = std::move(colors_);
  result.stats = std::move(stats_);
  return result;
}

void require_simple(const Graph& graph) {
  if (!graph.is_simple()) throw Error(ErrorCode::kNotSimple, "this algorithm needs a simple graph");
}

}  // namespace

ColoringResult greedy_euler_color(const Graph& graph, const ColorOptions& options) {
  return Driver(graph, Algorithm::kGreedyEuler, options).run();
}

ColoringResult euler_color(const Graph& graph, const ColorOptions& options) {
  require_simple(graph);
  return Driver(graph, Algorithm::kEuler, options).run();
}

ColoringResult random_euler_color(const Graph& graph, const ColorOptions& options) {
  require_simple(graph);
  return Driver(graph, Algorithm::kRandomEuler, options).run();
}

ColoringResult color_graph(const Graph& graph, Algorithm algorithm, const ColorOptions& options) {
  switch (algorithm) {
    case Algorithm::kGreedyEuler: return greedy_euler_color(graph, options);
    case Algorithm::kEuler: return euler_color(graph, options);
    case Algorithm::kRandomEuler: return random_euler_color(graph, options);
  }
  return {};
}

}  // namespace edgecolor
