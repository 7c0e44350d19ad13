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

#ifndef EDGECOLOR_DRIVERS_HPP_
#define EDGECOLOR_DRIVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "edgecolor/coloring_state.hpp"
#include "edgecolor/euler_partition.hpp"
#include "edgecolor/graph.hpp"

namespace edgecolor {

enum class Algorithm { kGreedyEuler, kEuler, kRandomEuler };

std::string_view AlgorithmName(Algorithm a);
// Accepts "greedy", "euler" and "random-euler" (plus "greedy-euler" and "random").
std::optional<Algorithm> ParseAlgorithm(std::string_view name);

// Palette size granted to a node of maximum degree d.
std::size_t palette_for(Algorithm a, std::size_t d);

struct PruneResult {
  std::size_t distinct_before = 0;
  std::size_t removed = 0;    // t
  std::size_t uncolored = 0;  // edges uncolored by this prune
  double bound = 0.0;         // m * t / (target + t)

  bool within_bound() const { return static_cast<double>(uncolored) <= bound + 1e-9; }
};

// Uncolors the least frequent color classes of `scope` (ties: larger color
// first) until at most `target` colors remain, then renumbers the survivors
// onto 1..target keeping their order.
PruneResult prune(std::span<const EdgeId> scope, std::span<Color> colors, std::size_t target);

struct NodeRecord {
  std::size_t depth = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t palette = 0;
  PruneResult prune;
};

struct RunStats {
  std::size_t nodes = 0;
  std::size_t base_nodes = 0;
  std::size_t max_depth = 0;
  std::size_t child_degree_violations = 0;  // d_child > ceil(d / 2) + 1
  std::size_t child_size_violations = 0;    // m_child > ceil(m / 2)
  std::size_t prune_violations = 0;
  double min_prune_margin = 0.0;            // min over pruning nodes of bound - uncolored

  std::size_t color_many_calls = 0;
  std::size_t color_many_edges = 0;
  std::size_t color_many_bound_failures = 0;  // any of the four counting bounds
  std::size_t leave_violations = 0;
  std::size_t disjoint_violations = 0;
  std::size_t leftover_fans = 0;
  std::size_t collection_check_failures = 0;

  std::size_t single_calls = 0;  // color_one / random_color_one / greedy repairs
  std::size_t flip_count = 0;
  std::size_t flip_length_sum = 0;

  std::vector<NodeRecord> node_records;  // filled when requested

  double mean_flip_length() const {
    return flip_count == 0 ? 0.0 : static_cast<double>(flip_length_sum) / static_cast<double>(flip_count);
  }
};

// Information about a node whose scope has just been bound for repair.
struct RepairNode {
  std::size_t depth;
  std::size_t m;
  std::size_t d;
  std::size_t palette;
  std::size_t uncolored;
};

struct ColorOptions {
  std::uint64_t seed = 0;
  bool record_nodes = false;
  // Run the collection checker at every loop boundary (slow).
  bool debug_checks = false;
  // Called with the bound state after every prune, before the repair runs.
  // The callback must leave the coloring as it found it.
  std::function<void(ColoringState&, const RepairNode&)> before_repair;
  // Called with every node's scope and the partition computed for it.
  std::function<void(std::span<const EdgeId>, const Partition&)> on_partition;
};

struct ColoringResult {
  std::vector<Color> colors;  // colors[e] in 1..colors_used
  std::size_t colors_used = 0;
  std::size_t palette = 0;    // palette of the root node
  RunStats stats;
};

// 2d-1 colors in O(m log d); multigraphs allowed.
ColoringResult greedy_euler_color(const Graph& graph, const ColorOptions& options = {});
// d+1 colors in O(m sqrt(n)); throws Error{kNotSimple}.
ColoringResult euler_color(const Graph& graph, const ColorOptions& options = {});
// d+1 colors, randomized repair seeded by options.seed; throws Error{kNotSimple}.
ColoringResult random_euler_color(const Graph& graph, const ColorOptions& options = {});

ColoringResult color_graph(const Graph& graph, Algorithm algorithm, const ColorOptions& options = {});

}  // namespace edgecolor

#endif  // EDGECOLOR_DRIVERS_HPP_
