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

#include "edgecolor/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <utility>

namespace edgecolor {

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "{\"legal\":" << (legal ? "true" : "false") << ",\"colors_used\":" << colors_used
      << ",\"max_degree\":" << max_degree << ",\"uncolored\":" << uncolored << ",\"budget\":" << budget
      << ",\"within_budget\":" << (within_budget ? "true" : "false") << ",\"conflict_count\":" << violations.size()
      << ",\"conflicts\":[";
  const std::size_t shown = std::min<std::size_t>(violations.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const Conflict& c = violations[i];
    if (i > 0) out << ',';
    out << "{\"vertex\":" << c.vertex << ",\"color\":" << c.color << ",\"edges\":[" << c.first << ','
        << c.second << "]}";
  }
  out << "]}";
  return out.str();
}

ValidationReport verify_coloring(const Graph& graph, std::span<const Color> coloring, std::size_t budget) {
  if (coloring.size() != graph.num_edges()) {
    throw Error(ErrorCode::kMissingEdges, "coloring has " + std::to_string(coloring.size()) + " entries for " +
                                              std::to_string(graph.num_edges()) + " edges");
  }
  ValidationReport report;
  report.budget = budget;
  report.max_degree = graph.max_degree();
  for (const Color c : coloring) report.uncolored += c == kUncolored ? 1 : 0;

  std::vector<std::pair<Color, EdgeId>> at;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    at.clear();
    for (const Incidence& inc : graph.incident(v)) {
      if (coloring[inc.edge] != kUncolored) at.emplace_back(coloring[inc.edge], inc.edge);
    }
    std::sort(at.begin(), at.end());
    for (std::size_t i = 1; i < at.size(); ++i) {
      if (at[i].first == at[i - 1].first) report.violations.push_back({v, at[i].first, at[i - 1].second, at[i].second});
    }
  }

  std::vector<Color> distinct;
  for (const Color c : coloring) {
    if (c != kUncolored) distinct.push_back(c);
  }
  std::sort(distinct.begin(), distinct.end());
  report.colors_used = static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
  report.legal = report.violations.empty() && report.uncolored == 0;
  report.within_budget = report.colors_used <= budget;
  return report;
}

namespace {

// Exhaustive k-edge-coloring search. Always branches on the uncolored edge
// with the fewest available colors, ties to the larger endpoint degree sum.
class Backtracker {
 public:
  Backtracker(const Graph& g, std::size_t k) : g_(g), k_(k), used_(g.num_vertices(), 0), color_(g.num_edges(), 0) {}

  bool solve() { return step(0, 0); }

 private:
  std::uint64_t available(EdgeId e) const {
    const auto [u, v] = g_.endpoints(e);
    const std::uint64_t all = k_ == 64 ? ~0ULL : ((1ULL << k_) - 1);
    return all & ~(used_[u] | used_[v]);
  }

  bool step(std::size_t placed, std::size_t max_used) {
    if (placed == g_.num_edges()) return true;
    EdgeId best = kAbsent;
    int best_free = 65;
    std::size_t best_deg = 0;
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      if (color_[e] != 0) continue;
      const int free = std::popcount(available(e));
      const auto [u, v] = g_.endpoints(e);
      const std::size_t deg = g_.degree(u) + g_.degree(v);
      if (free < best_free || (free == best_free && deg > best_deg)) {
        best = e;
        best_free = free;
        best_deg = deg;
      }
    }
    if (best_free == 0) return false;
    const auto [u, v] = g_.endpoints(best);
    const std::uint64_t free = available(best);
    // Colors beyond max_used + 1 are interchangeable with max_used + 1.
    const std::size_t limit = std::min(k_, max_used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      const std::uint64_t bit = 1ULL << c;
      if ((free & bit) == 0) continue;
      color_[best] = static_cast<Color>(c + 1);
      used_[u] |= bit;
      used_[v] |= bit;
      if (step(placed + 1, std::max(max_used, c + 1))) return true;
      used_[u] &= ~bit;
      used_[v] &= ~bit;
      color_[best] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<std::uint64_t> used_;
  std::vector<Color> color_;
};

}  // namespace

std::size_t chromatic_index_oracle(const Graph& graph) {
  if (graph.num_vertices() > 10) {
    throw Error(ErrorCode::kTooLarge, "the oracle handles at most 10 vertices");
  }
  if (graph.num_edges() == 0) return 0;
  const std::size_t d = graph.max_degree();
  for (std::size_t k = d; k <= 64; ++k) {
    if (Backtracker(graph, k).solve()) return k;
  }
  throw Error(ErrorCode::kTooLarge, "chromatic index above 64");
}

}  // namespace edgecolor
