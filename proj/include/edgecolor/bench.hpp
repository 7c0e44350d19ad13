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

#ifndef EDGECOLOR_BENCH_HPP_
#define EDGECOLOR_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "edgecolor/drivers.hpp"
#include "edgecolor/graph.hpp"

namespace edgecolor {

// Flat key=value campaign description. Lists are comma separated; sizes
// accept "2^k"; seeds accept "a..b".
//
//   family = gnm-random-simple
//   sizes = 2^12, 2^13
//   edges_per_vertex = 4
//   degrees = 0
//   total_edges = 0
//   seeds = 0..4
//   algorithms = random-euler
//   repetitions = 1
struct BenchConfig {
  std::vector<std::string> families;
  std::vector<std::size_t> sizes;
  double edges_per_vertex = 4.0;
  // Stub count for configuration-model families; 0 uses edges_per_vertex.
  std::vector<std::size_t> degrees = {0};
  // With no sizes, each degree d runs at n = 2 * total_edges / d.
  std::size_t total_edges = 0;
  std::vector<std::uint64_t> seeds = {0};
  std::vector<Algorithm> algorithms;
  std::size_t repetitions = 1;
};

// Throws Error{kInvalidParams} on unknown keys or malformed values.
BenchConfig parse_bench_config(std::istream& in);

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t degree_param = 0;
  Algorithm algorithm = Algorithm::kGreedyEuler;
  std::uint64_t seed = 0;
  std::size_t rep = 0;
  double wall_seconds = 0.0;
  std::size_t color_many_calls = 0;
  std::size_t color_many_edges = 0;
  double mean_flip_length = 0.0;
  std::size_t flip_count = 0;
  double prune_bound_margin = 0.0;
  std::size_t prune_violations = 0;
  std::size_t bound_failures = 0;
  std::size_t colors_used = 0;
  std::string status;  // "legal" or a failure description

  double time_per_m_sqrt_n() const;
  double time_per_m_log_d() const;
};

// Colors `graph` once, timing the coloring (dictionary setup included) and
// re-verifying the output.
BenchRecord bench_once(const Graph& graph, Algorithm algorithm, std::uint64_t seed);

std::vector<BenchRecord> run_bench(const BenchConfig& config, std::ostream* progress = nullptr);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& r);

struct LadderSummary {
  std::string family;
  Algorithm algorithm;
  std::string statistic;  // "time/(m*sqrt(n))" or "time/(m*log d)"
  std::vector<std::pair<std::size_t, std::size_t>> points;  // (n, degree parameter)
  std::vector<double> medians;  // per size, over seeds and repetitions
  double max_over_median = 0.0;
  double max_over_min = 0.0;
};

// Groups legal records by (family, algorithm) and summarizes the scaling
// statistic across sizes.
std::vector<LadderSummary> summarize(const std::vector<BenchRecord>& records);
void write_summary(std::ostream& out, const std::vector<LadderSummary>& summary);

double median(std::vector<double> values);

}  // namespace edgecolor

#endif  // EDGECOLOR_BENCH_HPP_
