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

// edgecolor: generate graphs, color them, verify colorings, run campaigns.
//
//   edgecolor gen --family gnm-random-simple --n 1000 --m 4000 --seed 7 --out g.txt
//   edgecolor color g.txt --algorithm euler --out c.txt
//   edgecolor verify g.txt c.txt --budget 9
//   edgecolor bench --config ladder.cfg --out runs.csv
//
// Exit status: 0 success, 1 validation failure, 2 usage or parse error,
// 3 any other error (for example a multigraph given to euler).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "edgecolor/bench.hpp"
#include "edgecolor/drivers.hpp"
#include "edgecolor/generators.hpp"
#include "edgecolor/io.hpp"
#include "edgecolor/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

int exit_code_for(const edgecolor::Error& e) {
  switch (e.code()) {
    case edgecolor::ErrorCode::kParseError:
    case edgecolor::ErrorCode::kMissingEdges:
    case edgecolor::ErrorCode::kInvalidParams:
      return kExitUsage;
    default:
      return kExitError;
  }
}

// Writes through `body` to `path`, or to stdout when path is empty or "-".
template <typename F>
void with_output(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw edgecolor::Error(edgecolor::ErrorCode::kInvalidParams, "cannot open " + path + " for writing");
  body(out);
  if (!out) throw edgecolor::Error(edgecolor::ErrorCode::kInvalidParams, "write to " + path + " failed");
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t degree = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct ColorArgs {
  std::string input;
  std::string algorithm = "euler";
  std::uint64_t seed = 0;
  std::string out;
};

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  std::optional<std::size_t> budget;
};

struct BenchArgs {
  std::string config;
  std::string out;
  bool quiet = false;
};

int run_gen(const GenArgs& a) {
  edgecolor::GeneratorParams p;
  p.family = a.family;
  p.n = a.n;
  p.m = a.m;
  p.degree = a.degree;
  p.seed = a.seed;
  const edgecolor::EdgeList list = edgecolor::generate(p);
  with_output(a.out, [&](std::ostream& os) { edgecolor::write_edge_list(os, list); });
  std::cerr << "generated n=" << list.n << " m=" << list.edges.size() << '\n';
  return kExitOk;
}

int run_color(const ColorArgs& a) {
  const auto algorithm = edgecolor::ParseAlgorithm(a.algorithm);
  if (!algorithm) {
    std::cerr << "unknown algorithm '" << a.algorithm << "' (greedy, euler, random-euler)\n";
    return kExitUsage;
  }
  const edgecolor::EdgeList list = edgecolor::read_edge_list_file(a.input);
  const edgecolor::Graph graph = edgecolor::build_graph(list.n, list.edges);
  edgecolor::ColorOptions opt;
  opt.seed = a.seed;
  const edgecolor::ColoringResult res = edgecolor::color_graph(graph, *algorithm, opt);
  with_output(a.out, [&](std::ostream& os) { edgecolor::write_coloring(os, res.colors); });
  std::size_t uncolored = 0;
  for (const auto c : res.colors) uncolored += c == edgecolor::kUncolored ? 1 : 0;
  std::cerr << "algorithm=" << edgecolor::AlgorithmName(*algorithm) << " n=" << graph.num_vertices()
            << " m=" << graph.num_edges() << " d=" << graph.max_degree() << " colors_used=" << res.colors_used
            << " palette=" << res.palette << " uncolored=" << uncolored << '\n';
  return uncolored == 0 ? kExitOk : kExitInvalid;
}

int run_verify(const VerifyArgs& a) {
  const edgecolor::EdgeList list = edgecolor::read_edge_list_file(a.graph);
  const edgecolor::Graph graph = edgecolor::build_graph(list.n, list.edges);
  const auto colors = edgecolor::read_coloring_file(a.coloring, graph.num_edges());
  const std::size_t budget = a.budget.value_or(graph.max_degree() + 1);
  const edgecolor::ValidationReport report = edgecolor::verify_coloring(graph, colors, budget);
  std::cout << report.to_text() << '\n';
  return report.legal && report.within_budget ? kExitOk : kExitInvalid;
}

int run_bench_cmd(const BenchArgs& a) {
  std::ifstream in(a.config);
  if (!in) {
    std::cerr << "cannot open config " << a.config << '\n';
    return kExitUsage;
  }
  const edgecolor::BenchConfig cfg = edgecolor::parse_bench_config(in);
  const auto records = edgecolor::run_bench(cfg, a.quiet ? nullptr : &std::cerr);
  with_output(a.out, [&](std::ostream& os) {
    edgecolor::write_csv_header(os);
    for (const auto& r : records) edgecolor::write_csv_row(os, r);
  });
  edgecolor::write_summary(std::cerr, edgecolor::summarize(records));
  for (const auto& r : records) {
    if (r.status != "legal") return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge coloring with d+1 and 2d-1 colors"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen_cmd->add_option("--family", gen.family, "Generator family")->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--m", gen.m, "Number of edges (gnm, multigraph); 0 means 2n");
  gen_cmd->add_option("--degree", gen.degree, "Target degree (regular-ish, multigraph)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color the edges of a graph file");
  color_cmd->add_option("input", color.input, "Edge-list file")->required()->check(CLI::ExistingFile);
  color_cmd->add_option("--algorithm", color.algorithm, "greedy, euler or random-euler");
  color_cmd->add_option("--seed", color.seed, "Random seed");
  color_cmd->add_option("--out", color.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against a graph");
  verify_cmd->add_option("graph", verify.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--budget", verify.budget, "Allowed colors (default d+1)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark campaign");
  bench_cmd->add_option("--config", bench.config, "Campaign config file")->required();
  bench_cmd->add_option("--out", bench.out, "CSV output (default stdout)");
  bench_cmd->add_flag("--quiet", bench.quiet, "No per-run progress on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*color_cmd) return run_color(color);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench_cmd(bench);
  } catch (const edgecolor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
