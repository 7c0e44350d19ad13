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

#include "edgecolor/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>
#include <tuple>

#include "edgecolor/generators.hpp"
#include "edgecolor/verify.hpp"

namespace edgecolor {
namespace {

[[noreturn]] void bad_config(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kInvalidParams, "config line " + std::to_string(line) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string_view::npos) return {};
  const auto b = s.find_last_not_of(" \t\r");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789^") != std::string::npos) bad_config(line, "bad number '" + s + "'");
  const auto caret = s.find('^');
  try {
    if (caret == std::string::npos) return std::stoull(s);
    const std::uint64_t base = std::stoull(s.substr(0, caret));
    const std::uint64_t exp = std::stoull(s.substr(caret + 1));
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r *= base;
    return r;
  } catch (const std::exception&) {
    bad_config(line, "bad number '" + s + "'");
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool uses_sqrt_n(Algorithm a) { return a != Algorithm::kGreedyEuler; }

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size() / 2;
  return values.size() % 2 == 1 ? values[k] : 0.5 * (values[k - 1] + values[k]);
}

BenchConfig parse_bench_config(std::istream& in) {
  BenchConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) bad_config(lineno, "expected key = value");
    const std::string k = trim(t.substr(0, eq));
    const std::string v = trim(t.substr(eq + 1));
    if (k == "family" || k == "families") {
      cfg.families = split_list(v);
      for (const auto& f : cfg.families) {
        const auto fams = generator_families();
        if (std::find(fams.begin(), fams.end(), f) == fams.end()) bad_config(lineno, "unknown family '" + f + "'");
      }
    } else if (k == "sizes" || k == "size") {
      cfg.sizes.clear();
      for (const auto& s : split_list(v)) cfg.sizes.push_back(parse_uint(s, lineno));
    } else if (k == "edges_per_vertex") {
      try {
        cfg.edges_per_vertex = std::stod(v);
      } catch (const std::exception&) {
        bad_config(lineno, "bad number '" + v + "'");
      }
      if (!(cfg.edges_per_vertex > 0)) bad_config(lineno, "edges_per_vertex must be positive");
    } else if (k == "degree" || k == "degrees") {
      cfg.degrees.clear();
      for (const auto& s : split_list(v)) cfg.degrees.push_back(parse_uint(s, lineno));
      if (cfg.degrees.empty()) cfg.degrees.push_back(0);
    } else if (k == "total_edges") {
      cfg.total_edges = parse_uint(v, lineno);
    } else if (k == "seeds" || k == "seed") {
      cfg.seeds.clear();
      for (const auto& s : split_list(v)) {
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
          cfg.seeds.push_back(parse_uint(s, lineno));
        } else {
          const std::uint64_t a = parse_uint(s.substr(0, dots), lineno);
          const std::uint64_t b = parse_uint(s.substr(dots + 2), lineno);
          if (b < a) bad_config(lineno, "empty seed range");
          for (std::uint64_t x = a; x <= b; ++x) cfg.seeds.push_back(x);
        }
      }
    } else if (k == "algorithms" || k == "algorithm") {
      cfg.algorithms.clear();
      for (const auto& s : split_list(v)) {
        const auto a = ParseAlgorithm(s);
        if (!a) bad_config(lineno, "unknown algorithm '" + s + "'");
        cfg.algorithms.push_back(*a);
      }
    } else if (k == "repetitions") {
      cfg.repetitions = parse_uint(v, lineno);
      if (cfg.repetitions == 0) bad_config(lineno, "repetitions must be positive");
    } else {
      bad_config(lineno, "unknown key '" + k + "'");
    }
  }
  return cfg;
}

double BenchRecord::time_per_m_sqrt_n() const {
  if (m == 0 || n == 0) return 0.0;
  return wall_seconds / (static_cast<double>(m) * std::sqrt(static_cast<double>(n)));
}

double BenchRecord::time_per_m_log_d() const {
  if (m == 0) return 0.0;
  return wall_seconds / (static_cast<double>(m) * std::max(1.0, std::log2(static_cast<double>(d))));
}

BenchRecord bench_once(const Graph& graph, Algorithm algorithm, std::uint64_t seed) {
  BenchRecord r;
  r.n = graph.num_vertices();
  r.m = graph.num_edges();
  r.d = graph.max_degree();
  r.algorithm = algorithm;
  r.seed = seed;
  ColorOptions opt;
  opt.seed = seed;
  ColoringResult res;
  try {
    const auto t0 = std::chrono::steady_clock::now();
    res = color_graph(graph, algorithm, opt);
    r.wall_seconds = seconds_since(t0);
  } catch (const Error& e) {
    r.status = std::string(ErrorCodeName(e.code()));
    return r;
  }
  const RunStats& s = res.stats;
  r.color_many_calls = s.color_many_calls;
  r.color_many_edges = s.color_many_edges;
  r.mean_flip_length = s.mean_flip_length();
  r.flip_count = s.flip_count;
  r.prune_bound_margin = s.min_prune_margin;
  r.prune_violations = s.prune_violations;
  r.bound_failures = s.color_many_bound_failures + s.leave_violations + s.disjoint_violations + s.leftover_fans;
  r.colors_used = res.colors_used;
  const ValidationReport report = verify_coloring(graph, res.colors, palette_for(algorithm, r.d));
  if (!report.legal) {
    r.status = "illegal";
  } else if (!report.within_budget) {
    r.status = "over-budget";
  } else {
    r.status = "legal";
  }
  return r;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream* progress) {
  std::vector<BenchRecord> out;
  struct Point {
    std::size_t n;
    std::size_t degree;
  };
  std::vector<Point> points;
  if (!cfg.sizes.empty()) {
    for (const std::size_t n : cfg.sizes) {
      for (const std::size_t d : cfg.degrees) points.push_back({n, d});
    }
  } else if (cfg.total_edges > 0) {
    for (const std::size_t d : cfg.degrees) {
      if (d == 0) throw Error(ErrorCode::kInvalidParams, "total_edges needs nonzero degrees");
      points.push_back({2 * cfg.total_edges / d, d});
    }
  }
  for (const std::string& family : cfg.families) {
    for (const Point& pt : points) {
      for (const std::uint64_t seed : cfg.seeds) {
        GeneratorParams gp;
        gp.family = family;
        gp.n = pt.n;
        gp.m = static_cast<std::size_t>(std::llround(cfg.edges_per_vertex * static_cast<double>(pt.n)));
        if (family == "gnm-random-simple") gp.m = std::min(gp.m, pt.n * (pt.n - 1) / 2);
        gp.degree = pt.degree;
        gp.seed = seed;
        const EdgeList list = generate(gp);
        const Graph graph = build_graph(list.n, list.edges);
        for (const Algorithm a : cfg.algorithms) {
          for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
            BenchRecord r = bench_once(graph, a, seed);
            r.family = family;
            r.degree_param = pt.degree;
            r.rep = rep;
            if (progress != nullptr) {
              *progress << family << " n=" << r.n << " m=" << r.m << " d=" << r.d << ' ' << AlgorithmName(a)
                        << " seed=" << seed << " rep=" << rep << " " << r.wall_seconds << "s " << r.status << '\n';
            }
            out.push_back(std::move(r));
          }
        }
      }
    }
  }
  return out;
}

void write_csv_header(std::ostream& out) {
  out << "family,n,m,d,degree_param,algorithm,seed,rep,wall_seconds,color_many_calls,color_many_edges,"
         "mean_flip_length,flip_count,prune_bound_margin,prune_violations,bound_failures,colors_used,status,"
         "time_per_m_sqrt_n,time_per_m_log_d\n";
}

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << r.family << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.degree_param << ',' << AlgorithmName(r.algorithm)
      << ',' << r.seed << ',' << r.rep << ',' << r.wall_seconds << ',' << r.color_many_calls << ','
      << r.color_many_edges << ',' << r.mean_flip_length << ',' << r.flip_count << ',' << r.prune_bound_margin << ','
      << r.prune_violations << ',' << r.bound_failures << ',' << r.colors_used << ',' << r.status << ','
      << r.time_per_m_sqrt_n() << ',' << r.time_per_m_log_d() << '\n';
}

std::vector<LadderSummary> summarize(const std::vector<BenchRecord>& records) {
  using GroupKey = std::tuple<std::string, int>;
  using PointKey = std::pair<std::size_t, std::size_t>;
  std::map<GroupKey, std::map<PointKey, std::vector<double>>> groups;
  for (const BenchRecord& r : records) {
    if (r.status != "legal") continue;
    const double stat = uses_sqrt_n(r.algorithm) ? r.time_per_m_sqrt_n() : r.time_per_m_log_d();
    groups[{r.family, static_cast<int>(r.algorithm)}][{r.n, r.degree_param}].push_back(stat);
  }
  std::vector<LadderSummary> out;
  for (const auto& [gk, pts] : groups) {
    LadderSummary s;
    s.family = std::get<0>(gk);
    s.algorithm = static_cast<Algorithm>(std::get<1>(gk));
    s.statistic = uses_sqrt_n(s.algorithm) ? "time/(m*sqrt(n))" : "time/(m*log d)";
    for (const auto& [pk, vals] : pts) {
      s.points.push_back(pk);
      s.medians.push_back(median(vals));
    }
    const double mx = *std::max_element(s.medians.begin(), s.medians.end());
    const double mn = *std::min_element(s.medians.begin(), s.medians.end());
    const double md = median(s.medians);
    s.max_over_median = md > 0 ? mx / md : 0.0;
    s.max_over_min = mn > 0 ? mx / mn : 0.0;
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<LadderSummary>& summary) {
  for (const LadderSummary& s : summary) {
    out << s.family << ' ' << AlgorithmName(s.algorithm) << ' ' << s.statistic << ":";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      out << " n=" << s.points[i].first;
      if (s.points[i].second != 0) out << "/d=" << s.points[i].second;
      out << ':' << s.medians[i];
    }
    out << " max/median=" << s.max_over_median << " max/min=" << s.max_over_min << '\n';
  }
}

}  // namespace edgecolor
