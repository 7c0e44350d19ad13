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

#include "edgecolor/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

namespace edgecolor {
namespace {

using Rng64 = std::mt19937_64;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

constexpr std::array<std::string_view, 8> kFamilies = {
    "gnm-random-simple", "random-multigraph", "complete", "star", "cycle", "path", "bipartite-complete",
    "random-regular-ish"};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::kInvalidParams, what); }

std::uint64_t key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

Vertex uniform_vertex(Rng64& rng, std::size_t n) {
  return static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

// Moves one endpoint of some edge onto each isolated vertex. The moved
// endpoint keeps degree >= 1, so every step removes one isolated vertex.
void cover_isolated(Pairs& edges, std::size_t n, Rng64& rng, bool simple) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  std::unordered_set<std::uint64_t> present;
  if (simple) {
    for (const auto& [u, v] : edges) present.insert(key(u, v));
  }
  for (Vertex x = 0; x < n; ++x) {
    if (deg[x] != 0) continue;
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
    bool moved = false;
    for (std::size_t step = 0; step < edges.size() && !moved; ++step) {
      auto& [u, v] = edges[(start + step) % edges.size()];
      for (int side = 0; side < 2 && !moved; ++side) {
        Vertex& drop = side == 0 ? u : v;
        const Vertex keep = side == 0 ? v : u;
        if (deg[drop] < 2) continue;
        if (simple) {
          present.erase(key(u, v));
          present.insert(key(x, keep));
        }
        --deg[drop];
        drop = x;
        ++deg[x];
        moved = true;
      }
    }
    if (!moved) invalid("too few edges to cover every vertex");
  }
}

Pairs gnm_simple(std::size_t n, std::size_t m, Rng64& rng) {
  const std::size_t max_pairs = n * (n - 1) / 2;
  if (m > max_pairs) invalid("gnm-random-simple: m exceeds n(n-1)/2");
  Pairs edges;
  edges.reserve(m);
  if (m * 2 > max_pairs) {
    Pairs all;
    all.reserve(max_pairs);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = std::uniform_int_distribution<std::size_t>(i, all.size() - 1)(rng);
      std::swap(all[i], all[j]);
      edges.push_back(all[i]);
    }
    return edges;
  }
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  while (edges.size() < m) {
    const Vertex u = uniform_vertex(rng, n);
    const Vertex v = uniform_vertex(rng, n);
    if (u == v || !present.insert(key(u, v)).second) continue;
    edges.emplace_back(u, v);
  }
  return edges;
}

// Pairs up n*degree stubs at random, dropping self-loops (and repeated pairs
// when `simple`).
Pairs configuration_model(std::size_t n, std::size_t degree, Rng64& rng, bool simple) {
  std::vector<Vertex> stubs;
  stubs.reserve(n * degree);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < degree; ++k) stubs.push_back(v);
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);
  Pairs edges;
  std::unordered_set<std::uint64_t> present;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    const Vertex u = stubs[i];
    const Vertex v = stubs[i + 1];
    if (u == v) continue;
    if (simple && !present.insert(key(u, v)).second) continue;
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

std::span<const std::string_view> generator_families() { return kFamilies; }

bool generator_is_simple(std::string_view family) { return family != "random-multigraph"; }

EdgeList generate(const GeneratorParams& p) {
  EdgeList out;
  out.n = p.n;
  const std::size_t n = p.n;
  Rng64 rng(p.seed);
  const std::string& f = p.family;
  if (n > (1ULL << 31)) invalid("n too large");
  if (f == "complete") {
    if (n < 2) invalid("complete: n must be at least 2");
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) out.edges.emplace_back(u, v);
    }
  } else if (f == "star") {
    if (n < 2) invalid("star: n must be at least 2");
    for (Vertex v = 1; v < n; ++v) out.edges.emplace_back(0, v);
  } else if (f == "cycle") {
    if (n < 3) invalid("cycle: n must be at least 3");
    for (Vertex v = 0; v < n; ++v) out.edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  } else if (f == "path") {
    if (n < 2) invalid("path: n must be at least 2");
    for (Vertex v = 0; v + 1 < n; ++v) out.edges.emplace_back(v, v + 1);
  } else if (f == "bipartite-complete") {
    if (n < 2) invalid("bipartite-complete: n must be at least 2");
    const Vertex a = static_cast<Vertex>(n / 2);
    for (Vertex u = 0; u < a; ++u) {
      for (Vertex v = a; v < n; ++v) out.edges.emplace_back(u, v);
    }
  } else if (f == "gnm-random-simple") {
    if (n < 2) invalid("gnm-random-simple: n must be at least 2");
    const std::size_t m = p.m == 0 ? std::min(2 * n, n * (n - 1) / 2) : p.m;
    if (2 * m < n) invalid("gnm-random-simple: m < n/2 leaves isolated vertices");
    out.edges = gnm_simple(n, m, rng);
    cover_isolated(out.edges, n, rng, true);
  } else if (f == "random-multigraph") {
    if (n < 2) invalid("random-multigraph: n must be at least 2");
    if (p.degree > 0) {
      out.edges = configuration_model(n, p.degree, rng, false);
    } else {
      const std::size_t m = p.m == 0 ? 2 * n : p.m;
      if (2 * m < n) invalid("random-multigraph: m < n/2 leaves isolated vertices");
      out.edges.reserve(m);
      while (out.edges.size() < m) {
        const Vertex u = uniform_vertex(rng, n);
        const Vertex v = uniform_vertex(rng, n);
        if (u != v) out.edges.emplace_back(u, v);
      }
    }
    if (2 * out.edges.size() < n) invalid("random-multigraph: too few edges");
    cover_isolated(out.edges, n, rng, false);
  } else if (f == "random-regular-ish") {
    if (n < 2) invalid("random-regular-ish: n must be at least 2");
    if (p.degree == 0 || p.degree >= n) invalid("random-regular-ish: degree must be in [1, n-1]");
    out.edges = configuration_model(n, p.degree, rng, true);
    if (2 * out.edges.size() < n) invalid("random-regular-ish: too few edges");
    cover_isolated(out.edges, n, rng, true);
  } else {
    invalid("unknown family '" + f + "'");
  }
  return out;
}

}  // namespace edgecolor
