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

#include <sstream>
#include <string>

#include "edgecolor/graph.hpp"
#include "edgecolor/io.hpp"
#include "gtest/gtest.h"

namespace edgecolor {
namespace {

GeneratorParams params(const std::string& family, std::size_t n, std::uint64_t seed, std::size_t m = 0,
                       std::size_t degree = 0) {
  GeneratorParams p;
  p.family = family;
  p.n = n;
  p.m = m;
  p.degree = degree;
  p.seed = seed;
  return p;
}

std::string serialize(const EdgeList& list) {
  std::ostringstream out;
  write_edge_list(out, list);
  return out.str();
}

TEST(GeneratorsTest, CompleteFour) {
  const EdgeList list = generate(params("complete", 4, 0));
  const Graph g = build_graph(list.n, list.edges);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_EQ(g.max_degree(), 3u);
}

TEST(GeneratorsTest, GnmIsReproducible) {
  const std::string a = serialize(generate(params("gnm-random-simple", 1000, 7, 4000)));
  const std::string b = serialize(generate(params("gnm-random-simple", 1000, 7, 4000)));
  const std::string c = serialize(generate(params("gnm-random-simple", 1000, 8, 4000)));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(GeneratorsTest, MultigraphHasParallelEdges) {
  const EdgeList list = generate(params("random-multigraph", 20, 3, 200));
  const Graph g = build_graph(list.n, list.edges);
  EXPECT_FALSE(g.is_simple());
}

TEST(GeneratorsTest, EveryFamilyLoads) {
  for (const std::string_view fam : generator_families()) {
    for (const std::size_t n : {4u, 9u, 64u, 300u}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const std::string family(fam);
        const EdgeList list = generate(params(family, n, seed, 0, 3));
        ASSERT_EQ(list.n, n);
        // build_graph rejects isolated vertices and self-loops.
        const Graph g = build_graph(list.n, list.edges);
        if (generator_is_simple(family)) EXPECT_TRUE(g.is_simple()) << family << " n=" << n;
      }
    }
  }
}

TEST(GeneratorsTest, SparseGnmCoversVertices) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EdgeList list = generate(params("gnm-random-simple", 100, seed, 50));
    EXPECT_EQ(list.edges.size(), 50u);
    EXPECT_NO_THROW(build_graph(list.n, list.edges));
  }
}

TEST(GeneratorsTest, DenseGnm) {
  const EdgeList list = generate(params("gnm-random-simple", 10, 1, 44));
  const Graph g = build_graph(list.n, list.edges);
  EXPECT_EQ(g.num_edges(), 44u);
  EXPECT_TRUE(g.is_simple());
}

TEST(GeneratorsTest, Shapes) {
  EXPECT_EQ(generate(params("star", 6, 0)).edges.size(), 5u);
  EXPECT_EQ(generate(params("cycle", 6, 0)).edges.size(), 6u);
  EXPECT_EQ(generate(params("path", 6, 0)).edges.size(), 5u);
  EXPECT_EQ(generate(params("bipartite-complete", 7, 0)).edges.size(), 12u);
}

TEST(GeneratorsTest, InvalidParams) {
  auto code = [](const GeneratorParams& p) {
    try {
      generate(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kSelfLoop;
  };
  EXPECT_EQ(code(params("no-such-family", 10, 0)), ErrorCode::kInvalidParams);
  EXPECT_EQ(code(params("gnm-random-simple", 10, 0, 46)), ErrorCode::kInvalidParams);
  EXPECT_EQ(code(params("gnm-random-simple", 10, 0, 4)), ErrorCode::kInvalidParams);
  EXPECT_EQ(code(params("cycle", 2, 0)), ErrorCode::kInvalidParams);
  EXPECT_EQ(code(params("random-regular-ish", 10, 0, 0, 10)), ErrorCode::kInvalidParams);
}

}  // namespace
}  // namespace edgecolor
