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

#include <random>
#include <vector>

#include "edgecolor/drivers.hpp"
#include "gtest/gtest.h"
#include "support/test_support.hpp"

namespace edgecolor {
namespace {

using testing::EdgeVec;

TEST(VerifyTest, ProperTriangle) {
  const Graph g = testing::make_graph(testing::cycle_edges(3));
  const ValidationReport r = verify_coloring(g, std::vector<Color>{1, 2, 3}, 3);
  EXPECT_TRUE(r.legal);
  EXPECT_EQ(r.colors_used, 3u);
  EXPECT_TRUE(r.within_budget);
  EXPECT_TRUE(r.violations.empty());
}

TEST(VerifyTest, RepeatedColorAtSharedVertex) {
  const Graph g = testing::make_graph(testing::cycle_edges(3));
  const ValidationReport r = verify_coloring(g, std::vector<Color>{1, 1, 2}, 3);
  EXPECT_FALSE(r.legal);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].vertex, 1u);
  EXPECT_EQ(r.violations[0].color, 1u);
}

TEST(VerifyTest, OverBudgetButLegal) {
  const Graph g = testing::make_graph(testing::cycle_edges(3));
  const ValidationReport r = verify_coloring(g, std::vector<Color>{1, 2, 3}, 2);
  EXPECT_TRUE(r.legal);
  EXPECT_FALSE(r.within_budget);
}

TEST(VerifyTest, UncoloredIsIllegal) {
  const Graph g = testing::make_graph(testing::path_edges(3));
  const ValidationReport r = verify_coloring(g, std::vector<Color>{1, 0}, 3);
  EXPECT_FALSE(r.legal);
  EXPECT_EQ(r.uncolored, 1u);
}

TEST(VerifyTest, SizeMismatch) {
  const Graph g = testing::make_graph(testing::path_edges(3));
  try {
    verify_coloring(g, std::vector<Color>{1}, 3);
    FAIL() << "expected MissingEdges";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingEdges);
  }
}

TEST(VerifyTest, ReportText) {
  const Graph g = testing::make_graph(testing::cycle_edges(3));
  const std::string text = verify_coloring(g, std::vector<Color>{1, 1, 2}, 3).to_text();
  EXPECT_EQ(text,
            "{\"legal\":false,\"colors_used\":2,\"max_degree\":2,\"uncolored\":0,\"budget\":3,"
            "\"within_budget\":true,\"conflict_count\":1,\"conflicts\":[{\"vertex\":1,\"color\":1,"
            "\"edges\":[0,1]}]}");
}

TEST(VerifyTest, AgreesWithPairwiseCheck) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const Graph g = testing::make_graph(testing::random_multi_edges(n, rng() % (2 * n), rng));
    std::vector<Color> colors(g.num_edges());
    for (auto& c : colors) c = static_cast<Color>(rng() % 5);
    const ValidationReport r = verify_coloring(g, colors, 5);
    EXPECT_EQ(r.legal, testing::is_proper(g, colors)) << "trial " << trial;
    EXPECT_EQ(r.colors_used, testing::distinct_colors(colors));
  }
}

TEST(OracleTest, KnownValues) {
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::complete_edges(4))), 3u);
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::petersen_edges())), 4u);
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::cycle_edges(6))), 2u);
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::cycle_edges(7))), 3u);
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::complete_edges(5))), 5u);
  EXPECT_EQ(chromatic_index_oracle(testing::make_graph(testing::star_edges(6))), 6u);
}

TEST(OracleTest, TooLarge) {
  EXPECT_THROW(chromatic_index_oracle(testing::make_graph(testing::cycle_edges(11))), Error);
}

TEST(OracleTest, MatchesPlainSearch) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = testing::make_graph(testing::random_simple_edges(n, rng() % (2 * n), rng));
    const std::size_t chi = chromatic_index_oracle(g);
    EXPECT_EQ(chi, testing::brute_chromatic_index(g)) << "trial " << trial;
    EXPECT_GE(chi, g.max_degree());
    EXPECT_LE(chi, g.max_degree() + 1);
  }
}

TEST(OracleTest, MultigraphAboveVizing) {
  // Three parallel pairs on a triangle: every edge meets the other five.
  const Graph g = build_graph(3, EdgeVec{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
  EXPECT_EQ(chromatic_index_oracle(g), 6u);
}

TEST(OracleTest, EnginesNeverBeatOptimum) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const Graph g = testing::make_graph(testing::random_simple_edges(n, rng() % (3 * n), rng));
    const std::size_t chi = chromatic_index_oracle(g);
    for (const Algorithm a : {Algorithm::kEuler, Algorithm::kRandomEuler, Algorithm::kGreedyEuler}) {
      EXPECT_GE(color_graph(g, a).colors_used, chi);
    }
  }
}

}  // namespace
}  // namespace edgecolor
