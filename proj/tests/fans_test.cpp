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


#include "edgecolor/fans.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/test_support.hpp"

namespace edgecolor {
namespace {

using testing::BoundFixture;
using testing::EdgeVec;

std::size_t colored_count(const ColoringState& st) {
  std::size_t c = 0;
  for (const EdgeId e : st.scope()) c += st.color(e) != kUncolored ? 1 : 0;
  return c;
}

// Greedily colors a random subset of the scope so that some edges stay
// uncolored.
void random_partial_coloring(ColoringState& st, std::mt19937_64& rng, double keep) {
  std::vector<EdgeId> order(st.scope().begin(), st.scope().end());
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (const EdgeId e : order) {
    if (coin(rng) > keep) continue;
    const auto [u, v] = st.graph().endpoints(e);
    for (Color c = 1; c <= st.palette_size(); ++c) {
      if (st.is_missing(u, c) && st.is_missing(v, c)) {
        st.set_color(e, c);
        break;
      }
    }
  }
}

TEST(FlipPathTest, TwoEdgePath) {
  BoundFixture f({{0, 1}, {1, 2}}, {1, 2}, 3);
  const FlipRecord rec = flip_path(f.s(), 0, 1, 2);
  EXPECT_EQ(f.s().color(0), 2u);
  EXPECT_EQ(f.s().color(1), 1u);
  EXPECT_EQ(rec.endpoint, 2u);
  EXPECT_EQ(rec.length, 2u);
  EXPECT_EQ(rec.path, (std::vector<Vertex>{0, 1, 2}));
}

TEST(FlipPathTest, MissingBothIsEmpty) {
  BoundFixture f({{0, 1}, {1, 2}}, {1, 2}, 3);
  const FlipRecord rec = flip_path(f.s(), 0, 2, 3);
  EXPECT_EQ(rec.length, 0u);
  EXPECT_EQ(rec.endpoint, 0u);
  EXPECT_EQ(f.s().color(0), 1u);
}

TEST(FlipPathTest, NotAnEndpoint) {
  BoundFixture f({{0, 1}, {1, 2}}, {1, 2}, 3);
  try {
    flip_path(f.s(), 1, 1, 2);
    FAIL() << "expected NotPathEndpoint";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPathEndpoint);
  }
}

TEST(FlipPathTest, FlipTwiceRestores) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const Graph g = testing::make_graph(testing::random_simple_edges(n, rng() % (2 * n), rng));
    ColoringState st(g);
    std::vector<EdgeId> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    st.bind_scope(all, g.max_degree() + 1);
    random_partial_coloring(st, rng, 0.8);
    const std::vector<Color> before(st.colors().begin(), st.colors().end());
    const Vertex v = static_cast<Vertex>(rng() % n);
    const Color a = st.pick_missing(v);
    Color b = 1 + static_cast<Color>(rng() % st.palette_size());
    if (b == a) b = b % st.palette_size() + 1;
    if (a == b) continue;
    flip_path(st, v, a, b);
    ASSERT_TRUE(testing::is_proper(g, {st.colors().begin(), st.colors().end()}, true));
    flip_path(st, v, a, b);
    ASSERT_EQ(std::vector<Color>(st.colors().begin(), st.colors().end()), before) << "trial " << trial;
    ASSERT_EQ(testing::audit_state(st), "");
  }
}

// Center 0, x0 = 1 (uncolored), x1 = 2 (colored 2, missing at x0).
TEST(ShiftTest, MovesColorsTowardsFirstLeaf) {
  BoundFixture f({{0, 1}, {0, 2}}, {0, 2}, 3);
  PrimedCFan fan;
  fan.alpha = 1;
  fan.center = 0;
  fan.leaves = {1, 2};
  fan.edges = {0, 1};
  ASSERT_TRUE(is_valid_cfan(f.s(), fan));
  shift_cfan(f.s(), fan, 0);
  EXPECT_EQ(f.s().color(0), kUncolored);
  EXPECT_EQ(f.s().color(1), 2u);
  const std::size_t before = colored_count(f.s());
  shift_cfan(f.s(), fan, 1);
  EXPECT_EQ(f.s().color(0), 2u);
  EXPECT_EQ(f.s().color(1), kUncolored);
  EXPECT_EQ(colored_count(f.s()), before);
  EXPECT_EQ(testing::audit_state(f.s()), "");
}

TEST(MakePrimedFanTest, ImmediatePriming) {
  BoundFixture f({{0, 1}}, {}, 2);
  const PrimedCFan fan = make_primed_fan(f.s(), 0, 0, 2);
  EXPECT_EQ(fan.leaves.size(), 1u);
  EXPECT_TRUE(f.s().is_missing(0, fan.beta));
  EXPECT_TRUE(is_valid_cfan(f.s(), fan));
  const FlipRecord rec = activate_c_fan(f.s(), fan);
  EXPECT_EQ(rec.length, 0u);
  EXPECT_EQ(f.s().color(0), fan.beta);
}

// 0-2 carries color 1, which x0 = 1 misses, so the fan grows to x1 = 2.
TEST(MakePrimedFanTest, GrowsAlongStar) {
  BoundFixture f({{0, 1}, {0, 2}}, {0, 1}, 3);
  const PrimedCFan fan = make_primed_fan(f.s(), 0, 0, 3);
  EXPECT_EQ(fan.leaves, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(fan.edges, (std::vector<EdgeId>{0, 1}));
  std::string why;
  EXPECT_TRUE(is_valid_cfan(f.s(), fan, &why)) << why;
  EXPECT_EQ(make_primed_fan_to(f.s(), 0, 1, 3).leaves, fan.leaves);
}

TEST(MakePrimedFanTest, Errors) {
  BoundFixture f({{0, 1}, {0, 2}}, {0, 1}, 3);
  EXPECT_THROW(make_primed_fan(f.s(), 0, 1, 3), Error);  // colored edge
  EXPECT_THROW(make_primed_fan(f.s(), 2, 0, 3), Error);  // not incident
  EXPECT_THROW(make_primed_fan(f.s(), 0, 0, 1), Error);  // alpha used at center
  EXPECT_THROW(make_primed_fan_to(f.s(), 0, 2, 3), Error);
}

// Fan (1, v=0, x0=1, x1=2, x2=3) with 0-2 = 2, 0-3 = 3, 1-2 = 1 and beta = 2.
// The (1, 2) path from v runs 0-2-1 and ends at x0, the leaf before the
// beta edge, so the whole fan rotates and the last edge takes beta.
TEST(ActivateCFanTest, PathEndsBeforeBetaEdge) {
  BoundFixture f({{0, 1}, {0, 2}, {0, 3}, {2, 1}}, {0, 2, 3, 1}, 4);
  PrimedCFan fan;
  fan.alpha = 1;
  fan.center = 0;
  fan.leaves = {1, 2, 3};
  fan.edges = {0, 1, 2};
  fan.beta = 2;
  std::string why;
  ASSERT_TRUE(is_valid_cfan(f.s(), fan, &why)) << why;
  const FlipRecord rec = activate_c_fan(f.s(), fan);
  EXPECT_EQ(rec.endpoint, 1u);
  EXPECT_EQ(rec.length, 2u);
  EXPECT_EQ(f.s().color(2), 2u);
  EXPECT_EQ(f.s().num_uncolored(), 0u);
  EXPECT_TRUE(testing::is_proper(f.graph, f.colors()));
  EXPECT_EQ(testing::audit_state(f.s()), "");
}

TEST(ActivateCFanTest, RejectsUnprimed) {
  BoundFixture f({{0, 1}}, {}, 2);
  PrimedCFan fan = make_primed_fan(f.s(), 0, 0, 1);
  fan.beta = kUncolored;
  EXPECT_THROW(activate_c_fan(f.s(), fan), Error);
}

TEST(ActivateCFanTest, RandomInstances) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 15;
    const Graph g = testing::make_graph(testing::random_simple_edges(n, rng() % (3 * n), rng));
    ColoringState st(g);
    std::vector<EdgeId> all(g.num_edges());
    std::iota(all.begin(), all.end(), 0);
    st.bind_scope(all, g.max_degree() + 1);
    random_partial_coloring(st, rng, 0.7 + 0.3 * (trial % 2));
    if (st.num_uncolored() == 0) continue;
    const EdgeId e = st.uncolored_edges()[rng() % st.num_uncolored()];
    const Vertex v = rng() % 2 == 0 ? g.endpoints(e).first : g.endpoints(e).second;
    const Color alpha = st.pick_missing(v);
    const std::size_t ell = st.num_uncolored();
    const PrimedCFan fan = make_primed_fan(st, v, e, alpha);
    std::string why;
    ASSERT_TRUE(is_valid_cfan(st, fan, &why)) << "trial " << trial << ": " << why;
    activate_c_fan(st, fan);
    ASSERT_EQ(st.num_uncolored(), ell - 1);
    ASSERT_NE(st.color(e), kUncolored);
    ASSERT_TRUE(testing::is_proper(g, {st.colors().begin(), st.colors().end()}, true)) << "trial " << trial;
  }
}

// Center 0 uses alpha = 1 on 0-3; leaves 1 and 2 miss alpha. Beta = 2 is
// free at the center and at 3, so the path is the single edge 0-3.
TEST(ActivateUFanTest, SingleEdgePath) {
  BoundFixture f({{0, 1}, {0, 2}, {0, 3}}, {0, 0, 1}, 4);
  UFan fan;
  fan.alpha = 1;
  fan.center = 0;
  fan.leaves = {1, 2};
  fan.edges = {0, 1};
  std::string why;
  ASSERT_TRUE(is_valid_ufan(f.s(), fan, &why)) << why;
  const UFanActivation act = activate_u_fan(f.s(), fan, 2);
  EXPECT_EQ(act.flip.length, 1u);
  EXPECT_EQ(act.removed_endpoint, kNoVertex);
  EXPECT_EQ(f.s().color(2), 2u);
  EXPECT_EQ(f.s().color(act.colored_leaf == 1 ? 0 : 1), 1u);
  EXPECT_EQ(f.s().num_uncolored(), 1u);
  EXPECT_EQ(fan.leaves.size(), 1u);
  EXPECT_TRUE(testing::is_proper(f.graph, f.colors(), true));
}

// Leaves 1, 2, 3; 0-4 = 1 and 4-3 = 2, so the path 0-4-3 ends at leaf 3.
TEST(ActivateUFanTest, PathEndsAtLeaf) {
  BoundFixture f({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 3}}, {0, 0, 0, 1, 2}, 5);
  UFan fan;
  fan.alpha = 1;
  fan.center = 0;
  fan.leaves = {1, 2, 3};
  fan.edges = {0, 1, 2};
  ASSERT_TRUE(is_valid_ufan(f.s(), fan));
  const std::size_t ell = f.s().num_uncolored();
  const UFanActivation act = activate_u_fan(f.s(), fan, 2);
  EXPECT_EQ(act.flip.endpoint, 3u);
  EXPECT_EQ(act.removed_endpoint, 3u);
  EXPECT_EQ(fan.leaves.size(), 1u);
  EXPECT_EQ(f.s().num_uncolored(), ell - 1);
  EXPECT_TRUE(testing::is_proper(f.graph, f.colors(), true));
  EXPECT_EQ(testing::audit_state(f.s()), "");
}

TEST(ActivateUFanTest, RejectsBadBeta) {
  BoundFixture f({{0, 1}, {0, 2}, {0, 3}}, {0, 0, 1}, 4);
  UFan fan;
  fan.alpha = 1;
  fan.center = 0;
  fan.leaves = {1, 2};
  fan.edges = {0, 1};
  EXPECT_THROW(activate_u_fan(f.s(), fan, 1), Error);
  UFan small = fan;
  small.remove_leaf_at(1);
  EXPECT_THROW(activate_u_fan(f.s(), small, 2), Error);
}

}  // namespace
}  // namespace edgecolor
