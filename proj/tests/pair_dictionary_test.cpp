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


#include "edgecolor/pair_dictionary.hpp"

#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "gtest/gtest.h"

namespace edgecolor {
namespace {

TEST(PairDictionaryTest, FreshIsEmpty) {
  const PairDictionary dict(8, 3, 8);
  for (Vertex v = 0; v < 8; ++v) {
    for (Color c = 1; c <= 4; ++c) EXPECT_EQ(dict.search(v, c), kAbsent);
  }
  EXPECT_EQ(dict.size(), 0u);
}

// U = 8 * 4 = 32 keys, M = 16 entries, b = ceil(sqrt(2)) = 2.
TEST(PairDictionaryTest, Geometry) {
  const PairDictionary dict(8, 3, 8);
  EXPECT_EQ(dict.universe(), 32u);
  EXPECT_EQ(dict.capacity(), 16u);
  EXPECT_EQ(dict.block_size(), 2u);
  EXPECT_EQ(dict.num_ranges(), 16u);
  const PairDictionary::Slot s = dict.locate(5, 2);
  EXPECT_EQ(s.range, 11u);
  EXPECT_EQ(s.offset, 0u);
}

TEST(PairDictionaryTest, InsertSearchErase) {
  PairDictionary dict(8, 3, 8);
  dict.insert(5, 2, 7);
  EXPECT_EQ(dict.search(5, 2), 7u);
  EXPECT_EQ(dict.search(5, 3), kAbsent);
  dict.erase(5, 2);
  EXPECT_EQ(dict.search(5, 2), kAbsent);
}

TEST(PairDictionaryTest, RangeLifecycle) {
  PairDictionary dict(8, 3, 8);
  const std::size_t free0 = dict.free_blocks();
  const std::size_t k = dict.locate(5, 2).range;
  EXPECT_FALSE(dict.range_has_block(k));
  dict.insert(5, 2, 1);
  EXPECT_TRUE(dict.range_has_block(k));
  EXPECT_EQ(dict.range_count(k), 1u);
  ASSERT_EQ(dict.locate(5, 3).range, k);
  dict.insert(5, 3, 2);
  EXPECT_EQ(dict.range_count(k), 2u);
  EXPECT_EQ(dict.free_blocks(), free0 - 1);
  dict.erase(5, 2);
  EXPECT_TRUE(dict.range_has_block(k));
  dict.erase(5, 3);
  EXPECT_FALSE(dict.range_has_block(k));
  EXPECT_EQ(dict.free_blocks(), free0);
}

TEST(PairDictionaryTest, FreeListConserved) {
  PairDictionary dict(8, 3, 8);
  const std::size_t free0 = dict.free_blocks();
  EXPECT_GE(free0, dict.capacity());
  std::vector<std::pair<Vertex, Color>> keys;
  for (Vertex v = 0; v < 8 && keys.size() < 16; ++v) {
    for (Color c = 1; c <= 2; ++c) keys.emplace_back(v, c);
  }
  for (std::size_t i = 0; i < keys.size(); ++i) dict.insert(keys[i].first, keys[i].second, static_cast<EdgeId>(i));
  EXPECT_EQ(dict.size(), 16u);
  for (const auto& [v, c] : keys) dict.erase(v, c);
  EXPECT_EQ(dict.free_blocks(), free0);
  EXPECT_EQ(dict.size(), 0u);
}

TEST(PairDictionaryTest, EraseAbsentIsNoop) {
  PairDictionary dict(8, 3, 8);
  dict.insert(1, 1, 3);
  const std::size_t free0 = dict.free_blocks();
  dict.erase(6, 2);
  dict.erase(1, 2);
  EXPECT_EQ(dict.free_blocks(), free0);
  EXPECT_EQ(dict.size(), 1u);
  EXPECT_EQ(dict.search(1, 1), 3u);
}

TEST(PairDictionaryTest, DuplicateKey) {
  PairDictionary dict(4, 2, 4);
  dict.insert(0, 1, 0);
  try {
    dict.insert(0, 1, 1);
    FAIL() << "expected DuplicateKey";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDuplicateKey);
  }
}

TEST(PairDictionaryTest, ColorRange) {
  PairDictionary dict(4, 2, 4);
  EXPECT_EQ(dict.max_color(), 3u);
  dict.insert(2, 3, 9);
  EXPECT_EQ(dict.search(2, 3), 9u);
  EXPECT_EQ(dict.search(2, 1), kAbsent);
  EXPECT_EQ(dict.search(2, 2), kAbsent);
}

TEST(PairDictionaryTest, InitializationIsSublinearInUniverse) {
  // U = 10^4 * 1001, M = 2m, so sqrt(U * M) is far below U.
  const PairDictionary dict(10000, 1000, 20000);
  const double root = std::sqrt(static_cast<double>(dict.universe()) * static_cast<double>(dict.capacity()));
  EXPECT_LT(dict.initialization_writes(), dict.universe() / 5);
  EXPECT_LE(static_cast<double>(dict.initialization_writes()), 4.0 * root + 2.0 * dict.capacity());
}

TEST(PairDictionaryTest, MatchesReferenceMap) {
  constexpr Vertex kN = 30;
  constexpr std::size_t kD = 6;
  PairDictionary dict(kN, kD, kN * kD / 2);
  std::map<std::pair<Vertex, Color>, EdgeId> ref;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Vertex> pv(0, kN - 1);
  std::uniform_int_distribution<Color> pc(1, kD + 1);
  for (int op = 0; op < 10000; ++op) {
    const Vertex v = pv(rng);
    const Color c = pc(rng);
    const auto it = ref.find({v, c});
    if (it == ref.end() && ref.size() < dict.capacity() && rng() % 2 == 0) {
      const EdgeId e = static_cast<EdgeId>(op);
      dict.insert(v, c, e);
      ref[{v, c}] = e;
    } else if (it != ref.end()) {
      dict.erase(v, c);
      ref.erase(it);
    }
    ASSERT_EQ(dict.size(), ref.size());
    for (int probe = 0; probe < 4; ++probe) {
      const Vertex qv = pv(rng);
      const Color qc = pc(rng);
      const auto r = ref.find({qv, qc});
      ASSERT_EQ(dict.search(qv, qc), r == ref.end() ? kAbsent : r->second);
    }
  }
  for (const auto& [key, e] : ref) EXPECT_EQ(dict.search(key.first, key.second), e);
}

}  // namespace
}  // namespace edgecolor
