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

#ifndef EDGECOLOR_PAIR_DICTIONARY_HPP_
#define EDGECOLOR_PAIR_DICTIONARY_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "edgecolor/types.hpp"

namespace edgecolor {

// Maps (vertex, color) to the edge at that vertex with that color.
//
// Keys come from a universe of U = n * (max_degree + 1) pairs and at most
// M = 2 * m entries are live at once. The universe is split into ranges of
// b = ceil(sqrt(U / M)) consecutive keys; a range owns a block of b slots only
// while it holds at least one entry. Construction writes O(U / b + M * b) =
// O(sqrt(U * M)) cells, and search, insert and erase are O(1).
//
// Color c maps to key offset c mod (max_degree + 1), so the palette
// 1..max_degree+1 covers offsets 0..max_degree of each vertex exactly once.
class PairDictionary {
 public:
  struct Slot {
    std::size_t range;
    std::size_t offset;
  };

  PairDictionary(std::size_t num_vertices, std::size_t max_degree, std::size_t num_edges);

  EdgeId search(Vertex v, Color c) const {
    const Slot s = locate(v, c);
    const std::uint32_t block = top_[s.range];
    return block == kNullBlock ? kAbsent : cells_[block * block_size_ + s.offset];
  }

  // Throws Error{kDuplicateKey} if (v, c) is already present.
  void insert(Vertex v, Color c, EdgeId e);

  // Erasing an absent key does nothing.
  void erase(Vertex v, Color c);

  Slot locate(Vertex v, Color c) const {
    const std::size_t index = static_cast<std::size_t>(v) * stride_ + (c % stride_);
    return {index / block_size_, index % block_size_};
  }

  std::size_t universe() const { return universe_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t block_size() const { return block_size_; }
  std::size_t num_ranges() const { return top_.size(); }
  std::size_t size() const { return size_; }
  std::size_t free_blocks() const { return free_.size(); }
  std::size_t range_count(std::size_t range) const { return counts_[range]; }
  bool range_has_block(std::size_t range) const { return top_[range] != kNullBlock; }
  std::size_t max_color() const { return stride_; }
  std::size_t num_vertices() const { return num_vertices_; }

  // Number of memory cells written by the constructor.
  std::size_t initialization_writes() const { return init_writes_; }

 private:
  static constexpr std::uint32_t kNullBlock = UINT32_MAX;

  void check_key(Vertex v, Color c) const;

  std::size_t num_vertices_;
  std::size_t stride_;  // max_degree + 1
  std::size_t universe_;
  std::size_t capacity_;
  std::size_t block_size_;
  std::size_t size_ = 0;
  std::size_t init_writes_ = 0;

  std::vector<std::uint32_t> top_;     // range -> block or kNullBlock
  std::vector<std::uint32_t> counts_;  // range -> live entries
  std::vector<EdgeId> cells_;          // capacity_ blocks of block_size_ slots
  std::vector<std::uint32_t> free_;    // unused blocks
};

}  // namespace edgecolor

#endif  // EDGECOLOR_PAIR_DICTIONARY_HPP_
