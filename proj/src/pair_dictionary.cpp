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

#include <algorithm>
#include <string>

namespace edgecolor {
namespace {

// Smallest b with b * b * capacity >= universe, i.e. ceil(sqrt(universe / capacity)).
std::size_t ceil_sqrt_ratio(std::size_t universe, std::size_t capacity) {
  std::size_t b = 1;
  while (b * b * capacity < universe) ++b;
  return b;
}

}  // namespace

PairDictionary::PairDictionary(std::size_t num_vertices, std::size_t max_degree, std::size_t num_edges)
    : num_vertices_(num_vertices),
      stride_(max_degree + 1),
      universe_(num_vertices * (max_degree + 1)),
      capacity_(std::max<std::size_t>(1, 2 * num_edges)),
      block_size_(ceil_sqrt_ratio(universe_, capacity_)) {
  const std::size_t ranges = (universe_ + block_size_ - 1) / block_size_;
  top_.assign(ranges, kNullBlock);
  counts_.assign(ranges, 0);
  cells_.assign(capacity_ * block_size_, kAbsent);
  free_.resize(capacity_);
  for (std::size_t i = 0; i < capacity_; ++i) {
    free_[i] = static_cast<std::uint32_t>(capacity_ - 1 - i);
  }
  init_writes_ = 2 * ranges + cells_.size() + free_.size();
}

void PairDictionary::check_key(Vertex v, Color c) const {
  if (v >= num_vertices_) {
    throw Error(ErrorCode::kVertexOutOfRange, "dictionary vertex " + std::to_string(v));
  }
  if (c == kUncolored || c > stride_) {
    throw Error(ErrorCode::kColorOutOfRange,
                "dictionary color " + std::to_string(c) + " outside [1," + std::to_string(stride_) + "]");
  }
}

void PairDictionary::insert(Vertex v, Color c, EdgeId e) {
  check_key(v, c);
  const Slot s = locate(v, c);
  std::uint32_t block = top_[s.range];
  if (block == kNullBlock) {
    if (free_.empty()) {
      throw Error(ErrorCode::kTooLarge, "dictionary holds more than its capacity of entries");
    }
    block = free_.back();
    free_.pop_back();
    top_[s.range] = block;
  }
  EdgeId& cell = cells_[block * block_size_ + s.offset];
  if (cell != kAbsent) {
    throw Error(ErrorCode::kDuplicateKey,
                "(" + std::to_string(v) + ", " + std::to_string(c) + ") already maps to edge " + std::to_string(cell));
  }
  cell = e;
  ++counts_[s.range];
  ++size_;
}

void PairDictionary::erase(Vertex v, Color c) {
  check_key(v, c);
  const Slot s = locate(v, c);
  const std::uint32_t block = top_[s.range];
  if (block == kNullBlock) return;
  EdgeId& cell = cells_[block * block_size_ + s.offset];
  if (cell == kAbsent) return;
  cell = kAbsent;
  --size_;
  if (--counts_[s.range] == 0) {
    top_[s.range] = kNullBlock;
    free_.push_back(block);
  }
}

}  // namespace edgecolor
