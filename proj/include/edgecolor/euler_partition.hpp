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

#ifndef EDGECOLOR_EULER_PARTITION_HPP_
#define EDGECOLOR_EULER_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "edgecolor/graph.hpp"

namespace edgecolor {

struct Partition {
  std::vector<EdgeId> left;
  std::vector<EdgeId> right;

  std::size_t open_tours = 0;
  std::size_t closed_tours = 0;
  std::size_t odd_closed_tours = 0;
  // Odd closed tours whose start vertex could not be paired with another odd
  // closed tour starting at the same vertex. Only their start vertices can
  // exceed ceil(deg / 2) on one side, by exactly one.
  std::size_t unpaired_odd_closed_tours = 0;
};

// Scratch arrays indexed by vertex, reused across calls so that a call costs
// O(|scope| log |scope|) rather than O(n).
class PartitionWorkspace {
 public:
  explicit PartitionWorkspace(std::size_t num_vertices)
      : stamp_(num_vertices, 0), local_id_(num_vertices, 0) {}

 private:
  friend Partition euler_partition(const Graph&, std::span<const EdgeId>, PartitionWorkspace&);

  std::uint32_t generation_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> local_id_;
};

// Splits `scope` into two halves by walking an Euler partition of the
// subgraph and assigning tour edges alternately. Side sizes differ by at most
// one (left gets the extra edge). Every vertex gets at most ceil(deg / 2)
// edges on each side, except the start vertex of an unpaired odd closed tour,
// which may get ceil(deg / 2) + 1. Deterministic in (graph, scope order).
Partition euler_partition(const Graph& graph, std::span<const EdgeId> scope, PartitionWorkspace& workspace);
Partition euler_partition(const Graph& graph, std::span<const EdgeId> scope);

}  // namespace edgecolor

#endif  // EDGECOLOR_EULER_PARTITION_HPP_
