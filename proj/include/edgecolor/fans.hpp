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

#ifndef EDGECOLOR_FANS_HPP_
#define EDGECOLOR_FANS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "edgecolor/coloring_state.hpp"

namespace edgecolor {

// Outcome of flipping a maximal two-colored path that starts at `path[0]`.
struct FlipRecord {
  Vertex endpoint = kNoVertex;
  std::size_t length = 0;
  std::vector<Vertex> path;
};

// A Vizing fan (alpha, center, x_0, ..., x_k): alpha is missing at the
// center, center-x_0 is uncolored, and for i >= 1 the edge center-x_i is
// colored with a color missing at x_{i-1}. `edges[i]` is center-x_i.
// The fan is primed once `beta` is set: beta is missing at x_k and is either
// missing at the center or the color of some fan edge.
struct PrimedCFan {
  Color alpha = kUncolored;
  Vertex center = kNoVertex;
  std::vector<Vertex> leaves;
  std::vector<EdgeId> edges;
  Color beta = kUncolored;

  // Loop iterations spent by make_primed_fan.
  std::size_t build_iterations = 0;

  std::size_t last() const { return leaves.size() - 1; }
};

// A center with at least two uncolored edges whose far ends all miss alpha,
// while alpha is used at the center. Fewer than two leaves is "degenerate".
struct UFan {
  Color alpha = kUncolored;
  Vertex center = kNoVertex;
  std::vector<Vertex> leaves;
  std::vector<EdgeId> edges;

  bool degenerate() const { return leaves.size() < 2; }
  void remove_leaf_at(std::size_t i) {
    leaves[i] = leaves.back();
    edges[i] = edges.back();
    leaves.pop_back();
    edges.pop_back();
  }
};

struct UFanActivation {
  FlipRecord flip;
  Vertex removed_endpoint = kNoVertex;  // leaf dropped because the flip ended there
  Vertex colored_leaf = kNoVertex;
};

// Checks the c-fan definition (and priming, when beta is set) against the
// live state. On failure writes the first broken condition to `why`.
bool is_valid_cfan(const ColoringState& state, const PrimedCFan& fan, std::string* why = nullptr);
bool is_valid_ufan(const ColoringState& state, const UFan& fan, std::string* why = nullptr);

// Flips the maximal path of colors a and b that has v as an endpoint.
// Throws Error{kNotPathEndpoint} if v misses neither color.
FlipRecord flip_path(ColoringState& state, Vertex v, Color a, Color b);

// Moves each color of center-x_i to center-x_{i-1} for i = 1..j and leaves
// center-x_j uncolored. The fan struct is not modified.
void shift_cfan(ColoringState& state, const PrimedCFan& fan, std::size_t j);

PrimedCFan make_primed_fan(ColoringState& state, Vertex center, EdgeId uncolored_edge, Color alpha);
// Same, locating the uncolored edge center-x0 by scanning the center.
PrimedCFan make_primed_fan_to(ColoringState& state, Vertex center, Vertex x0, Color alpha);

// Colors center-x_0 (after rotating the fan); returns the flipped path, which
// has length 0 when beta was already missing at the center.
FlipRecord activate_c_fan(ColoringState& state, const PrimedCFan& fan);

// Flips the (alpha, beta) path at the center so alpha becomes missing there,
// then colors one leaf edge with alpha. Leaves that stop qualifying are
// removed from `fan`.
UFanActivation activate_u_fan(ColoringState& state, UFan& fan, Color beta);

}  // namespace edgecolor

#endif  // EDGECOLOR_FANS_HPP_
