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

#include <string>
#include <utility>

namespace edgecolor {
namespace {

bool fail(std::string* why, std::string msg) {
  if (why != nullptr) *why = std::move(msg);
  return false;
}

bool valid_color(const ColoringState& state, Color c) { return c != kUncolored && c <= state.palette_size(); }

bool joins(const Graph& g, EdgeId e, Vertex center, Vertex leaf) {
  const auto [u, v] = g.endpoints(e);
  return (u == center && v == leaf) || (v == center && u == leaf);
}

// Chain condition of a c-fan for leaves 1..upto.
bool chain_ok(const ColoringState& state, const PrimedCFan& fan, std::size_t upto, std::string* why) {
  for (std::size_t i = 1; i <= upto; ++i) {
    const Color c = state.color(fan.edges[i]);
    if (c == kUncolored) return fail(why, "fan edge " + std::to_string(i) + " is uncolored");
    if (!state.is_missing(fan.leaves[i - 1], c)) {
      return fail(why, "color of fan edge " + std::to_string(i) + " is not missing at the previous leaf");
    }
  }
  return true;
}

}  // namespace

bool is_valid_cfan(const ColoringState& state, const PrimedCFan& fan, std::string* why) {
  const Graph& g = state.graph();
  if (fan.leaves.empty() || fan.leaves.size() != fan.edges.size()) return fail(why, "fan has no leaves");
  if (!valid_color(state, fan.alpha)) return fail(why, "alpha outside the palette");
  if (fan.center >= g.num_vertices()) return fail(why, "center out of range");
  if (!state.is_missing(fan.center, fan.alpha)) return fail(why, "alpha is not missing at the center");
  for (std::size_t i = 0; i < fan.leaves.size(); ++i) {
    if (!state.in_scope(fan.edges[i])) return fail(why, "fan edge outside the scope");
    if (!joins(g, fan.edges[i], fan.center, fan.leaves[i])) return fail(why, "fan edge does not join center and leaf");
  }
  if (state.color(fan.edges[0]) != kUncolored) return fail(why, "first fan edge is colored");
  if (!chain_ok(state, fan, fan.last(), why)) return false;
  if (fan.beta == kUncolored) return true;
  if (!valid_color(state, fan.beta)) return fail(why, "beta outside the palette");
  if (!state.is_missing(fan.leaves.back(), fan.beta)) return fail(why, "beta is not missing at the last leaf");
  if (state.is_missing(fan.center, fan.beta)) return true;
  const EdgeId e = state.edge_with_color(fan.center, fan.beta);
  for (std::size_t i = 1; i < fan.edges.size(); ++i) {
    if (fan.edges[i] == e) return true;
  }
  return fail(why, "beta is used at the center outside the fan");
}

bool is_valid_ufan(const ColoringState& state, const UFan& fan, std::string* why) {
  const Graph& g = state.graph();
  if (fan.leaves.size() != fan.edges.size()) return fail(why, "leaf and edge lists differ");
  if (fan.degenerate()) return fail(why, "u-fan has fewer than two leaves");
  if (!valid_color(state, fan.alpha)) return fail(why, "alpha outside the palette");
  if (fan.center >= g.num_vertices()) return fail(why, "center out of range");
  if (state.is_missing(fan.center, fan.alpha)) return fail(why, "alpha is missing at the center");
  for (std::size_t i = 0; i < fan.leaves.size(); ++i) {
    if (!state.in_scope(fan.edges[i])) return fail(why, "fan edge outside the scope");
    if (!joins(g, fan.edges[i], fan.center, fan.leaves[i])) return fail(why, "fan edge does not join center and leaf");
    if (state.color(fan.edges[i]) != kUncolored) return fail(why, "u-fan edge is colored");
    if (!state.is_missing(fan.leaves[i], fan.alpha)) return fail(why, "alpha is not missing at a leaf");
  }
  return true;
}

FlipRecord flip_path(ColoringState& state, Vertex v, Color a, Color b) {
  const bool miss_a = state.is_missing(v, a);
  const bool miss_b = state.is_missing(v, b);
  FlipRecord rec;
  rec.path.push_back(v);
  rec.endpoint = v;
  if (miss_a && miss_b) return rec;
  if (a == b || (!miss_a && !miss_b)) {
    throw Error(ErrorCode::kNotPathEndpoint, "vertex " + std::to_string(v) + " is not an endpoint of a two-colored path");
  }

  const Graph& g = state.graph();
  std::vector<EdgeId> edges;
  Color c = miss_a ? b : a;
  Vertex x = v;
  for (;;) {
    const EdgeId e = state.edge_with_color(x, c);
    if (e == kAbsent) break;
    edges.push_back(e);
    x = g.other_endpoint(e, x);
    rec.path.push_back(x);
    c = c == a ? b : a;
  }
  for (const EdgeId e : edges) state.unset_color(e);
  // Edges alternate a, b, a, ... starting from the color used at v.
  Color next = miss_a ? a : b;
  for (const EdgeId e : edges) {
    state.set_color(e, next);
    next = next == a ? b : a;
  }
  rec.endpoint = x;
  rec.length = edges.size();
  return rec;
}

void shift_cfan(ColoringState& state, const PrimedCFan& fan, std::size_t j) {
  if (fan.leaves.empty() || j > fan.last()) throw Error(ErrorCode::kInvalidFan, "shift index past the last leaf");
  if (state.color(fan.edges[0]) != kUncolored) throw Error(ErrorCode::kInvalidFan, "first fan edge is colored");
  std::string why;
  if (!chain_ok(state, fan, j, &why)) throw Error(ErrorCode::kInvalidFan, why);
  std::vector<Color> moved(j + 1, kUncolored);
  for (std::size_t i = 1; i <= j; ++i) {
    moved[i] = state.color(fan.edges[i]);
    state.unset_color(fan.edges[i]);
  }
  for (std::size_t i = 1; i <= j; ++i) state.set_color(fan.edges[i - 1], moved[i]);
}

PrimedCFan make_primed_fan(ColoringState& state, Vertex center, EdgeId uncolored_edge, Color alpha) {
  const Graph& g = state.graph();
  if (!state.in_scope(uncolored_edge) || state.color(uncolored_edge) != kUncolored) {
    throw Error(ErrorCode::kInvalidFan, "first fan edge must be an uncolored scope edge");
  }
  const auto [a, b] = g.endpoints(uncolored_edge);
  if (a != center && b != center) throw Error(ErrorCode::kInvalidFan, "first fan edge is not incident to the center");
  if (!state.is_missing(center, alpha)) throw Error(ErrorCode::kInvalidFan, "alpha is not missing at the center");

  PrimedCFan fan;
  fan.alpha = alpha;
  fan.center = center;
  fan.leaves.push_back(a == center ? b : a);
  fan.edges.push_back(uncolored_edge);
  state.begin_marks();
  for (;;) {
    ++fan.build_iterations;
    const Color beta = state.pick_missing(fan.leaves.back());
    if (state.is_missing(center, beta)) {
      fan.beta = beta;
      break;
    }
    const EdgeId e = state.edge_with_color(center, beta);
    const Vertex x = g.other_endpoint(e, center);
    if (state.marked(x)) {
      fan.beta = beta;
      break;
    }
    state.mark(x);
    fan.leaves.push_back(x);
    fan.edges.push_back(e);
  }
  return fan;
}

PrimedCFan make_primed_fan_to(ColoringState& state, Vertex center, Vertex x0, Color alpha) {
  for (const Incidence& inc : state.scoped_incident(center)) {
    if (inc.other == x0 && state.color(inc.edge) == kUncolored) return make_primed_fan(state, center, inc.edge, alpha);
  }
  throw Error(ErrorCode::kInvalidFan, "no uncolored scope edge between center and x0");
}

FlipRecord activate_c_fan(ColoringState& state, const PrimedCFan& fan) {
  std::string why;
  if (fan.beta == kUncolored) throw Error(ErrorCode::kInvalidFan, "fan is not primed");
  if (!is_valid_cfan(state, fan, &why)) throw Error(ErrorCode::kInvalidFan, why);
  const std::size_t k = fan.last();
  const Vertex v = fan.center;

  if (state.is_missing(v, fan.beta)) {
    shift_cfan(state, fan, k);
    state.set_color(fan.edges[k], fan.beta);
    FlipRecord rec;
    rec.endpoint = v;
    rec.path.push_back(v);
    return rec;
  }

  const EdgeId eb = state.edge_with_color(v, fan.beta);
  std::size_t j = 1;
  while (fan.edges[j] != eb) ++j;  // validated above: eb is a fan edge

  FlipRecord rec = flip_path(state, v, fan.alpha, fan.beta);
  if (rec.endpoint != fan.leaves[j - 1]) {
    shift_cfan(state, fan, j - 1);
    state.set_color(fan.edges[j - 1], fan.beta);
  } else {
    shift_cfan(state, fan, k);
    state.set_color(fan.edges[k], fan.beta);
  }
  return rec;
}

UFanActivation activate_u_fan(ColoringState& state, UFan& fan, Color beta) {
  std::string why;
  if (!is_valid_ufan(state, fan, &why)) throw Error(ErrorCode::kInvalidFan, why);
  if (!valid_color(state, beta) || beta == fan.alpha || !state.is_missing(fan.center, beta)) {
    throw Error(ErrorCode::kInvalidFan, "beta must differ from alpha and be missing at the center");
  }
  UFanActivation out;
  out.flip = flip_path(state, fan.center, fan.alpha, beta);
  const Vertex w = out.flip.endpoint;
  for (std::size_t i = 0; i < fan.leaves.size(); ++i) {
    if (fan.leaves[i] == w) {
      fan.remove_leaf_at(i);
      out.removed_endpoint = w;
      break;
    }
  }
  out.colored_leaf = fan.leaves[0];
  state.set_color(fan.edges[0], fan.alpha);
  fan.remove_leaf_at(0);
  return out;
}

}  // namespace edgecolor
