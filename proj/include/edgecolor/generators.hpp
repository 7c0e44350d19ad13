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

#ifndef EDGECOLOR_GENERATORS_HPP_
#define EDGECOLOR_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "edgecolor/io.hpp"

namespace edgecolor {

struct GeneratorParams {
  std::string family;
  std::size_t n = 0;
  std::size_t m = 0;       // gnm-random-simple, random-multigraph; 0 means 2n
  std::size_t degree = 0;  // random-regular-ish; random-multigraph stub count when nonzero
  std::uint64_t seed = 0;
};

// gnm-random-simple, random-multigraph, complete, star, cycle, path,
// bipartite-complete, random-regular-ish.
std::span<const std::string_view> generator_families();
bool generator_is_simple(std::string_view family);

// Deterministic per params. Random families repair isolated vertices by
// moving edge endpoints onto them. Throws Error{kInvalidParams}.
EdgeList generate(const GeneratorParams& params);

}  // namespace edgecolor

#endif  // EDGECOLOR_GENERATORS_HPP_
