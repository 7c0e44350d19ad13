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

#ifndef EDGECOLOR_TYPES_HPP_
#define EDGECOLOR_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edgecolor {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
// Colors are 1-based; 0 is reserved for "uncolored".
using Color = std::uint32_t;

inline constexpr Color kUncolored = 0;
inline constexpr EdgeId kAbsent = std::numeric_limits<EdgeId>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

enum class ErrorCode {
  kSelfLoop,
  kIsolatedVertex,
  kVertexOutOfRange,
  kAlreadyColored,
  kColorConflict,
  kNotColored,
  kColorOutOfRange,
  kEdgeNotInScope,
  kNoUncoloredEdges,
  kDuplicateKey,
  kScopeNotEmpty,
  kNotPathEndpoint,
  kInvalidFan,
  kNotSimple,
  kTooLarge,
  kParseError,
  kMissingEdges,
  kInvalidParams,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every contract violation in the library is reported through this type. The
// code is what tests and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace edgecolor

#endif  // EDGECOLOR_TYPES_HPP_
