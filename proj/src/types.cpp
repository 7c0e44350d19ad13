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

#include "edgecolor/types.hpp"

namespace edgecolor {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kIsolatedVertex: return "IsolatedVertex";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kAlreadyColored: return "AlreadyColored";
    case ErrorCode::kColorConflict: return "ColorConflict";
    case ErrorCode::kNotColored: return "NotColored";
    case ErrorCode::kColorOutOfRange: return "ColorOutOfRange";
    case ErrorCode::kEdgeNotInScope: return "EdgeNotInScope";
    case ErrorCode::kNoUncoloredEdges: return "NoUncoloredEdges";
    case ErrorCode::kDuplicateKey: return "DuplicateKey";
    case ErrorCode::kScopeNotEmpty: return "ScopeNotEmpty";
    case ErrorCode::kNotPathEndpoint: return "NotPathEndpoint";
    case ErrorCode::kInvalidFan: return "InvalidFan";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingEdges: return "MissingEdges";
    case ErrorCode::kInvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

}  // namespace edgecolor
