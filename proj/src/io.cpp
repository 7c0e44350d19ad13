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

#include "edgecolor/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

namespace edgecolor {
namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

bool skippable(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  return first == std::string_view::npos || s[first] == '#';
}

// Splits on blanks and parses exactly `count` unsigned integers.
bool parse_numbers(std::string_view s, std::uint64_t* out, std::size_t count) {
  std::size_t i = 0;
  for (std::size_t k = 0; k < count; ++k) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    if (i == s.size()) return false;
    const auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), out[k]);
    if (ec != std::errc()) return false;
    i = static_cast<std::size_t>(ptr - s.data());
    if (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') return false;
  }
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return i == s.size();
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  return in;
}

}  // namespace

EdgeList read_edge_list(std::istream& in) {
  EdgeList list;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t expected = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::string_view view(line);
    if (!have_header) {
      const auto first = view.find_first_not_of(" \t");
      if (view.substr(first, 3) != "ec " && view.substr(first, 3) != "ec\t") parse_fail(lineno, "expected 'ec <n> <m>'");
      std::uint64_t nm[2];
      if (!parse_numbers(view.substr(first + 2), nm, 2)) parse_fail(lineno, "expected 'ec <n> <m>'");
      if (nm[0] > std::numeric_limits<Vertex>::max() - 1 || nm[1] > std::numeric_limits<EdgeId>::max() - 1) {
        parse_fail(lineno, "graph too large");
      }
      list.n = nm[0];
      expected = nm[1];
      list.edges.reserve(expected);
      have_header = true;
      continue;
    }
    std::uint64_t uv[2];
    if (!parse_numbers(view, uv, 2)) parse_fail(lineno, "expected '<u> <v>'");
    if (uv[0] >= list.n || uv[1] >= list.n) parse_fail(lineno, "vertex id out of range");
    if (list.edges.size() == expected) parse_fail(lineno, "more edges than declared");
    list.edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (!have_header) throw Error(ErrorCode::kParseError, "missing 'ec <n> <m>' header");
  if (list.edges.size() != expected) {
    throw Error(ErrorCode::kParseError, "declared " + std::to_string(expected) + " edges, found " +
                                            std::to_string(list.edges.size()));
  }
  return list;
}

EdgeList read_edge_list_file(const std::string& path) {
  std::ifstream in = open_file(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeList& list) {
  out << "ec " << list.n << ' ' << list.edges.size() << '\n';
  for (const auto& [u, v] : list.edges) out << u << ' ' << v << '\n';
}

std::vector<Color> read_coloring(std::istream& in, std::size_t num_edges) {
  std::vector<Color> colors(num_edges, kUncolored);
  std::vector<std::uint8_t> seen(num_edges, 0);
  std::string line;
  std::size_t lineno = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::uint64_t ec[2];
    if (!parse_numbers(line, ec, 2)) parse_fail(lineno, "expected '<edge-index> <color>'");
    if (ec[0] >= num_edges) parse_fail(lineno, "edge index out of range");
    if (ec[1] == 0 || ec[1] > std::numeric_limits<Color>::max() - 1) parse_fail(lineno, "color must be positive");
    if (seen[ec[0]]) parse_fail(lineno, "edge listed twice");
    seen[ec[0]] = 1;
    colors[ec[0]] = static_cast<Color>(ec[1]);
    ++count;
  }
  if (count != num_edges) {
    throw Error(ErrorCode::kMissingEdges, "coloring lists " + std::to_string(count) + " of " +
                                              std::to_string(num_edges) + " edges");
  }
  return colors;
}

std::vector<Color> read_coloring_file(const std::string& path, std::size_t num_edges) {
  std::ifstream in = open_file(path);
  return read_coloring(in, num_edges);
}

void write_coloring(std::ostream& out, std::span<const Color> colors) {
  for (std::size_t e = 0; e < colors.size(); ++e) out << e << ' ' << colors[e] << '\n';
}

}  // namespace edgecolor
