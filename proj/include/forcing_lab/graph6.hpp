// Copyright 2026 The forcing-lab Authors
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

#ifndef FORCING_LAB_GRAPH6_HPP_
#define FORCING_LAB_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "forcing_lab/graph.hpp"

namespace forcing_lab {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column-major) packed big-endian into 6-bit groups, each offset by 63.
// Orders up to 62 use a single size byte, which covers the 32-vertex cap.

inline std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(63 + g.order()));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range in '" + std::string(text) + "'");
  }
  if (text[0] == 126) throw ParseError("graph6 orders above 62 are not supported");
  const int order = text[0] - 63;
  if (order > kMaxOrder) {
    throw ParseError("graph6 order " + std::to_string(order) + " exceeds 32");
  }
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != 1 + body) {
    throw ParseError("graph6 length mismatch for order " + std::to_string(order));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((text.back() - 63) & pad_mask) throw ParseError("graph6 padding bits must be zero");
  }
  return Graph(order, edges);
}

}  // namespace forcing_lab

#endif  // FORCING_LAB_GRAPH6_HPP_
