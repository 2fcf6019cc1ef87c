// Copyright 2026 The rrdom Authors
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

#include "rrdom/graph.hpp"

#include <algorithm>

namespace rrdom {

namespace {

constexpr int kG6Bias = 63;   // printable offset for 6-bit groups
constexpr int kG6Max = 126;   // '~'

std::string_view strip_line(std::string_view line) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.substr(0, kPrefix.size()) == kPrefix) line.remove_prefix(kPrefix.size());
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
    line.remove_suffix(1);
  return line;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = strip_line(line);
  if (line.empty())
    throw Graph6Error(Graph6ErrorKind::kBadHeader, "graph6: empty line");

  std::size_t pos = 0;
  long order = 0;
  if (line[0] == '~') {
    // Extended order field: '~' followed by 18 bits in three bytes. The
    // '~~' (36-bit) form always encodes an order far beyond our cap.
    if (line.size() >= 2 && line[1] == '~')
      throw Graph6Error(Graph6ErrorKind::kOutOfRange,
                        "graph6: order exceeds 64");
    if (line.size() < 4)
      throw Graph6Error(Graph6ErrorKind::kBadHeader,
                        "graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) {
      const unsigned char c = static_cast<unsigned char>(line[i]);
      if (c < kG6Bias || c > kG6Max)
        throw Graph6Error(Graph6ErrorKind::kBadHeader,
                          "graph6: invalid byte in order field");
      order = order * 64 + (c - kG6Bias);
    }
    pos = 4;
  } else {
    const unsigned char c = static_cast<unsigned char>(line[0]);
    if (c < kG6Bias || c > kG6Max)
      throw Graph6Error(Graph6ErrorKind::kBadHeader,
                        "graph6: invalid order byte");
    order = c - kG6Bias;
    pos = 1;
  }

  if (order < 1 || order > kMaxVertices)
    throw Graph6Error(Graph6ErrorKind::kOutOfRange,
                      "graph6: order " + std::to_string(order) +
                          " outside supported range [1, 64]");

  const int n = static_cast<int>(order);
  const int bits = n * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos < bytes)
    throw Graph6Error(Graph6ErrorKind::kTruncated,
                      "graph6: edge bit field is truncated");
  if (line.size() - pos > bytes)
    throw Graph6Error(Graph6ErrorKind::kTrailingData,
                      "graph6: trailing bytes after edge bit field");

  Graph g(n);
  // Edge bits run over the upper triangle column by column:
  // (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
  int bi = 0, row = 0, col = 1;
  for (std::size_t t = 0; t < bytes; ++t) {
    const unsigned char c = static_cast<unsigned char>(line[pos + t]);
    if (c < kG6Bias || c > kG6Max)
      throw Graph6Error(Graph6ErrorKind::kBadCharacter,
                        "graph6: invalid byte in edge bit field");
    const int group = c - kG6Bias;
    for (int b = 5; b >= 0; --b, ++bi) {
      const int bit = (group >> b) & 1;
      if (bi >= bits) {
        if (bit)
          throw Graph6Error(Graph6ErrorKind::kTrailingData,
                            "graph6: nonzero padding bits");
        continue;
      }
      if (bit) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Bias));
    out.push_back(static_cast<char>((n & 63) + kG6Bias));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kG6Bias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kG6Bias));
  }
  return out;
}

bool is_connected(const Graph& g) {
  std::uint64_t visited = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~visited;
    visited |= frontier;
  }
  return visited == g.vertex_mask();
}

int min_degree(const Graph& g) {
  int best = kMaxVertices;
  for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_cycle(const Graph& g, int n) {
  if (g.n() != n || n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

std::optional<SpiderProfile> spider_profile(const Graph& g) {
  const int n = g.n();
  if (g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      if (center != -1) return std::nullopt;  // more than one branch vertex
      center = v;
    }
  }
  if (center == -1) return std::nullopt;  // a path, not a spider

  SpiderProfile profile;
  profile.center = center;
  for_each_bit(g.neighbors(center), [&](int first) {
    int prev = center, cur = first, len = 1;
    while (g.degree(cur) == 2) {
      const std::uint64_t rest =
          g.neighbors(cur) & ~(std::uint64_t{1} << prev);
      prev = cur;
      cur = std::countr_zero(rest);
      ++len;
    }
    profile.legs.push_back(len);
  });
  std::sort(profile.legs.begin(), profile.legs.end());
  for (int len : profile.legs)
    if (len % 3 != 0) ++profile.good_count;
  return profile;
}

std::optional<ReduciblePath> find_reducible_p5(const Graph& g) {
  const int n = g.n();
  if (n < 5) return std::nullopt;
  auto other_neighbor = [&](int v, int from) {
    return std::countr_zero(g.neighbors(v) & ~(std::uint64_t{1} << from));
  };
  // Degree-2 internal vertices force the walk, so scanning (x, u) pairs in
  // order yields the lexicographically least tuple.
  for (int x = 0; x < n; ++x) {
    bool found = false;
    ReduciblePath best{};
    for_each_bit(g.neighbors(x), [&](int u) {
      if (found || g.degree(u) != 2) return;
      const int v = other_neighbor(u, x);
      if (v == x || g.degree(v) != 2) return;
      const int w = other_neighbor(v, u);
      if (w == x || g.degree(w) != 2) return;
      const int y = other_neighbor(w, v);
      if (y == x || g.has_edge(x, y)) return;
      // Degree constraints already rule out every other chord.
      best = ReduciblePath{x, u, v, w, y};
      found = true;
    });
    if (found) return best;
  }
  return std::nullopt;
}

}  // namespace rrdom
