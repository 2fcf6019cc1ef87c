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

#ifndef RRDOM_GRAPH_HPP_
#define RRDOM_GRAPH_HPP_

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rrdom {

inline constexpr int kMaxVertices = 64;

/// Undirected simple graph on 1..64 vertices with one adjacency bitset per
/// vertex. Instances are cheap to copy and, once built, safe to share
/// between threads; all queries below are pure functions.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [1, 64]");
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  int n() const { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }

  /// Neighbor set of v as a bitmask.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
  }

  /// Mask with one bit per vertex.
  std::uint64_t vertex_mask() const {
    return n_ == kMaxVertices ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n_) - 1;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }

  int n_;
  std::vector<std::uint64_t> adj_;
};

/// Calls f(v) for every set bit of mask, in increasing order.
template <typename F>
void for_each_bit(std::uint64_t mask, F&& f) {
  while (mask) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

// ---------------------------------------------------------------------------
// graph6 interchange format (one graph per text line).

enum class Graph6ErrorKind {
  kBadHeader,     // missing or malformed order field
  kOutOfRange,    // encoded order outside [1, 64]
  kTruncated,     // line ends before the edge bit field is complete
  kBadCharacter,  // byte outside the printable graph6 alphabet
  kTrailingData,  // extra bytes, or nonzero padding bits
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6ErrorKind kind() const { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" prefix and a
/// trailing carriage return. Throws Graph6Error on malformed input.
Graph parse_graph6(std::string_view line);

/// Encodes a graph as a graph6 line (without newline).
std::string write_graph6(const Graph& g);

// ---------------------------------------------------------------------------
// Structural queries.

/// True iff every vertex is reachable from vertex 0. K1 is connected.
bool is_connected(const Graph& g);

int min_degree(const Graph& g);

/// True iff g is the cycle on n vertices: connected, order n, 2-regular.
bool is_cycle(const Graph& g, int n);

/// A spider is a tree with exactly one vertex of degree >= 3 (the center);
/// its legs are the maximal paths leaving the center. A leg is good if its
/// length is not a multiple of 3.
struct SpiderProfile {
  int center = 0;
  std::vector<int> legs;  // edge lengths, sorted ascending
  int good_count = 0;
};

/// Profile of g if it is a spider, nullopt otherwise.
std::optional<SpiderProfile> spider_profile(const Graph& g);

/// Induced path x-u-v-w-y whose internal vertices u, v, w all have degree 2
/// in the host graph. Such a path can be contracted to shrink the graph by
/// three vertices (see reduction.hpp).
struct ReduciblePath {
  int x, u, v, w, y;
};

/// Lexicographically least reducible path by (x, u, v, w, y), or nullopt.
std::optional<ReduciblePath> find_reducible_p5(const Graph& g);

}  // namespace rrdom

#endif  // RRDOM_GRAPH_HPP_
