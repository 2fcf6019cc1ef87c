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

#ifndef RRDOM_FAMILIES_HPP_
#define RRDOM_FAMILIES_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "rrdom/domination.hpp"
#include "rrdom/graph.hpp"

namespace rrdom {

// The Tk family: k disjoint paths a_i b_i c_i d_i of order 4 plus a tree on
// the b-vertices. Members have order 4k and both domination numbers equal
// to 3k. Block i occupies vertex ids 4(i-1)..4i-1 in the order a, b, c, d.
struct TkSpec {
  int k = 1;
  // 1-based block index pairs; must form a tree on {1..k} (k-1 edges).
  std::vector<std::pair<int, int>> b_tree_edges;
};

// The G family extends Tk in one of two ways: the unique 8-vertex tree with
// k = 2 plus the extra edge c1-c2, or any Tk member plus additional edges
// among the b-vertices.
struct GFamilySpec {
  enum class Variant { kC1C2, kBExtra };
  Variant variant = Variant::kC1C2;
  TkSpec tk;                                        // used by kBExtra
  std::vector<std::pair<int, int>> extra_b_edges;   // used by kBExtra
};

/// Cycle on n >= 3 vertices, 0-1-...-(n-1)-0.
Graph build_cycle(int n);

/// Spider with the given leg lengths (>= 3 legs, each length >= 1).
/// Vertex 0 is the center; legs are laid out consecutively.
Graph build_spider(const std::vector<int>& leg_lengths);

/// Tk member for the given spec. Throws std::invalid_argument unless the
/// b-edges form a tree on {1..k}.
Graph build_Tk(const TkSpec& spec);

/// G-family member for the given spec.
Graph build_G_family(const GFamilySpec& spec);

/// The canonical minimum rainbow assignment on build_Tk(spec): {} on a and
/// c vertices, {1,2} on b, {1} on d. Weight 3k; stays valid when extra
/// edges are added between b-vertices (or the c1-c2 edge).
RainbowAssignment canonical_fk(const TkSpec& spec);

/// The canonical minimum Roman assignment: 0 on a and c, 2 on b, 1 on d.
RomanAssignment canonical_gk(const TkSpec& spec);

/// If g is isomorphic to a Tk member, returns k; otherwise nullopt.
/// Recognition is structural and independent of vertex numbering.
std::optional<int> is_in_T(const Graph& g);

/// True iff g is isomorphic to a G-family member.
bool is_in_G(const Graph& g);

/// All labeled trees on {1..k} as edge lists, in a deterministic order.
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int k);

}  // namespace rrdom

#endif  // RRDOM_FAMILIES_HPP_
