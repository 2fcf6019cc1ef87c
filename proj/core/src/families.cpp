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

#include "rrdom/families.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

namespace rrdom {

namespace {

void validate_tk_spec(const TkSpec& spec) {
  if (spec.k < 1) throw std::invalid_argument("Tk spec: k must be positive");
  if (4 * spec.k > kMaxVertices)
    throw std::invalid_argument("Tk spec: 4k exceeds the 64-vertex cap");
  if (static_cast<int>(spec.b_tree_edges.size()) != spec.k - 1)
    throw std::invalid_argument("Tk spec: a tree on k blocks needs exactly k-1 edges");
  std::set<std::pair<int, int>> seen;
  std::vector<int> parent(static_cast<std::size_t>(spec.k) + 1);
  for (int i = 1; i <= spec.k; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (auto [i, j] : spec.b_tree_edges) {
    if (i < 1 || i > spec.k || j < 1 || j > spec.k || i == j)
      throw std::invalid_argument("Tk spec: b-edge endpoints must be distinct blocks in [1, k]");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
      throw std::invalid_argument("Tk spec: duplicate b-edge");
    const int ri = find(i), rj = find(j);
    if (ri == rj) throw std::invalid_argument("Tk spec: b-edges contain a cycle");
    parent[static_cast<std::size_t>(ri)] = rj;
  }
}

// Block-local vertex ids.
int a_of(int block) { return 4 * (block - 1); }
int b_of(int block) { return 4 * (block - 1) + 1; }
int c_of(int block) { return 4 * (block - 1) + 2; }
int d_of(int block) { return 4 * (block - 1) + 3; }

bool is_path_p4(const Graph& g) {
  if (g.n() != 4 || g.edge_count() != 3 || !is_connected(g)) return false;
  std::array<int, 4> degrees{g.degree(0), g.degree(1), g.degree(2), g.degree(3)};
  std::sort(degrees.begin(), degrees.end());
  return degrees == std::array<int, 4>{1, 1, 2, 2};
}

bool isomorphic_small(const Graph& a, const Graph& b) {
  const int n = a.n();
  if (b.n() != n || a.edge_count() != b.edge_count()) return false;
  std::array<int, kMaxVertices> map{};
  std::uint64_t used = 0;
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if ((used >> cand) & 1) continue;
      if (b.degree(cand) != a.degree(i)) continue;
      bool consistent = true;
      for (int j = 0; j < i && consistent; ++j)
        if (a.has_edge(i, j) != b.has_edge(cand, map[static_cast<std::size_t>(j)]))
          consistent = false;
      if (!consistent) continue;
      map[static_cast<std::size_t>(i)] = cand;
      used |= std::uint64_t{1} << cand;
      if (place(i + 1)) return true;
      used &= ~(std::uint64_t{1} << cand);
    }
    return false;
  };
  return place(0);
}

const Graph& c1c2_target() {
  static const Graph target = [] {
    GFamilySpec spec;
    spec.variant = GFamilySpec::Variant::kC1C2;
    return build_G_family(spec);
  }();
  return target;
}

enum class Role : std::uint8_t { kNone, kA, kB, kC, kD };

// Forced role assignment for k >= 2 members: a leaf next to a degree-2
// vertex can only be a d (its neighbor the block's c), a leaf next to a
// branch vertex can only be an a, and every c identifies its b. The
// verification step below then pins down the entire edge structure, so no
// isomorphism search is needed.
std::optional<std::vector<Role>> classify_block_roles(const Graph& g) {
  const int n = g.n();
  std::vector<Role> role(static_cast<std::size_t>(n), Role::kNone);
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    const int nb = std::countr_zero(g.neighbors(u));
    const int nb_degree = g.degree(nb);
    if (nb_degree == 1) return std::nullopt;
    if (nb_degree == 2) {
      if (role[static_cast<std::size_t>(nb)] == Role::kC) return std::nullopt;
      role[static_cast<std::size_t>(u)] = Role::kD;
      role[static_cast<std::size_t>(nb)] = Role::kC;
    } else {
      role[static_cast<std::size_t>(u)] = Role::kA;
    }
  }
  for (int c = 0; c < n; ++c) {
    if (role[static_cast<std::size_t>(c)] != Role::kC) continue;
    int b = -1;
    bool ok = true;
    for_each_bit(g.neighbors(c), [&](int nb) {
      if (role[static_cast<std::size_t>(nb)] == Role::kD) return;
      if (b != -1) ok = false;
      b = nb;
    });
    if (!ok || b == -1 || g.degree(b) < 3) return std::nullopt;
    Role& role_b = role[static_cast<std::size_t>(b)];
    if (role_b != Role::kNone && role_b != Role::kB) return std::nullopt;
    role_b = Role::kB;
  }
  for (Role r : role)
    if (r == Role::kNone) return std::nullopt;
  return role;
}

// Shared by is_in_T and is_in_G; the only difference is whether the induced
// graph on b-vertices must be a tree or merely connected.
std::optional<int> recognize_blocks(const Graph& g, bool require_b_tree) {
  const int n = g.n();
  if (n % 4 != 0 || !is_connected(g)) return std::nullopt;
  const int k = n / 4;
  if (k == 1) return is_path_p4(g) ? std::optional<int>(1) : std::nullopt;

  auto roles = classify_block_roles(g);
  if (!roles) return std::nullopt;
  const std::vector<Role>& role = *roles;

  std::array<int, 5> counts{};
  for (Role r : role) ++counts[static_cast<std::size_t>(r)];
  if (counts[static_cast<std::size_t>(Role::kA)] != k ||
      counts[static_cast<std::size_t>(Role::kB)] != k ||
      counts[static_cast<std::size_t>(Role::kC)] != k ||
      counts[static_cast<std::size_t>(Role::kD)] != k)
    return std::nullopt;

  std::uint64_t b_mask = 0;
  int bb_edges_twice = 0;
  for (int v = 0; v < n; ++v) {
    const Role r = role[static_cast<std::size_t>(v)];
    int a_nbrs = 0, b_nbrs = 0, c_nbrs = 0, d_nbrs = 0;
    for_each_bit(g.neighbors(v), [&](int nb) {
      switch (role[static_cast<std::size_t>(nb)]) {
        case Role::kA: ++a_nbrs; break;
        case Role::kB: ++b_nbrs; break;
        case Role::kC: ++c_nbrs; break;
        case Role::kD: ++d_nbrs; break;
        default: break;
      }
    });
    switch (r) {
      case Role::kA:
        if (g.degree(v) != 1 || b_nbrs != 1) return std::nullopt;
        break;
      case Role::kD:
        if (g.degree(v) != 1 || c_nbrs != 1) return std::nullopt;
        break;
      case Role::kC:
        if (g.degree(v) != 2 || b_nbrs != 1 || d_nbrs != 1) return std::nullopt;
        break;
      case Role::kB:
        if (a_nbrs != 1 || c_nbrs != 1 || a_nbrs + b_nbrs + c_nbrs != g.degree(v))
          return std::nullopt;
        b_mask |= std::uint64_t{1} << v;
        bb_edges_twice += b_nbrs;
        break;
      default:
        return std::nullopt;
    }
  }

  const int bb_edges = bb_edges_twice / 2;
  if (require_b_tree && bb_edges != k - 1) return std::nullopt;
  // The b-vertices must induce a connected graph.
  const int start = std::countr_zero(b_mask);
  std::uint64_t visited = std::uint64_t{1} << start;
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v) & b_mask; });
    frontier = next & ~visited;
    visited |= frontier;
  }
  if (visited != b_mask) return std::nullopt;
  return k;
}

}  // namespace

Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph build_spider(const std::vector<int>& leg_lengths) {
  if (leg_lengths.size() < 3)
    throw std::invalid_argument("a spider needs at least 3 legs");
  int n = 1;
  for (int len : leg_lengths) {
    if (len < 1) throw std::invalid_argument("leg lengths must be positive");
    n += len;
  }
  if (n > kMaxVertices)
    throw std::invalid_argument("spider exceeds the 64-vertex cap");
  Graph g(n);
  int next = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph build_Tk(const TkSpec& spec) {
  validate_tk_spec(spec);
  Graph g(4 * spec.k);
  for (int i = 1; i <= spec.k; ++i) {
    g.add_edge(a_of(i), b_of(i));
    g.add_edge(b_of(i), c_of(i));
    g.add_edge(c_of(i), d_of(i));
  }
  for (auto [i, j] : spec.b_tree_edges) g.add_edge(b_of(i), b_of(j));
  return g;
}

Graph build_G_family(const GFamilySpec& spec) {
  if (spec.variant == GFamilySpec::Variant::kC1C2) {
    TkSpec t2;
    t2.k = 2;
    t2.b_tree_edges = {{1, 2}};
    Graph g = build_Tk(t2);
    g.add_edge(c_of(1), c_of(2));
    return g;
  }
  Graph g = build_Tk(spec.tk);
  std::set<std::pair<int, int>> present;
  for (auto [i, j] : spec.tk.b_tree_edges)
    present.insert({std::min(i, j), std::max(i, j)});
  for (auto [i, j] : spec.extra_b_edges) {
    if (i < 1 || i > spec.tk.k || j < 1 || j > spec.tk.k || i == j)
      throw std::invalid_argument("G spec: extra edge endpoints must be distinct blocks in [1, k]");
    if (!present.insert({std::min(i, j), std::max(i, j)}).second)
      throw std::invalid_argument("G spec: extra edge duplicates an existing b-edge");
    g.add_edge(b_of(i), b_of(j));
  }
  return g;
}

RainbowAssignment canonical_fk(const TkSpec& spec) {
  validate_tk_spec(spec);
  RainbowAssignment f;
  f.labels.assign(static_cast<std::size_t>(4 * spec.k), kRainbowNone);
  for (int i = 1; i <= spec.k; ++i) {
    f.labels[static_cast<std::size_t>(b_of(i))] = kRainbowBoth;
    f.labels[static_cast<std::size_t>(d_of(i))] = kRainbowOne;
  }
  return f;
}

RomanAssignment canonical_gk(const TkSpec& spec) {
  validate_tk_spec(spec);
  RomanAssignment g;
  g.values.assign(static_cast<std::size_t>(4 * spec.k), 0);
  for (int i = 1; i <= spec.k; ++i) {
    g.values[static_cast<std::size_t>(b_of(i))] = 2;
    g.values[static_cast<std::size_t>(d_of(i))] = 1;
  }
  return g;
}

std::optional<int> is_in_T(const Graph& g) {
  if (g.edge_count() != g.n() - 1) return std::nullopt;  // must be a tree
  return recognize_blocks(g, /*require_b_tree=*/true);
}

bool is_in_G(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n() == 8 && isomorphic_small(c1c2_target(), g)) return true;
  return recognize_blocks(g, /*require_b_tree=*/false).has_value();
}

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int k) {
  if (k < 1) throw std::invalid_argument("tree order must be positive");
  if (k == 1) return {{}};
  if (k == 2) return {{{1, 2}}};

  // Every (k-2)-digit sequence over {1..k} decodes to a distinct tree.
  std::vector<std::vector<std::pair<int, int>>> trees;
  std::vector<int> seq(static_cast<std::size_t>(k - 2), 1);
  while (true) {
    std::vector<int> degree(static_cast<std::size_t>(k) + 1, 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::set<int> leaves;
    for (int i = 1; i <= k; ++i)
      if (degree[static_cast<std::size_t>(i)] == 1) leaves.insert(i);
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
      const int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.emplace_back(leaf, s);
      if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    trees.push_back(std::move(edges));

    int pos = k - 3;
    while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == k) {
      seq[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++seq[static_cast<std::size_t>(pos)];
  }
  return trees;
}

}  // namespace rrdom
