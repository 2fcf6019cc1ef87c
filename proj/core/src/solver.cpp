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

#include "rrdom/solver.hpp"

#include <array>
#include <utility>
#include <vector>

namespace rrdom {

namespace {

constexpr int kLabelSize[4] = {0, 1, 1, 2};
constexpr int kInfeasible = 1 << 20;

// Vertices whose closed neighborhood is fully assigned once vertex i is
// assigned; their constraint can be checked (and the branch cut) right away.
std::vector<std::vector<int>> closing_schedule(const Graph& g) {
  std::vector<std::vector<int>> closed_at(static_cast<std::size_t>(g.n()));
  for (int u = 0; u < g.n(); ++u) {
    int last = u;
    for_each_bit(g.neighbors(u), [&](int v) {
      if (v > last) last = v;
    });
    closed_at[static_cast<std::size_t>(last)].push_back(u);
  }
  return closed_at;
}

// Small greedy dominating set, used only to seed the incumbent.
std::vector<int> greedy_dominating_set(const Graph& g) {
  std::vector<int> set;
  std::uint64_t undominated = g.vertex_mask();
  while (undominated) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < g.n(); ++v) {
      const std::uint64_t closed =
          g.neighbors(v) | (std::uint64_t{1} << v);
      const int gain = std::popcount(closed & undominated);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    set.push_back(best);
    undominated &= ~(g.neighbors(best) | (std::uint64_t{1} << best));
  }
  return set;
}

struct RainbowSearch {
  const Graph& g;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> closed_at;
  std::array<std::uint8_t, kMaxVertices> label{};
  std::array<std::uint8_t, kMaxVertices> cover{};  // colors seen from assigned neighbors
  std::array<std::uint8_t, kMaxVertices> best{};
  int best_weight = 0;

  RainbowSearch(const Graph& graph, std::uint64_t max_nodes)
      : g(graph), n(graph.n()), budget(max_nodes),
        closed_at(closing_schedule(graph)) {}

  // Committed empty vertices whose missing colors must still arrive from
  // unassigned neighbors. Vertices with pairwise disjoint unassigned
  // neighborhoods have additive demands, which gives a valid bound on the
  // weight any completion must still spend.
  int lower_bound(int frontier) const {
    const std::uint64_t future = g.vertex_mask() &
        ~((frontier >= kMaxVertices) ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << frontier) - 1);
    std::uint64_t used = 0;
    int lb = 0;
    for (int u = 0; u < frontier; ++u) {
      if (label[u] != kRainbowNone || cover[u] == kRainbowBoth) continue;
      const std::uint64_t fut = g.neighbors(u) & future;
      if (fut == 0) return kInfeasible;
      if (fut & used) continue;
      lb += 2 - kLabelSize[cover[u]];
      used |= fut;
    }
    return lb;
  }

  void dfs(int i, int weight, bool symmetric_prefix) {
    if (i == n) {
      best_weight = weight;
      best = label;
      return;
    }
    if (weight + lower_bound(i) >= best_weight) return;
    const std::uint64_t nbrs = g.neighbors(i);
    for (std::uint8_t value = 0; value <= 3; ++value) {
      // While every assigned label is {} or {1,2} the two colors are
      // interchangeable, so the {2} branch mirrors the {1} branch.
      if (value == kRainbowTwo && symmetric_prefix) continue;
      if (++nodes > budget) throw BudgetExceededError(nodes);
      const int next_weight = weight + kLabelSize[value];
      if (next_weight >= best_weight) continue;
      label[i] = value;
      int saved_count = 0;
      std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxVertices> saved;
      if (value != kRainbowNone) {
        for_each_bit(nbrs, [&](int nb) {
          saved[saved_count++] = {static_cast<std::uint8_t>(nb), cover[nb]};
          cover[nb] |= value;
        });
      }
      bool feasible = true;
      for (int u : closed_at[static_cast<std::size_t>(i)]) {
        if (label[u] == kRainbowNone && cover[u] != kRainbowBoth) {
          feasible = false;
          break;
        }
      }
      if (feasible)
        dfs(i + 1, next_weight,
            symmetric_prefix &&
                (value == kRainbowNone || value == kRainbowBoth));
      for (int t = saved_count - 1; t >= 0; --t)
        cover[saved[t].first] = saved[t].second;
    }
  }
};

struct RomanSearch {
  const Graph& g;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::vector<int>> closed_at;
  std::array<std::uint8_t, kMaxVertices> value{};
  std::array<std::uint8_t, kMaxVertices> guarded{};  // has an assigned 2-neighbor
  std::array<std::uint8_t, kMaxVertices> best{};
  int best_weight = 0;

  RomanSearch(const Graph& graph, std::uint64_t max_nodes)
      : g(graph), n(graph.n()), budget(max_nodes),
        closed_at(closing_schedule(graph)) {}

  int lower_bound(int frontier) const {
    const std::uint64_t future = g.vertex_mask() &
        ~((frontier >= kMaxVertices) ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << frontier) - 1);
    std::uint64_t used = 0;
    int lb = 0;
    for (int u = 0; u < frontier; ++u) {
      if (value[u] != 0 || guarded[u]) continue;
      const std::uint64_t fut = g.neighbors(u) & future;
      if (fut == 0) return kInfeasible;
      if (fut & used) continue;
      lb += 2;  // some unassigned neighbor of u must receive value 2
      used |= fut;
    }
    return lb;
  }

  void dfs(int i, int weight) {
    if (i == n) {
      best_weight = weight;
      best = value;
      return;
    }
    if (weight + lower_bound(i) >= best_weight) return;
    const std::uint64_t nbrs = g.neighbors(i);
    for (std::uint8_t v = 0; v <= 2; ++v) {
      if (++nodes > budget) throw BudgetExceededError(nodes);
      const int next_weight = weight + v;
      if (next_weight >= best_weight) continue;
      value[i] = v;
      int saved_count = 0;
      std::array<std::pair<std::uint8_t, std::uint8_t>, kMaxVertices> saved;
      if (v == 2) {
        for_each_bit(nbrs, [&](int nb) {
          saved[saved_count++] = {static_cast<std::uint8_t>(nb), guarded[nb]};
          guarded[nb] = 1;
        });
      }
      bool feasible = true;
      for (int u : closed_at[static_cast<std::size_t>(i)]) {
        if (value[u] == 0 && !guarded[u]) {
          feasible = false;
          break;
        }
      }
      if (feasible) dfs(i + 1, next_weight);
      for (int t = saved_count - 1; t >= 0; --t)
        guarded[saved[t].first] = saved[t].second;
    }
  }
};

}  // namespace

RainbowSolution solve_rainbow_domination(const Graph& g,
                                         const SolveOptions& opts) {
  const int n = g.n();
  RainbowSearch search(g, opts.max_nodes);

  // Seed the incumbent: all-{1} always works; {1,2} on a dominating set is
  // usually better on dense graphs.
  const std::vector<int> dom = greedy_dominating_set(g);
  if (2 * static_cast<int>(dom.size()) < n) {
    search.best_weight = 2 * static_cast<int>(dom.size());
    search.best.fill(kRainbowNone);
    for (int v : dom) search.best[v] = kRainbowBoth;
  } else {
    search.best_weight = n;
    search.best.fill(kRainbowOne);
  }

  search.dfs(0, 0, true);

  RainbowSolution solution;
  solution.weight = search.best_weight;
  solution.witness.labels.assign(search.best.begin(),
                                 search.best.begin() + n);
  solution.nodes_explored = search.nodes;
  return solution;
}

RomanSolution solve_roman_domination(const Graph& g,
                                     const SolveOptions& opts) {
  const int n = g.n();
  RomanSearch search(g, opts.max_nodes);

  const std::vector<int> dom = greedy_dominating_set(g);
  if (2 * static_cast<int>(dom.size()) < n) {
    search.best_weight = 2 * static_cast<int>(dom.size());
    search.best.fill(0);
    for (int v : dom) search.best[v] = 2;
  } else {
    search.best_weight = n;
    search.best.fill(1);
  }

  search.dfs(0, 0);

  RomanSolution solution;
  solution.weight = search.best_weight;
  solution.witness.values.assign(search.best.begin(),
                                 search.best.begin() + n);
  solution.nodes_explored = search.nodes;
  return solution;
}

}  // namespace rrdom
