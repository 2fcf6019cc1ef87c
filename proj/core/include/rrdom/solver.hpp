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

#ifndef RRDOM_SOLVER_HPP_
#define RRDOM_SOLVER_HPP_

#include <cstdint>
#include <stdexcept>

#include "rrdom/domination.hpp"
#include "rrdom/graph.hpp"

namespace rrdom {

/// Search limits are expressed as a node-count ceiling rather than wall
/// clock so that runs are reproducible.
struct SolveOptions {
  std::uint64_t max_nodes = 50'000'000;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(std::uint64_t nodes)
      : std::runtime_error("search budget exceeded after " +
                           std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

struct RainbowSolution {
  int weight = 0;
  RainbowAssignment witness;
  std::uint64_t nodes_explored = 0;
};

struct RomanSolution {
  int weight = 0;
  RomanAssignment witness;
  std::uint64_t nodes_explored = 0;
};

/// Minimum weight of a 2-rainbow dominating function, with an optimal
/// witness. Exact for any graph (disconnected input decomposes over
/// components inside the same search); practical up to n of about 20.
/// Throws BudgetExceededError when the node ceiling is hit.
RainbowSolution solve_rainbow_domination(const Graph& g,
                                         const SolveOptions& opts = {});

/// Minimum weight of a Roman dominating function, with an optimal witness.
RomanSolution solve_roman_domination(const Graph& g,
                                     const SolveOptions& opts = {});

}  // namespace rrdom

#endif  // RRDOM_SOLVER_HPP_
