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

#ifndef RRDOM_REDUCTION_HPP_
#define RRDOM_REDUCTION_HPP_

#include <vector>

#include "rrdom/domination.hpp"
#include "rrdom/graph.hpp"

namespace rrdom {

/// Result of contracting a reducible path x-u-v-w-y: the internal vertices
/// u, v, w are deleted and the edge xy is added, so the reduced graph has
/// three fewer vertices. Both domination numbers drop by at most 2, and any
/// dominating function of the reduced graph extends back at cost exactly 2
/// (extend_rainbow / extend_roman).
struct Reduction {
  Graph original;
  Graph reduced;
  ReduciblePath path;
  // Original vertex -> reduced vertex; -1 for the three deleted vertices.
  // Surviving vertices keep their relative order.
  std::vector<int> id_map;
};

/// Contracts the given path. Throws std::invalid_argument unless the path
/// is an induced P5 of the graph whose internal vertices have degree 2
/// (which also guarantees the reduced graph stays simple).
Reduction contract_p5(const Graph& g, const ReduciblePath& path);

/// Extends a valid rainbow assignment of the reduced graph to one of the
/// original graph: survivors keep their labels and u, v, w receive labels
/// chosen by the values at x and y, adding weight exactly 2. Throws
/// std::invalid_argument if the input is not valid on the reduced graph.
RainbowAssignment extend_rainbow(const Reduction& r,
                                 const RainbowAssignment& on_reduced);

/// Roman counterpart of extend_rainbow; also adds weight exactly 2.
RomanAssignment extend_roman(const Reduction& r,
                             const RomanAssignment& on_reduced);

}  // namespace rrdom

#endif  // RRDOM_REDUCTION_HPP_
