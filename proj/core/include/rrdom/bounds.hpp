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

#ifndef RRDOM_BOUNDS_HPP_
#define RRDOM_BOUNDS_HPP_

#include <array>
#include <string_view>

#include "rrdom/graph.hpp"
#include "rrdom/solver.hpp"

namespace rrdom {

// Every bound this toolkit checks, identified by a stable name that appears
// in CLI and JSON output. All comparisons are cross-multiplied integer
// arithmetic; no verdict ever depends on floating point.
enum class CheckId : int {
  kSumSixFourths = 0,        // T_AVG_6_4:  4(r2 + R) <= 6n, connected, n >= 3
  kSumFourThirds,            // B_SUM_4_3:  3(r2 + R) <= 4n, connected, min degree 2, not C5
  kWeightedSumNineFourths,   // B_WSUM_9_4: 4(2 r2 + R) <= 9n, connected, n >= 3
  kRainbowThreeFourths,      // B_R2_3_4:   4 r2 <= 3n, connected, n >= 3
  kRomanFourFifths,          // B_ROM_4_5:  5 R <= 4n, connected, n >= 3
  kRainbowTwoThirds,         // B_R2_2_3:   3 r2 <= 2n, connected, n >= 3, min degree 2
  kRomanEightElevenths,      // B_ROM_8_11: 11 R <= 8n, connected, n >= 9, min degree 2
  kChainLower,               // CHAIN_LOWER: r2 <= R, any graph
  kChainUpper,               // CHAIN_UPPER: 2 R <= 3 r2, any graph
};

inline constexpr int kCheckCount = 9;

inline constexpr std::array<CheckId, kCheckCount> kAllChecks = {
    CheckId::kSumSixFourths,      CheckId::kSumFourThirds,
    CheckId::kWeightedSumNineFourths, CheckId::kRainbowThreeFourths,
    CheckId::kRomanFourFifths,    CheckId::kRainbowTwoThirds,
    CheckId::kRomanEightElevenths, CheckId::kChainLower,
    CheckId::kChainUpper,
};

std::string_view check_name(CheckId id);

enum class Verdict { kPass, kFail, kNotApplicable, kEquality };

std::string_view verdict_name(Verdict v);

/// Exact domination numbers of one graph together with a verdict for every
/// check. Equality is reported only for T_AVG_6_4 (4(r2 + R) == 6n); the
/// graphs attaining it are exactly the G-family members, which is what
/// in_g cross-checks.
struct BoundReport {
  int n = 0;
  int gamma_r2 = 0;
  int gamma_R = 0;
  bool connected = false;
  int min_degree = 0;
  bool is_c5 = false;
  bool in_g = false;
  std::array<Verdict, kCheckCount> verdicts{};

  Verdict verdict(CheckId id) const {
    return verdicts[static_cast<std::size_t>(id)];
  }
};

/// Solves both parameters exactly and evaluates every check. Hypothesis
/// filters live here, not in the solvers. Throws BudgetExceededError when
/// an instance blows the node ceiling.
BoundReport check_bounds(const Graph& g, const SolveOptions& opts = {});

}  // namespace rrdom

#endif  // RRDOM_BOUNDS_HPP_
