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

#include "rrdom/bounds.hpp"

#include "rrdom/families.hpp"

namespace rrdom {

std::string_view check_name(CheckId id) {
  switch (id) {
    case CheckId::kSumSixFourths: return "T_AVG_6_4";
    case CheckId::kSumFourThirds: return "B_SUM_4_3";
    case CheckId::kWeightedSumNineFourths: return "B_WSUM_9_4";
    case CheckId::kRainbowThreeFourths: return "B_R2_3_4";
    case CheckId::kRomanFourFifths: return "B_ROM_4_5";
    case CheckId::kRainbowTwoThirds: return "B_R2_2_3";
    case CheckId::kRomanEightElevenths: return "B_ROM_8_11";
    case CheckId::kChainLower: return "CHAIN_LOWER";
    case CheckId::kChainUpper: return "CHAIN_UPPER";
  }
  return "UNKNOWN";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "PASS";
    case Verdict::kFail: return "FAIL";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
    case Verdict::kEquality: return "EQUALITY";
  }
  return "UNKNOWN";
}

BoundReport check_bounds(const Graph& g, const SolveOptions& opts) {
  BoundReport report;
  report.n = g.n();
  report.connected = is_connected(g);
  report.min_degree = min_degree(g);
  report.is_c5 = is_cycle(g, 5);
  report.gamma_r2 = solve_rainbow_domination(g, opts).weight;
  report.gamma_R = solve_roman_domination(g, opts).weight;
  report.in_g = is_in_G(g);

  const long n = report.n;
  const long r2 = report.gamma_r2;
  const long rom = report.gamma_R;

  auto set = [&](CheckId id, bool applicable, bool pass) {
    report.verdicts[static_cast<std::size_t>(id)] =
        !applicable ? Verdict::kNotApplicable
                    : (pass ? Verdict::kPass : Verdict::kFail);
  };

  const bool base = report.connected && n >= 3;
  const bool min2 = report.min_degree >= 2;

  set(CheckId::kSumSixFourths, base, 4 * (r2 + rom) <= 6 * n);
  if (report.verdict(CheckId::kSumSixFourths) == Verdict::kPass &&
      4 * (r2 + rom) == 6 * n)
    report.verdicts[static_cast<std::size_t>(CheckId::kSumSixFourths)] =
        Verdict::kEquality;
  set(CheckId::kSumFourThirds, report.connected && min2 && !report.is_c5,
      3 * (r2 + rom) <= 4 * n);
  set(CheckId::kWeightedSumNineFourths, base, 4 * (2 * r2 + rom) <= 9 * n);
  set(CheckId::kRainbowThreeFourths, base, 4 * r2 <= 3 * n);
  set(CheckId::kRomanFourFifths, base, 5 * rom <= 4 * n);
  set(CheckId::kRainbowTwoThirds, base && min2, 3 * r2 <= 2 * n);
  set(CheckId::kRomanEightElevenths, report.connected && n >= 9 && min2,
      11 * rom <= 8 * n);
  set(CheckId::kChainLower, true, r2 <= rom);
  set(CheckId::kChainUpper, true, 2 * rom <= 3 * r2);

  return report;
}

}  // namespace rrdom
