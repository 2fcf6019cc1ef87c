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

#ifndef RRDOM_SWEEP_HPP_
#define RRDOM_SWEEP_HPP_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "rrdom/bounds.hpp"
#include "rrdom/solver.hpp"

namespace rrdom {

struct SweepOptions {
  int min_degree = 0;        // skip graphs below this minimum degree
  bool exclude_c5 = false;   // skip the 5-cycle
  int jobs = 1;              // worker threads; output is identical for any value
  bool skip_bad_lines = false;  // record parse failures instead of throwing
  SolveOptions solve;
};

struct CheckTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
  std::uint64_t equality = 0;
};

struct Counterexample {
  std::string graph6;
  std::string reason;
};

struct ParseFailure {
  std::size_t line = 0;  // 1-based input line number
  std::string message;
};

/// Aggregated verdicts over a stream of graphs. counterexamples lists every
/// graph that falsifies a checked statement: a FAIL on an applicable bound,
/// or a mismatch in either direction between T_AVG_6_4 equality and
/// G-family membership. Lists are sorted, so equal inputs produce
/// byte-identical summaries regardless of worker count.
struct SweepSummary {
  std::uint64_t graphs_processed = 0;
  std::uint64_t filtered_out = 0;
  std::map<std::string, CheckTally> checks;
  std::vector<std::string> equality_graphs;
  std::vector<Counterexample> counterexamples;
  std::vector<ParseFailure> parse_failures;

  bool clean() const { return counterexamples.empty(); }
};

/// Runs check_bounds over every graph6 line. Empty lines and ">>"-prefixed
/// headers are ignored. Strict mode (the default) throws Graph6Error with
/// the offending line number; skip mode records the failure and moves on.
SweepSummary sweep(std::istream& in, const SweepOptions& opts = {});

SweepSummary sweep_lines(const std::vector<std::string>& lines,
                         const SweepOptions& opts = {});

/// Family self-test: every Tk b-tree shape up to k_max must have both
/// optima equal to 3k with the canonical assignments checking out and the
/// recognizer agreeing, and every small spider with at least three good
/// legs must satisfy 3(r2 + R) <= 4n. k_max is capped at 3.
SweepSummary selftest_families(int k_max, const SolveOptions& opts = {});

/// Deterministic, indented JSON rendering of a summary.
std::string to_json(const SweepSummary& summary);

}  // namespace rrdom

#endif  // RRDOM_SWEEP_HPP_
