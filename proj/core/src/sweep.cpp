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

#include "rrdom/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <tuple>
#include <thread>

#include <json.hpp>

#include "rrdom/families.hpp"
#include "rrdom/graph.hpp"

namespace rrdom {

namespace {

void tally_verdict(CheckTally& tally, Verdict v) {
  switch (v) {
    case Verdict::kPass: ++tally.pass; break;
    case Verdict::kFail: ++tally.fail; break;
    case Verdict::kNotApplicable: ++tally.not_applicable; break;
    case Verdict::kEquality: ++tally.equality; break;
  }
}

void record_report(SweepSummary& summary, const std::string& line,
                   const BoundReport& report) {
  ++summary.graphs_processed;
  for (CheckId id : kAllChecks) {
    const Verdict v = report.verdict(id);
    tally_verdict(summary.checks[std::string(check_name(id))], v);
    if (v == Verdict::kFail)
      summary.counterexamples.push_back(
          {line, std::string(check_name(id)) + " violated"});
  }
  const bool equality =
      report.verdict(CheckId::kSumSixFourths) == Verdict::kEquality;
  if (equality) summary.equality_graphs.push_back(line);
  // Both directions of the extremal characterization.
  if (equality && !report.in_g)
    summary.counterexamples.push_back(
        {line, "T_AVG_6_4 equality without G-family membership"});
  if (!equality && report.in_g)
    summary.counterexamples.push_back(
        {line, "G-family membership without T_AVG_6_4 equality"});
}

void merge(SweepSummary& into, SweepSummary&& part) {
  into.graphs_processed += part.graphs_processed;
  into.filtered_out += part.filtered_out;
  for (auto& [name, tally] : part.checks) {
    CheckTally& t = into.checks[name];
    t.pass += tally.pass;
    t.fail += tally.fail;
    t.not_applicable += tally.not_applicable;
    t.equality += tally.equality;
  }
  auto append = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()),
               std::make_move_iterator(src.end()));
  };
  append(into.equality_graphs, part.equality_graphs);
  append(into.counterexamples, part.counterexamples);
  append(into.parse_failures, part.parse_failures);
}

void sort_summary(SweepSummary& summary) {
  std::sort(summary.equality_graphs.begin(), summary.equality_graphs.end());
  std::sort(summary.counterexamples.begin(), summary.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.graph6, a.reason) < std::tie(b.graph6, b.reason);
            });
  std::sort(summary.parse_failures.begin(), summary.parse_failures.end(),
            [](const ParseFailure& a, const ParseFailure& b) {
              return a.line < b.line;
            });
}

// Pre-seed the tally map so an empty sweep still lists every check.
void seed_checks(SweepSummary& summary) {
  for (CheckId id : kAllChecks) summary.checks[std::string(check_name(id))];
}

std::string trimmed(const std::string& line) {
  std::string out = line;
  while (!out.empty() && (out.back() == '\r' || out.back() == '\n' ||
                          out.back() == ' ' || out.back() == '\t'))
    out.pop_back();
  return out;
}

}  // namespace

SweepSummary sweep_lines(const std::vector<std::string>& lines,
                         const SweepOptions& opts) {
  struct Item {
    std::string text;
    std::size_t line_no;
  };
  std::vector<Item> items;
  items.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string text = trimmed(lines[i]);
    if (text.empty() || text.rfind(">>", 0) == 0) continue;
    items.push_back({std::move(text), i + 1});
  }

  const int jobs = std::max(1, opts.jobs);
  std::vector<SweepSummary> parts(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&](SweepSummary& part) {
    while (!abort.load(std::memory_order_relaxed)) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= items.size()) break;
      const Item& item = items[idx];
      try {
        Graph g = parse_graph6(item.text);
        if (min_degree(g) < opts.min_degree || (opts.exclude_c5 && is_cycle(g, 5))) {
          ++part.filtered_out;
          continue;
        }
        record_report(part, item.text, check_bounds(g, opts.solve));
      } catch (const Graph6Error& e) {
        if (opts.skip_bad_lines) {
          part.parse_failures.push_back({item.line_no, e.what()});
          continue;
        }
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure)
          failure = std::make_exception_ptr(Graph6Error(
              e.kind(), "line " + std::to_string(item.line_no) + ": " + e.what()));
        abort.store(true);
        break;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        abort.store(true);
        break;
      }
    }
  };

  if (jobs == 1) {
    worker(parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back(worker, std::ref(parts[static_cast<std::size_t>(t)]));
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepSummary summary;
  seed_checks(summary);
  for (SweepSummary& part : parts) merge(summary, std::move(part));
  sort_summary(summary);
  return summary;
}

SweepSummary sweep(std::istream& in, const SweepOptions& opts) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return sweep_lines(lines, opts);
}

SweepSummary selftest_families(int k_max, const SolveOptions& opts) {
  if (k_max < 1 || k_max > 3)
    throw std::invalid_argument("selftest supports k_max in [1, 3]");

  SweepSummary summary;
  auto record = [&](const std::string& check, const std::string& graph6,
                    bool ok, const std::string& reason) {
    CheckTally& tally = summary.checks[check];
    if (ok) {
      ++tally.pass;
    } else {
      ++tally.fail;
      summary.counterexamples.push_back({graph6, reason});
    }
  };

  for (int k = 1; k <= k_max; ++k) {
    for (const auto& edges : labeled_trees(k)) {
      TkSpec spec;
      spec.k = k;
      spec.b_tree_edges = edges;
      const Graph tree = build_Tk(spec);
      const std::string graph6 = write_graph6(tree);
      ++summary.graphs_processed;

      const auto recognized = is_in_T(tree);
      record("FAMILY_TK_RECOGNIZER", graph6,
             recognized.has_value() && *recognized == k,
             "Tk recognizer does not round-trip the generator");

      const int r2 = solve_rainbow_domination(tree, opts).weight;
      const int rom = solve_roman_domination(tree, opts).weight;
      record("FAMILY_TK_OPTIMUM", graph6, r2 == 3 * k && rom == 3 * k,
             "Tk member does not have both optima equal to 3k");

      const RainbowAssignment fk = canonical_fk(spec);
      const RomanAssignment gk = canonical_gk(spec);
      record("FAMILY_TK_CANONICAL", graph6,
             is_valid_rainbow(tree, fk) && rainbow_weight(fk) == 3 * k &&
                 is_valid_roman(tree, gk) && roman_weight(gk) == 3 * k,
             "canonical assignments are not valid optima on the Tk member");
    }
  }

  // Spiders with up to 4 legs of length up to 3 and at least three good
  // legs; each must satisfy the 4/3 sum bound.
  std::vector<std::vector<int>> leg_sets;
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = b; c <= 3; ++c) {
        leg_sets.push_back({a, b, c});
        for (int d = c; d <= 3; ++d) leg_sets.push_back({a, b, c, d});
      }
  for (const auto& legs : leg_sets) {
    int good = 0;
    for (int len : legs)
      if (len % 3 != 0) ++good;
    if (good < 3) continue;
    const Graph spider = build_spider(legs);
    const std::string graph6 = write_graph6(spider);
    ++summary.graphs_processed;
    const int r2 = solve_rainbow_domination(spider, opts).weight;
    const int rom = solve_roman_domination(spider, opts).weight;
    record("FAMILY_SPIDER_4_3", graph6,
           3 * (r2 + rom) <= 4 * spider.n(),
           "spider with three good legs violates the 4/3 sum bound");
  }

  sort_summary(summary);
  return summary;
}

std::string to_json(const SweepSummary& summary) {
  nlohmann::json j;
  j["graphs_processed"] = summary.graphs_processed;
  j["filtered_out"] = summary.filtered_out;
  nlohmann::json checks(nlohmann::json::value_t::object);
  for (const auto& [name, tally] : summary.checks) {
    checks[name] = {{"pass", tally.pass},
                    {"fail", tally.fail},
                    {"not_applicable", tally.not_applicable},
                    {"equality", tally.equality}};
  }
  j["checks"] = checks;
  j["equality_graphs"] = summary.equality_graphs;
  nlohmann::json cexs = nlohmann::json::array();
  for (const Counterexample& c : summary.counterexamples)
    cexs.push_back({{"graph6", c.graph6}, {"reason", c.reason}});
  j["counterexamples"] = cexs;
  nlohmann::json fails = nlohmann::json::array();
  for (const ParseFailure& f : summary.parse_failures)
    fails.push_back({{"line", f.line}, {"error", f.message}});
  j["parse_failures"] = fails;
  return j.dump(2);
}

}  // namespace rrdom
