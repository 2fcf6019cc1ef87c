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

// Command line front end. Exit codes: 0 success / no counterexample,
// 1 counterexample found, 2 usage or parse error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrdom/bounds.hpp"
#include "rrdom/domination.hpp"
#include "rrdom/families.hpp"
#include "rrdom/graph.hpp"
#include "rrdom/reduction.hpp"
#include "rrdom/solver.hpp"
#include "rrdom/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_lines(const std::string& input) {
  std::vector<std::string> lines;
  std::string line;
  if (input == "-") {
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
  }
  std::ifstream file(input);
  if (!file) throw UsageError("cannot open input file: " + input);
  while (std::getline(file, line)) lines.push_back(line);
  return lines;
}

bool is_graph_line(const std::string& line) {
  return !line.empty() && line != "\r" && line.rfind(">>", 0) != 0;
}

// Spec strings are semicolon-separated key=value pairs, e.g.
// "k=3;tree=1-2,2-3". Lists use commas, pairs use dashes.
std::map<std::string, std::string> parse_spec_string(const std::string& spec) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw UsageError("spec entry '" + part + "' is not key=value");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return kv;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected an integer for " + what + ", got '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) values.push_back(parse_int(item, what));
  return values;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text,
                                                 const std::string& what) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw UsageError("expected i-j pairs for " + what + ", got '" + item + "'");
    pairs.emplace_back(parse_int(item.substr(0, dash), what),
                       parse_int(item.substr(dash + 1), what));
  }
  return pairs;
}

rrdom::Graph build_from_spec(const std::string& family, const std::string& spec) {
  auto kv = parse_spec_string(spec);
  if (auto it = kv.find("family"); it != kv.end()) {
    if (it->second != family)
      throw UsageError("spec family '" + it->second +
                       "' contradicts --family " + family);
    kv.erase(it);
  }
  auto take = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError("spec is missing key '" + key + "'");
    std::string value = it->second;
    kv.erase(it);
    return value;
  };
  auto take_optional = [&](const std::string& key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string value = it->second;
    kv.erase(it);
    return value;
  };
  auto finish = [&](rrdom::Graph g) {
    if (!kv.empty())
      throw UsageError("spec has unknown key '" + kv.begin()->first + "'");
    return g;
  };

  if (family == "cycle")
    return finish(rrdom::build_cycle(parse_int(take("n"), "n")));
  if (family == "spider")
    return finish(rrdom::build_spider(parse_int_list(take("legs"), "legs")));
  if (family == "Tk") {
    rrdom::TkSpec tk;
    tk.k = parse_int(take("k"), "k");
    tk.b_tree_edges = parse_pair_list(take_optional("tree"), "tree");
    return finish(rrdom::build_Tk(tk));
  }
  if (family == "Gfam") {
    rrdom::GFamilySpec g;
    const std::string variant = take("variant");
    if (variant == "c1c2") {
      g.variant = rrdom::GFamilySpec::Variant::kC1C2;
    } else if (variant == "bextra") {
      g.variant = rrdom::GFamilySpec::Variant::kBExtra;
      g.tk.k = parse_int(take("k"), "k");
      g.tk.b_tree_edges = parse_pair_list(take_optional("tree"), "tree");
      g.extra_b_edges = parse_pair_list(take_optional("extra"), "extra");
    } else {
      throw UsageError("Gfam variant must be c1c2 or bextra");
    }
    return finish(rrdom::build_G_family(g));
  }
  throw UsageError("unknown family '" + family + "'");
}

int run_solve(const std::string& input, const std::string& param,
              const rrdom::SolveOptions& opts) {
  for (const std::string& raw : read_lines(input)) {
    if (!is_graph_line(raw)) continue;
    const rrdom::Graph g = rrdom::parse_graph6(raw);
    std::cout << rrdom::write_graph6(g) << " n=" << g.n();
    if (param == "r2" || param == "both") {
      const auto sol = rrdom::solve_rainbow_domination(g, opts);
      std::cout << " gamma_r2=" << sol.weight
                << " f=" << rrdom::to_text(sol.witness);
    }
    if (param == "roman" || param == "both") {
      const auto sol = rrdom::solve_roman_domination(g, opts);
      std::cout << " gamma_R=" << sol.weight
                << " g=" << rrdom::to_text(sol.witness);
    }
    std::cout << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& input, const std::string& assignment,
               const std::string& kind) {
  for (const std::string& raw : read_lines(input)) {
    if (!is_graph_line(raw)) continue;
    const rrdom::Graph g = rrdom::parse_graph6(raw);
    if (kind == "r2") {
      const auto f = rrdom::rainbow_from_text(assignment);
      std::cout << "kind=r2 valid="
                << (rrdom::is_valid_rainbow(g, f) ? "true" : "false")
                << " weight=" << rrdom::rainbow_weight(f) << '\n';
    } else {
      const auto a = rrdom::roman_from_text(assignment);
      std::cout << "kind=roman valid="
                << (rrdom::is_valid_roman(g, a) ? "true" : "false")
                << " weight=" << rrdom::roman_weight(a) << '\n';
    }
    return kExitOk;  // only the first graph line is verified
  }
  throw UsageError("input contains no graph line");
}

int run_reduce(const std::string& input) {
  for (const std::string& raw : read_lines(input)) {
    if (!is_graph_line(raw)) continue;
    const rrdom::Graph g = rrdom::parse_graph6(raw);
    const auto path = rrdom::find_reducible_p5(g);
    if (!path) {
      std::cout << "irreducible\n";
      continue;
    }
    const rrdom::Reduction red = rrdom::contract_p5(g, *path);
    std::cout << rrdom::write_graph6(red.reduced) << " path=" << path->x << ','
              << path->u << ',' << path->v << ',' << path->w << ',' << path->y
              << " map=";
    bool first = true;
    for (int v = 0; v < g.n(); ++v) {
      const int image = red.id_map[static_cast<std::size_t>(v)];
      if (image < 0) continue;
      if (!first) std::cout << ',';
      std::cout << v << ':' << image;
      first = false;
    }
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers and checkers for 2-rainbow and Roman domination"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string param = "both";
  std::string assignment, kind, family, spec;
  int min_deg = 0, jobs = 1, kmax = 3;
  bool exclude_c5 = false, skip_bad = false;
  rrdom::SolveOptions solve_opts;

  CLI::App* solve = app.add_subcommand("solve", "Solve graphs from a graph6 stream");
  solve->add_option("--input", input, "graph6 file, or - for stdin")->required();
  solve->add_option("--param", param, "r2, roman, or both")
      ->check(CLI::IsMember({"r2", "roman", "both"}));
  solve->add_option("--budget", solve_opts.max_nodes, "search node ceiling per instance");

  CLI::App* verify = app.add_subcommand("verify", "Check an assignment against a graph");
  verify->add_option("--input", input, "graph6 file (first graph line is used)")->required();
  verify->add_option("--assignment", assignment, "one character per vertex")->required();
  verify->add_option("--kind", kind, "r2 or roman")
      ->required()
      ->check(CLI::IsMember({"r2", "roman"}));

  CLI::App* generate = app.add_subcommand("generate", "Emit a family member as graph6");
  generate->add_option("--family", family, "cycle, spider, Tk, or Gfam")
      ->required()
      ->check(CLI::IsMember({"cycle", "spider", "Tk", "Gfam"}));
  generate->add_option("--spec", spec, "family parameters, e.g. k=3;tree=1-2,2-3")
      ->required();

  CLI::App* reduce = app.add_subcommand("reduce", "Contract one reducible path per graph");
  reduce->add_option("--input", input, "graph6 file, or - for stdin")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate every bound over a graph6 stream");
  sweep->add_option("--input", input, "graph6 file, or - for stdin")->required();
  sweep->add_option("--min-degree", min_deg, "skip graphs below this minimum degree");
  sweep->add_flag("--exclude-c5", exclude_c5, "skip the 5-cycle");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--budget", solve_opts.max_nodes, "search node ceiling per instance");
  sweep->add_flag("--skip-bad-lines", skip_bad, "record parse failures instead of aborting");

  CLI::App* selftest = app.add_subcommand("selftest", "Family generators vs solvers");
  selftest->add_option("--kmax", kmax, "largest Tk block count to verify (1-3)")
      ->check(CLI::Range(1, 3));
  selftest->add_option("--budget", solve_opts.max_nodes, "search node ceiling per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(input, param, solve_opts);
    if (verify->parsed()) return run_verify(input, assignment, kind);
    if (generate->parsed()) {
      std::cout << rrdom::write_graph6(build_from_spec(family, spec)) << '\n';
      return kExitOk;
    }
    if (reduce->parsed()) return run_reduce(input);
    if (sweep->parsed()) {
      rrdom::SweepOptions opts;
      opts.min_degree = min_deg;
      opts.exclude_c5 = exclude_c5;
      opts.jobs = jobs;
      opts.skip_bad_lines = skip_bad;
      opts.solve = solve_opts;
      std::ifstream file;
      std::istream* in = &std::cin;
      if (input != "-") {
        file.open(input);
        if (!file) throw UsageError("cannot open input file: " + input);
        in = &file;
      }
      const rrdom::SweepSummary summary = rrdom::sweep(*in, opts);
      std::cout << rrdom::to_json(summary) << '\n';
      return summary.clean() ? kExitOk : kExitCounterexample;
    }
    if (selftest->parsed()) {
      const rrdom::SweepSummary summary =
          rrdom::selftest_families(kmax, solve_opts);
      std::cout << rrdom::to_json(summary) << '\n';
      return summary.clean() ? kExitOk : kExitCounterexample;
    }
  } catch (const rrdom::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
