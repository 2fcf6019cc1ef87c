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

#include "rrdom/domination.hpp"

#include <random>

#include <doctest.h>

#include "common/oracle.hpp"
#include "common/special_graphs.hpp"
#include "rrdom/families.hpp"

using namespace rrdom;

namespace {

// All label vectors over a given alphabet size, as a simple counter.
template <typename F>
void enumerate_assignments(int n, int alphabet, F&& visit) {
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(digits);
    int pos = 0;
    while (pos < n && digits[static_cast<std::size_t>(pos)] ==
                          static_cast<std::uint8_t>(alphabet - 1))
      digits[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
}

template <typename F>
void enumerate_all_graphs(int n, F&& visit) {
  const int slots = n * (n - 1) / 2;
  for (int mask = 0; mask < (1 << slots); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    visit(g);
  }
}

}  // namespace

TEST_CASE("weights") {
  CHECK(rainbow_weight({{0, 0, 0, 0, 0}}) == 0);
  CHECK(rainbow_weight({{3, 3, 3}}) == 6);
  CHECK(rainbow_weight(canonical_fk(TkSpec{2, {{1, 2}}})) == 6);
  CHECK(roman_weight({{0, 2, 0, 1}}) == 3);
  CHECK(roman_weight(canonical_gk(TkSpec{2, {{1, 2}}})) == 6);
}

TEST_CASE("rainbow validity") {
  const Graph k1 = parse_graph6("@");
  CHECK(!is_valid_rainbow(k1, {{kRainbowNone}}));
  CHECK(is_valid_rainbow(k1, {{kRainbowOne}}));

  const Graph c3 = build_cycle(3);
  CHECK(is_valid_rainbow(c3, {{kRainbowBoth, kRainbowNone, kRainbowNone}}));
  CHECK(!is_valid_rainbow(c3, {{kRainbowOne, kRainbowNone, kRainbowNone}}));

  const TkSpec t2{2, {{1, 2}}};
  CHECK(is_valid_rainbow(build_Tk(t2), canonical_fk(t2)));

  CHECK_THROWS_AS(is_valid_rainbow(c3, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("roman validity") {
  const Graph k1 = parse_graph6("@");
  CHECK(!is_valid_roman(k1, {{0}}));
  CHECK(is_valid_roman(k1, {{1}}));

  const Graph c5 = build_cycle(5);
  CHECK(is_valid_roman(c5, {{1, 1, 1, 1, 1}}));  // no zeros, nothing to guard
  CHECK(is_valid_roman(c5, {{2, 0, 1, 1, 0}}));
  CHECK(!is_valid_roman(c5, {{2, 0, 0, 1, 0}}));  // vertex 2 is unguarded

  const TkSpec t2{2, {{1, 2}}};
  CHECK(is_valid_roman(build_Tk(t2), canonical_gk(t2)));

  CHECK_THROWS_AS(is_valid_roman(c5, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("roman_to_rainbow on the canonical block assignment") {
  // On one P4 block, (0,2,0,1) maps exactly to ({}, {1,2}, {}, {1}).
  const RomanAssignment g{{0, 2, 0, 1}};
  CHECK(roman_to_rainbow(g) == canonical_fk(TkSpec{1, {}}));

  CHECK(roman_to_rainbow({{0, 0, 0}}) == RainbowAssignment{{0, 0, 0}});
  const RainbowAssignment doubled = roman_to_rainbow({{2, 2}});
  CHECK(doubled == RainbowAssignment{{kRainbowBoth, kRainbowBoth}});
  CHECK(rainbow_weight(doubled) == 4);
}

TEST_CASE("rainbow_to_roman picks the majority color") {
  CHECK(rainbow_to_roman({{kRainbowOne, kRainbowOne, kRainbowTwo}}) ==
        RomanAssignment{{1, 1, 2}});
  // Mirrored colors give the mirrored result after the internal swap.
  CHECK(rainbow_to_roman({{kRainbowTwo, kRainbowTwo, kRainbowOne}}) ==
        RomanAssignment{{1, 1, 2}});
  CHECK(rainbow_to_roman({{0, 0, 0}}) == RomanAssignment{{0, 0, 0}});
}

TEST_CASE("conversions preserve validity on every small graph") {
  for (int n = 1; n <= 4; ++n) {
    enumerate_all_graphs(n, [&](const Graph& g) {
      enumerate_assignments(n, 3, [&](const std::vector<std::uint8_t>& values) {
        const RomanAssignment roman{values};
        if (!is_valid_roman(g, roman)) return;
        const RainbowAssignment rainbow = roman_to_rainbow(roman);
        CHECK(is_valid_rainbow(g, rainbow));
        CHECK(rainbow_weight(rainbow) == roman_weight(roman));
      });
      enumerate_assignments(n, 4, [&](const std::vector<std::uint8_t>& labels) {
        const RainbowAssignment rainbow{labels};
        if (!is_valid_rainbow(g, rainbow)) return;
        const RomanAssignment roman = rainbow_to_roman(rainbow);
        CHECK(is_valid_roman(g, roman));
        CHECK(roman_weight(roman) <= 3 * rainbow_weight(rainbow) / 2);
      });
    });
  }
}

TEST_CASE("conversions preserve validity on sampled graphs up to n = 8") {
  std::mt19937 rng(17);
  int checked_roman = 0, checked_rainbow = 0;
  while (checked_roman < 150 || checked_rainbow < 150) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = rrdom_testutil::random_graph(n, 0.4, rng);

    std::vector<std::uint8_t> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = static_cast<std::uint8_t>(rng() % 3);
    const RomanAssignment roman{values};
    if (is_valid_roman(g, roman)) {
      ++checked_roman;
      CHECK(is_valid_rainbow(g, roman_to_rainbow(roman)));
      CHECK(rainbow_weight(roman_to_rainbow(roman)) == roman_weight(roman));
    }

    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<std::uint8_t>(rng() % 4);
    const RainbowAssignment rainbow{labels};
    if (is_valid_rainbow(g, rainbow)) {
      ++checked_rainbow;
      CHECK(is_valid_roman(g, rainbow_to_roman(rainbow)));
      CHECK(roman_weight(rainbow_to_roman(rainbow)) <=
            3 * rainbow_weight(rainbow) / 2);
    }
  }
}

TEST_CASE("color swap preserves weight and validity") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = rrdom_testutil::random_graph(n, 0.5, rng);
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(n));
    for (auto& l : labels) l = static_cast<std::uint8_t>(rng() % 4);
    const RainbowAssignment f{labels};
    const RainbowAssignment swapped = swap_colors(f);
    CHECK(rainbow_weight(swapped) == rainbow_weight(f));
    CHECK(is_valid_rainbow(g, swapped) == is_valid_rainbow(g, f));
    CHECK(swap_colors(swapped) == f);
  }
}

TEST_CASE("assignment text round trip") {
  const RainbowAssignment f{{0, 1, 2, 3}};
  CHECK(to_text(f) == "012B");
  CHECK(rainbow_from_text("012B") == f);
  const RomanAssignment g{{2, 0, 1}};
  CHECK(to_text(g) == "201");
  CHECK(roman_from_text("201") == g);
  CHECK_THROWS_AS(rainbow_from_text("01x"), std::invalid_argument);
  CHECK_THROWS_AS(roman_from_text("3"), std::invalid_argument);
  CHECK_THROWS_AS(roman_from_text("B"), std::invalid_argument);
}
