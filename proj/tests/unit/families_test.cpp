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

#include <random>

#include <doctest.h>

#include "common/oracle.hpp"
#include "common/special_graphs.hpp"
#include "rrdom/solver.hpp"

using namespace rrdom;

namespace {

int sum_of_optima(const Graph& g) {
  return solve_rainbow_domination(g).weight + solve_roman_domination(g).weight;
}

const TkSpec kT2{2, {{1, 2}}};

Graph c1c2_graph() {
  GFamilySpec spec;
  spec.variant = GFamilySpec::Variant::kC1C2;
  return build_G_family(spec);
}

}  // namespace

TEST_CASE("cycle sums from the solver") {
  CHECK(sum_of_optima(build_cycle(3)) == 4);
  CHECK(sum_of_optima(build_cycle(5)) == 7);
  CHECK(sum_of_optima(build_cycle(8)) == 10);
  CHECK_THROWS_AS(build_cycle(2), std::invalid_argument);
}

TEST_CASE("spider construction") {
  const Graph star = build_spider({1, 1, 1});
  CHECK(star.n() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(build_spider({1, 2, 2}).n() == 6);
  CHECK_THROWS_AS(build_spider({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(build_spider({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("Tk construction and validation") {
  CHECK(build_Tk(TkSpec{1, {}}).n() == 4);
  const Graph t2 = build_Tk(kT2);
  CHECK(t2.n() == 8);
  CHECK(t2.degree(1) == 3);  // b1 carries the block edges plus the b-edge
  CHECK(t2.degree(5) == 3);
  CHECK(t2.edge_count() == 7);

  const Graph t3 = build_Tk(TkSpec{3, {{1, 2}, {2, 3}}});
  CHECK(t3.n() == 12);
  CHECK(t3.edge_count() == 11);

  CHECK_THROWS_AS(build_Tk(TkSpec{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(build_Tk(TkSpec{2, {}}), std::invalid_argument);
  CHECK_THROWS_AS(build_Tk(TkSpec{2, {{1, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_Tk(TkSpec{3, {{1, 2}, {1, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_Tk(TkSpec{3, {{1, 2}, {4, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(build_Tk(TkSpec{17, {}}), std::invalid_argument);
}

TEST_CASE("G family construction") {
  const Graph c1c2 = c1c2_graph();
  CHECK(c1c2.n() == 8);
  CHECK(c1c2.has_edge(2, 6));  // the added c1-c2 edge
  CHECK(c1c2.edge_count() == 8);

  GFamilySpec plain;
  plain.variant = GFamilySpec::Variant::kBExtra;
  plain.tk = TkSpec{1, {}};
  CHECK(build_G_family(plain) == build_Tk(TkSpec{1, {}}));

  GFamilySpec extended;
  extended.variant = GFamilySpec::Variant::kBExtra;
  extended.tk = TkSpec{3, {{1, 2}, {2, 3}}};
  extended.extra_b_edges = {{1, 3}};
  const Graph g = build_G_family(extended);
  CHECK(g.n() == 12);
  CHECK(g.has_edge(1, 9));  // b1-b3

  GFamilySpec duplicate = extended;
  duplicate.extra_b_edges = {{1, 2}};
  CHECK_THROWS_AS(build_G_family(duplicate), std::invalid_argument);
  duplicate.extra_b_edges = {{1, 3}, {3, 1}};
  CHECK_THROWS_AS(build_G_family(duplicate), std::invalid_argument);
}

TEST_CASE("canonical assignments") {
  const TkSpec t1{1, {}};
  CHECK(canonical_fk(t1).labels ==
        std::vector<std::uint8_t>{kRainbowNone, kRainbowBoth, kRainbowNone,
                                  kRainbowOne});
  CHECK(canonical_gk(t1).values == std::vector<std::uint8_t>{0, 2, 0, 1});
  CHECK(rainbow_weight(canonical_fk(t1)) == 3);

  CHECK(rainbow_weight(canonical_fk(kT2)) == 6);
  CHECK(roman_weight(canonical_gk(kT2)) == 6);
  CHECK(is_valid_rainbow(build_Tk(kT2), canonical_fk(kT2)));
  CHECK(is_valid_roman(build_Tk(kT2), canonical_gk(kT2)));

  // Extra edges between b-vertices (or the c1-c2 edge) never invalidate.
  CHECK(is_valid_rainbow(c1c2_graph(), canonical_fk(kT2)));
  CHECK(is_valid_roman(c1c2_graph(), canonical_gk(kT2)));
  GFamilySpec extended;
  extended.variant = GFamilySpec::Variant::kBExtra;
  extended.tk = TkSpec{3, {{1, 2}, {2, 3}}};
  extended.extra_b_edges = {{1, 3}};
  CHECK(is_valid_rainbow(build_G_family(extended), canonical_fk(extended.tk)));
  CHECK(is_valid_roman(build_G_family(extended), canonical_gk(extended.tk)));
}

TEST_CASE("Tk recognizer") {
  CHECK(is_in_T(build_Tk(TkSpec{1, {}})) == 1);
  CHECK(is_in_T(build_Tk(kT2)) == 2);

  Graph p5(5);
  for (int v = 0; v + 1 < 5; ++v) p5.add_edge(v, v + 1);
  CHECK(!is_in_T(p5).has_value());

  Graph p8(8);
  for (int v = 0; v + 1 < 8; ++v) p8.add_edge(v, v + 1);
  CHECK(!is_in_T(p8).has_value());

  CHECK(!is_in_T(build_cycle(8)).has_value());
  CHECK(!is_in_T(build_spider({1, 1, 1})).has_value());
  CHECK(!is_in_T(c1c2_graph()).has_value());  // not a tree

  // Two P4s glued leaf to leaf have no b-edges at all.
  Graph glued(8);
  for (int v = 0; v + 1 < 4; ++v) glued.add_edge(v, v + 1);
  for (int v = 4; v + 1 < 8; ++v) glued.add_edge(v, v + 1);
  glued.add_edge(0, 4);
  CHECK(!is_in_T(glued).has_value());
}

TEST_CASE("Tk recognizer round-trips every shape up to k = 3") {
  std::mt19937 rng(29);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& edges : labeled_trees(k)) {
      const Graph tree = build_Tk(TkSpec{k, edges});
      CHECK(is_in_T(tree) == k);
      // Recognition may not depend on the generator's numbering.
      CHECK(is_in_T(rrdom_testutil::shuffled(tree, rng)) == k);
    }
  }
}

TEST_CASE("G recognizer") {
  CHECK(is_in_G(c1c2_graph()));
  std::mt19937 rng(31);
  CHECK(is_in_G(rrdom_testutil::shuffled(c1c2_graph(), rng)));
  CHECK(is_in_G(build_Tk(TkSpec{1, {}})));  // P4: the k = 1 member
  CHECK(is_in_G(build_Tk(kT2)));            // trees themselves belong
  CHECK(!is_in_G(build_cycle(5)));
  CHECK(!is_in_G(build_cycle(8)));
  CHECK(!is_in_G(build_spider({1, 1, 1})));

  // A near miss: adding a1-a2 instead of extra b-edges.
  Graph wrong = build_Tk(kT2);
  wrong.add_edge(0, 4);
  CHECK(!is_in_G(wrong));
}

TEST_CASE("G recognizer round-trips the generator") {
  std::mt19937 rng(37);
  std::vector<GFamilySpec> specs;
  GFamilySpec c1c2;
  c1c2.variant = GFamilySpec::Variant::kC1C2;
  specs.push_back(c1c2);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& edges : labeled_trees(k)) {
      GFamilySpec plain;
      plain.variant = GFamilySpec::Variant::kBExtra;
      plain.tk = TkSpec{k, edges};
      specs.push_back(plain);
    }
  }
  GFamilySpec triangle;
  triangle.variant = GFamilySpec::Variant::kBExtra;
  triangle.tk = TkSpec{3, {{1, 2}, {2, 3}}};
  triangle.extra_b_edges = {{1, 3}};
  specs.push_back(triangle);

  for (const GFamilySpec& spec : specs) {
    const Graph g = build_G_family(spec);
    CHECK(is_in_G(g));
    CHECK(is_in_G(rrdom_testutil::shuffled(g, rng)));
    // Every member meets the 6/4 sum bound with equality.
    CHECK(2 * sum_of_optima(g) == 3 * g.n());
  }
}

TEST_CASE("every Tk shape up to k = 3 has both optima 3k") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& edges : labeled_trees(k)) {
      const Graph tree = build_Tk(TkSpec{k, edges});
      CHECK(solve_rainbow_domination(tree).weight == 3 * k);
      CHECK(solve_roman_domination(tree).weight == 3 * k);
    }
  }
}

TEST_CASE("per-block weight is at least 3 for every valid assignment") {
  // Exhaustive over the k = 1 and k = 2 trees: any valid assignment puts
  // weight at least 3 on each block a_i, b_i, c_i, d_i.
  for (int k = 1; k <= 2; ++k) {
    for (const auto& edges : labeled_trees(k)) {
      const Graph tree = build_Tk(TkSpec{k, edges});
      const int n = tree.n();
      std::vector<std::uint8_t> labels(static_cast<std::size_t>(n), 0);
      while (true) {
        if (rrdom_oracle::valid_rainbow(tree, labels)) {
          for (int block = 0; block < k; ++block) {
            int weight = 0;
            for (int j = 0; j < 4; ++j) {
              const std::uint8_t l = labels[static_cast<std::size_t>(4 * block + j)];
              weight += (l == 3) ? 2 : (l != 0 ? 1 : 0);
            }
            CHECK(weight >= 3);
          }
        }
        int pos = 0;
        while (pos < n && labels[static_cast<std::size_t>(pos)] == 3)
          labels[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++labels[static_cast<std::size_t>(pos)];
      }

      std::vector<std::uint8_t> values(static_cast<std::size_t>(n), 0);
      while (true) {
        if (rrdom_oracle::valid_roman(tree, values)) {
          for (int block = 0; block < k; ++block) {
            int weight = 0;
            for (int j = 0; j < 4; ++j)
              weight += values[static_cast<std::size_t>(4 * block + j)];
            CHECK(weight >= 3);
          }
        }
        int pos = 0;
        while (pos < n && values[static_cast<std::size_t>(pos)] == 2)
          values[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++values[static_cast<std::size_t>(pos)];
      }
    }
  }
}

TEST_CASE("spiders with three good legs satisfy the 4/3 sum bound") {
  // Every spider on at most 13 vertices, by leg multiset.
  std::vector<std::vector<int>> multisets;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int smallest, int remaining) -> void {
    if (current.size() >= 3) multisets.push_back(current);
    for (int len = smallest; len <= remaining; ++len) {
      current.push_back(len);
      self(self, len, remaining - len);
      current.pop_back();
    }
  };
  recurse(recurse, 1, 12);

  int tested = 0;
  for (const auto& legs : multisets) {
    const Graph spider = build_spider(legs);
    const auto profile = spider_profile(spider);
    REQUIRE(profile.has_value());
    if (profile->good_count < 3) continue;
    ++tested;
    CHECK(3 * sum_of_optima(spider) <= 4 * spider.n());
  }
  CHECK(tested > 50);
}

TEST_CASE("labeled tree enumeration") {
  CHECK(labeled_trees(1).size() == 1);
  CHECK(labeled_trees(2).size() == 1);
  CHECK(labeled_trees(3).size() == 3);
  CHECK(labeled_trees(4).size() == 16);  // Cayley: k^(k-2)
}
