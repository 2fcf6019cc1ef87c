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

#ifndef RRDOM_DOMINATION_HPP_
#define RRDOM_DOMINATION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rrdom/graph.hpp"

namespace rrdom {

// Per-vertex label of a 2-rainbow dominating function: a subset of the two
// colors, stored as a bitmask (bit 0 = color 1, bit 1 = color 2).
inline constexpr std::uint8_t kRainbowNone = 0;
inline constexpr std::uint8_t kRainbowOne = 1;
inline constexpr std::uint8_t kRainbowTwo = 2;
inline constexpr std::uint8_t kRainbowBoth = 3;

struct RainbowAssignment {
  std::vector<std::uint8_t> labels;
  bool operator==(const RainbowAssignment&) const = default;
};

struct RomanAssignment {
  std::vector<std::uint8_t> values;  // each in {0, 1, 2}
  bool operator==(const RomanAssignment&) const = default;
};

/// Sum over vertices of |f(u)|.
int rainbow_weight(const RainbowAssignment& f);

/// Sum over vertices of g(u).
int roman_weight(const RomanAssignment& g);

/// True iff every vertex with an empty label sees both colors among its
/// neighbors. Throws std::invalid_argument on a length mismatch.
bool is_valid_rainbow(const Graph& g, const RainbowAssignment& f);

/// True iff every vertex with value 0 has a neighbor with value 2.
/// Throws std::invalid_argument on a length mismatch.
bool is_valid_roman(const Graph& g, const RomanAssignment& a);

/// Pointwise 0 -> {}, 1 -> {1}, 2 -> {1,2}. Preserves weight exactly and
/// maps valid functions to valid functions on the same graph.
RainbowAssignment roman_to_rainbow(const RomanAssignment& g);

/// Pointwise {} -> 0, majority singleton -> 1, minority singleton and
/// {1,2} -> 2. Swaps the two colors first when {2} outnumbers {1}, so the
/// result weighs at most floor(3w/2) and validity is preserved.
RomanAssignment rainbow_to_roman(const RainbowAssignment& f);

/// Exchanges the two colors everywhere; preserves weight and validity.
RainbowAssignment swap_colors(const RainbowAssignment& f);

// Compact text forms used by the CLI and in test fixtures: one character
// per vertex, '0'/'1'/'2'/'B' for rainbow labels and '0'/'1'/'2' for Roman
// values.
std::string to_text(const RainbowAssignment& f);
std::string to_text(const RomanAssignment& g);
RainbowAssignment rainbow_from_text(std::string_view text);
RomanAssignment roman_from_text(std::string_view text);

}  // namespace rrdom

#endif  // RRDOM_DOMINATION_HPP_
