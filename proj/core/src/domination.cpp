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

#include <cstddef>
#include <stdexcept>

namespace rrdom {

namespace {

constexpr int kLabelSize[4] = {0, 1, 1, 2};

void check_length(const Graph& g, std::size_t len) {
  if (len != static_cast<std::size_t>(g.n()))
    throw std::invalid_argument("assignment length does not match graph order");
}

}  // namespace

int rainbow_weight(const RainbowAssignment& f) {
  int w = 0;
  for (std::uint8_t label : f.labels) w += kLabelSize[label & 3];
  return w;
}

int roman_weight(const RomanAssignment& g) {
  int w = 0;
  for (std::uint8_t v : g.values) w += v;
  return w;
}

bool is_valid_rainbow(const Graph& g, const RainbowAssignment& f) {
  check_length(g, f.labels.size());
  for (int u = 0; u < g.n(); ++u) {
    if (f.labels[static_cast<std::size_t>(u)] != kRainbowNone) continue;
    std::uint8_t seen = 0;
    for_each_bit(g.neighbors(u), [&](int v) {
      seen |= f.labels[static_cast<std::size_t>(v)];
    });
    if (seen != kRainbowBoth) return false;
  }
  return true;
}

bool is_valid_roman(const Graph& g, const RomanAssignment& a) {
  check_length(g, a.values.size());
  for (int u = 0; u < g.n(); ++u) {
    if (a.values[static_cast<std::size_t>(u)] != 0) continue;
    bool guarded = false;
    for_each_bit(g.neighbors(u), [&](int v) {
      if (a.values[static_cast<std::size_t>(v)] == 2) guarded = true;
    });
    if (!guarded) return false;
  }
  return true;
}

RainbowAssignment roman_to_rainbow(const RomanAssignment& g) {
  RainbowAssignment f;
  f.labels.reserve(g.values.size());
  for (std::uint8_t v : g.values) {
    switch (v) {
      case 0: f.labels.push_back(kRainbowNone); break;
      case 1: f.labels.push_back(kRainbowOne); break;
      case 2: f.labels.push_back(kRainbowBoth); break;
      default: throw std::invalid_argument("Roman value outside {0,1,2}");
    }
  }
  return f;
}

RomanAssignment rainbow_to_roman(const RainbowAssignment& f) {
  int ones = 0, twos = 0;
  for (std::uint8_t label : f.labels) {
    if (label == kRainbowOne) ++ones;
    if (label == kRainbowTwo) ++twos;
  }
  // Normalize so the majority singleton color maps to value 1; the swap is
  // harmless for validity and keeps the weight within floor(3w/2).
  const std::uint8_t majority = (twos > ones) ? kRainbowTwo : kRainbowOne;
  RomanAssignment g;
  g.values.reserve(f.labels.size());
  for (std::uint8_t label : f.labels) {
    if (label == kRainbowNone)
      g.values.push_back(0);
    else if (label == majority)
      g.values.push_back(1);
    else
      g.values.push_back(2);
  }
  return g;
}

RainbowAssignment swap_colors(const RainbowAssignment& f) {
  RainbowAssignment out;
  out.labels.reserve(f.labels.size());
  for (std::uint8_t label : f.labels) {
    std::uint8_t swapped = 0;
    if (label & kRainbowOne) swapped |= kRainbowTwo;
    if (label & kRainbowTwo) swapped |= kRainbowOne;
    out.labels.push_back(swapped);
  }
  return out;
}

std::string to_text(const RainbowAssignment& f) {
  static constexpr char kChars[4] = {'0', '1', '2', 'B'};
  std::string out;
  out.reserve(f.labels.size());
  for (std::uint8_t label : f.labels) out.push_back(kChars[label & 3]);
  return out;
}

std::string to_text(const RomanAssignment& g) {
  std::string out;
  out.reserve(g.values.size());
  for (std::uint8_t v : g.values) out.push_back(static_cast<char>('0' + v));
  return out;
}

RainbowAssignment rainbow_from_text(std::string_view text) {
  RainbowAssignment f;
  f.labels.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '0': f.labels.push_back(kRainbowNone); break;
      case '1': f.labels.push_back(kRainbowOne); break;
      case '2': f.labels.push_back(kRainbowTwo); break;
      case 'B': f.labels.push_back(kRainbowBoth); break;
      default:
        throw std::invalid_argument(
            "rainbow assignment text must use characters 0/1/2/B");
    }
  }
  return f;
}

RomanAssignment roman_from_text(std::string_view text) {
  RomanAssignment g;
  g.values.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '2')
      throw std::invalid_argument(
          "Roman assignment text must use characters 0/1/2");
    g.values.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return g;
}

}  // namespace rrdom
