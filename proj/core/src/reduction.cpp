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

#include "rrdom/reduction.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace rrdom {

namespace {

void validate_path(const Graph& g, const ReduciblePath& p) {
  const std::array<int, 5> ids{p.x, p.u, p.v, p.w, p.y};
  for (int id : ids)
    if (id < 0 || id >= g.n())
      throw std::invalid_argument("reducible path: vertex id out of range");
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (ids[i] == ids[j])
        throw std::invalid_argument("reducible path: vertices must be distinct");
  const std::array<std::pair<int, int>, 4> path_edges{
      std::pair{p.x, p.u}, {p.u, p.v}, {p.v, p.w}, {p.w, p.y}};
  for (auto [a, b] : path_edges)
    if (!g.has_edge(a, b))
      throw std::invalid_argument("reducible path: not a path of the graph");
  // Induced: no chords among the five vertices. In particular x and y are
  // non-adjacent, so adding xy keeps the reduced graph simple.
  const std::array<std::pair<int, int>, 6> chords{
      std::pair{p.x, p.v}, {p.x, p.w}, {p.x, p.y},
      {p.u, p.w}, {p.u, p.y}, {p.v, p.y}};
  for (auto [a, b] : chords)
    if (g.has_edge(a, b))
      throw std::invalid_argument("reducible path: path is not induced");
  if (g.degree(p.u) != 2 || g.degree(p.v) != 2 || g.degree(p.w) != 2)
    throw std::invalid_argument("reducible path: internal vertices must have degree 2");
}

int image_of(const Reduction& r, int original_vertex) {
  return r.id_map[static_cast<std::size_t>(original_vertex)];
}

}  // namespace

Reduction contract_p5(const Graph& g, const ReduciblePath& path) {
  validate_path(g, path);
  const int n = g.n();
  std::vector<int> id_map(static_cast<std::size_t>(n));
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (v == path.u || v == path.v || v == path.w)
      id_map[static_cast<std::size_t>(v)] = -1;
    else
      id_map[static_cast<std::size_t>(v)] = next++;
  }
  Graph reduced(n - 3);
  for (int a = 0; a < n; ++a) {
    const int ra = id_map[static_cast<std::size_t>(a)];
    if (ra < 0) continue;
    for_each_bit(g.neighbors(a), [&](int b) {
      const int rb = id_map[static_cast<std::size_t>(b)];
      if (b > a && rb >= 0) reduced.add_edge(ra, rb);
    });
  }
  reduced.add_edge(id_map[static_cast<std::size_t>(path.x)],
                   id_map[static_cast<std::size_t>(path.y)]);
  return Reduction{g, std::move(reduced), path, std::move(id_map)};
}

RainbowAssignment extend_rainbow(const Reduction& r,
                                 const RainbowAssignment& on_reduced) {
  if (!is_valid_rainbow(r.reduced, on_reduced))
    throw std::invalid_argument("extend_rainbow: assignment is not valid on the reduced graph");

  RainbowAssignment out;
  out.labels.assign(static_cast<std::size_t>(r.original.n()), kRainbowNone);
  for (int v = 0; v < r.original.n(); ++v) {
    const int rv = image_of(r, v);
    if (rv >= 0)
      out.labels[static_cast<std::size_t>(v)] =
          on_reduced.labels[static_cast<std::size_t>(rv)];
  }

  const std::uint8_t at_x =
      on_reduced.labels[static_cast<std::size_t>(image_of(r, r.path.x))];
  const std::uint8_t at_y =
      on_reduced.labels[static_cast<std::size_t>(image_of(r, r.path.y))];
  auto& lu = out.labels[static_cast<std::size_t>(r.path.u)];
  auto& lv = out.labels[static_cast<std::size_t>(r.path.v)];
  auto& lw = out.labels[static_cast<std::size_t>(r.path.w)];

  const bool x_empty = (at_x == kRainbowNone);
  const bool y_empty = (at_y == kRainbowNone);
  if (x_empty == y_empty) {
    // Both labeled or both empty: one {1,2} in the middle serves u and w,
    // and an empty endpoint keeps its colors from surviving neighbors.
    lu = kRainbowNone;
    lv = kRainbowBoth;
    lw = kRainbowNone;
  } else {
    // Exactly one endpoint is empty; orient the case so it sits at y.
    const std::uint8_t endpoint = x_empty ? at_y : at_x;
    std::uint8_t near = kRainbowNone, mid = kRainbowNone, far = kRainbowNone;
    if (endpoint == kRainbowBoth) {
      far = kRainbowBoth;  // the far internal vertex re-covers the empty endpoint
    } else {
      mid = (endpoint & kRainbowOne) ? kRainbowTwo : kRainbowOne;
      far = endpoint;
    }
    if (x_empty) {
      lu = far;
      lv = mid;
      lw = near;
    } else {
      lu = near;
      lv = mid;
      lw = far;
    }
  }
  return out;
}

RomanAssignment extend_roman(const Reduction& r,
                             const RomanAssignment& on_reduced) {
  if (!is_valid_roman(r.reduced, on_reduced))
    throw std::invalid_argument("extend_roman: assignment is not valid on the reduced graph");

  RomanAssignment out;
  out.values.assign(static_cast<std::size_t>(r.original.n()), 0);
  for (int v = 0; v < r.original.n(); ++v) {
    const int rv = image_of(r, v);
    if (rv >= 0)
      out.values[static_cast<std::size_t>(v)] =
          on_reduced.values[static_cast<std::size_t>(rv)];
  }

  const std::uint8_t at_x =
      on_reduced.values[static_cast<std::size_t>(image_of(r, r.path.x))];
  const std::uint8_t at_y =
      on_reduced.values[static_cast<std::size_t>(image_of(r, r.path.y))];
  auto& vu = out.values[static_cast<std::size_t>(r.path.u)];
  auto& vv = out.values[static_cast<std::size_t>(r.path.v)];
  auto& vw = out.values[static_cast<std::size_t>(r.path.w)];

  if (at_x == 2 && at_y == 0) {
    vu = 0; vv = 0; vw = 2;  // w re-covers y, u leans on x
  } else if (at_x == 0 && at_y == 2) {
    vu = 2; vv = 0; vw = 0;
  } else {
    vu = 0; vv = 2; vw = 0;
  }
  return out;
}

}  // namespace rrdom
