// Copyright 2026 The zetalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zetalab/complex.hpp"

#include <stdexcept>

namespace zetalab {

EdgeType edge_type_from_int(int t) {
  if (t == 1) return EdgeType::One;
  if (t == 2) return EdgeType::Two;
  throw std::invalid_argument("edge type must be 1 or 2, got " + std::to_string(t));
}

std::string to_string(const EdgeLabel& e) {
  return std::string(e.type == EdgeType::One ? "e" : "f") + "[" + std::to_string(e.level) + "," +
         std::to_string(e.offset) + "," + std::to_string(e.leg) + "]";
}

Region::Region(int max_level, int max_offset) : max_level_(max_level), max_offset_(max_offset) {
  if (max_level < 1 || max_offset < 1) throw std::invalid_argument("region bounds must be >= 1");
}

EdgeLabel Region::label_at(EdgeType type, std::size_t index) const {
  const int leg = static_cast<int>(index % 3) + 1;
  const std::size_t chamber = index / 3;
  return {type, static_cast<int>(chamber / static_cast<std::size_t>(max_offset_)),
          static_cast<int>(chamber % static_cast<std::size_t>(max_offset_)), leg};
}

namespace {

// Corners of the chamber carrying the label, in the order the legs visit them.
struct Triangle {
  VertexId first, second, third;
};

Triangle chamber_walk(const EdgeLabel& e) {
  const int m = e.level + e.offset;
  if (e.type == EdgeType::One) {
    const int n = e.level;
    return {{m, n}, {m + 1, n}, {m + 1, n + 1}};
  }
  const int n = e.offset;
  return {{m, n}, {m + 1, n + 1}, {m + 1, n}};
}

}  // namespace

VertexId edge_source(const EdgeLabel& e) {
  const Triangle t = chamber_walk(e);
  switch (e.leg) {
    case 1: return t.first;
    case 2: return t.second;
    case 3: return t.third;
  }
  throw std::invalid_argument("leg must be 1, 2 or 3");
}

VertexId edge_target(const EdgeLabel& e) {
  const Triangle t = chamber_walk(e);
  switch (e.leg) {
    case 1: return t.second;
    case 2: return t.third;
    case 3: return t.first;
  }
  throw std::invalid_argument("leg must be 1, 2 or 3");
}

bool vertices_adjacent(const VertexId& v, const VertexId& w) {
  if (!v.valid() || !w.valid()) return false;
  const int dm = w.m - v.m;
  const int dn = w.n - v.n;
  const auto is = [&](int a, int b) { return dm == a && dn == b; };
  const bool horizontal = is(1, 0) || is(-1, 0);
  const bool vertical_up = is(0, 1);
  const bool vertical_down = is(0, -1);
  const bool diagonal_up = is(1, 1);
  const bool diagonal_down = is(-1, -1);
  if (v.m == 0) return is(1, 0) || is(1, 1);
  if (v.n == 0) return horizontal || vertical_up || diagonal_up;
  if (v.m == v.n) return is(1, 0) || vertical_down || diagonal_up || diagonal_down;
  return horizontal || vertical_up || vertical_down || diagonal_up || diagonal_down;
}

std::vector<EdgeLabel> edges_in_region(EdgeType type, const Region& r) {
  std::vector<EdgeLabel> out;
  out.reserve(r.edge_count());
  for (int a = 0; a < r.max_level(); ++a)
    for (int b = 0; b < r.max_offset(); ++b)
      for (int leg = 1; leg <= 3; ++leg) out.push_back({type, a, b, leg});
  return out;
}

}  // namespace zetalab
