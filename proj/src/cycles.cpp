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

#include "zetalab/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace zetalab {

int rotation_period(const std::vector<EdgeLabel>& edges) {
  const int n = static_cast<int>(edges.size());
  for (int p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool same = true;
    for (int i = 0; i < n && same; ++i) same = edges[static_cast<std::size_t>(i)] == edges[static_cast<std::size_t>((i + p) % n)];
    if (same) return p;
  }
  return n;
}

namespace {

bool is_least_rotation(const std::vector<EdgeLabel>& edges) {
  const std::size_t n = edges.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const EdgeLabel& rotated = edges[(i + r) % n];
      if (rotated < edges[i]) return false;
      if (edges[i] < rotated) break;
    }
  }
  return true;
}

struct Search {
  const TransferRule& rule;
  int length;
  EdgeLabel start;
  std::vector<EdgeLabel> path;
  std::vector<QPoly> weights;  // weights[i] = weight of the step path[i] -> path[i+1]
  std::vector<Cycle> found;

  void extend(const EdgeLabel& current) {
    const int depth = static_cast<int>(path.size());
    for (const auto& arrow : rule(current, TruncationMode::full())) {
      const EdgeLabel& next = arrow.target;
      if (arrow.weight.is_zero()) continue;
      // A canonical representative starts at its least edge.
      if (next < start) continue;
      if (depth == length) {
        if (next == start) close(arrow.weight);
        continue;
      }
      const int remaining = length - depth;
      if (std::abs(next.level - start.level) > remaining || std::abs(next.offset - start.offset) > remaining) continue;
      path.push_back(next);
      weights.push_back(arrow.weight);
      extend(next);
      path.pop_back();
      weights.pop_back();
    }
  }

  void close(const QPoly& last_weight) {
    if (!is_least_rotation(path)) return;
    QPoly w = last_weight;
    for (const auto& step : weights) w *= step;
    found.push_back({path, std::move(w), rotation_period(path)});
  }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(EdgeType type, int n, const TransferRule& rule) {
  if (n < 1) throw std::invalid_argument("enumerate_cycles: n must be >= 1");
  // A closed path of length n never climbs n levels above, or n offsets
  // beyond, its least edge; start edges are drawn from this window.
  const Region window(n + 2, n + 3);
  std::vector<Cycle> cycles;
  for (const auto& start : edges_in_region(type, window)) {
    Search search{rule, n, start, {start}, {}, {}};
    search.extend(start);
    for (auto& c : search.found) cycles.push_back(std::move(c));
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) { return a.edges < b.edges; });
  return cycles;
}

QPoly weighted_count(EdgeType type, int n, const TransferRule& rule) {
  QPoly total;
  for (const auto& c : enumerate_cycles(type, n, rule)) total += c.weight * Rational(c.primitive_length);
  return total;
}

Rational weighted_count(EdgeType type, int n, const Rational& q_value, const TransferRule& rule) {
  Rational total = 0;
  for (const auto& c : enumerate_cycles(type, n, rule)) total += c.weight.eval(q_value) * c.primitive_length;
  return total;
}

}  // namespace zetalab
