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

#include "zetalab/transfer.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace zetalab {

TruncationMode TruncationMode::truncated(int k) {
  if (k < 1) throw InvalidTruncation("truncation level must be >= 1");
  return TruncationMode(k);
}

namespace {

const QPoly& w_one() {
  static const QPoly w(1);
  return w;
}
const QPoly& w_q() {
  static const QPoly w = QPoly::q();
  return w;
}
const QPoly& w_q_minus_1() {
  static const QPoly w = QPoly::q() - 1;
  return w;
}
const QPoly& w_q2_minus_q() {
  static const QPoly w = QPoly::monomial(1, 2) - QPoly::q();
  return w;
}
const QPoly& w_q2_minus_1() {
  static const QPoly w = QPoly::monomial(1, 2) - 1;
  return w;
}
const QPoly& w_q2() {
  static const QPoly w = QPoly::monomial(1, 2);
  return w;
}

}  // namespace

std::vector<WeightedArrow> out_neighbors(const EdgeLabel& e, const TruncationMode& mode) {
  if (!mode.is_full() && e.level >= mode.level()) {
    throw OutsideTruncation(to_string(e) + " lies outside truncation level " + std::to_string(mode.level()));
  }
  const int a = e.level;
  const int b = e.offset;
  const auto label = [&](int level, int offset, int leg) { return EdgeLabel{e.type, level, offset, leg}; };
  switch (e.leg) {
    case 1:
      if (a == 0) return {{label(0, b, 2), w_q2_minus_1()}, {label(0, b + 1, 1), w_one()}};
      return {{label(a, b, 2), w_q_minus_1()}, {label(a - 1, b + 1, 3), w_q2_minus_q()}, {label(a, b + 1, 1), w_one()}};
    case 2:
      if (!mode.is_full() && a == mode.level() - 1) return {{label(a, b, 3), w_q2_minus_q()}};
      if (b == 0) return {{label(a, 0, 3), w_q2_minus_q()}, {label(a + 1, 0, 1), w_q()}};
      return {{label(a, b, 3), w_q2_minus_q()}, {label(a + 1, b - 1, 2), w_q()}};
    case 3:
      if (a == 0 && b == 0) return {{label(0, 0, 1), w_q2()}};
      if (a == 0) return {{label(0, b - 1, 2), w_q2()}};
      return {{label(a - 1, b, 3), w_q2()}};
  }
  throw std::invalid_argument("leg must be 1, 2 or 3");
}

const TransferRule& standard_rule() {
  static const TransferRule rule = [](const EdgeLabel& e, const TruncationMode& mode) { return out_neighbors(e, mode); };
  return rule;
}

QPoly row_sum(const EdgeLabel& e, const TruncationMode& mode, const TransferRule& rule) {
  QPoly sum;
  for (const auto& arrow : rule(e, mode)) sum += arrow.weight;
  return sum;
}

namespace {

template <class W>
struct Arrow {
  std::uint32_t target;
  W weight;
};

// Closed-walk sum over a window. Each step moves level and offset by at most
// one, so a walk that must return to its start within `remaining` steps can
// be pruned once it is farther than that in either coordinate.
template <class W, class Convert>
W closed_walk_sum(EdgeType type, int m, const Region& region, const TransferRule& rule, Convert convert) {
  const std::size_t n = region.edge_count();
  std::vector<std::vector<Arrow<W>>> adjacency(n);
  std::vector<EdgeLabel> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = region.label_at(type, i);
    for (const auto& arrow : rule(labels[i], TruncationMode::full())) {
      if (std::abs(arrow.target.level - labels[i].level) > 1 || std::abs(arrow.target.offset - labels[i].offset) > 1) {
        throw std::logic_error("transfer rule moves more than one chamber per step");
      }
      if (!region.contains(arrow.target)) continue;
      adjacency[i].push_back({static_cast<std::uint32_t>(region.index_of(arrow.target)), convert(arrow.weight)});
    }
  }

  W total{};
  std::vector<W> current(n), next(n);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> active, next_active;
  for (std::size_t s = 0; s < n; ++s) {
    const EdgeLabel& start = labels[s];
    active.assign(1, static_cast<std::uint32_t>(s));
    current[s] = W(1);
    for (int step = 1; step <= m; ++step) {
      const int remaining = m - step;
      next_active.clear();
      for (const auto i : active) {
        for (const auto& arrow : adjacency[i]) {
          const EdgeLabel& t = labels[arrow.target];
          if (std::abs(t.level - start.level) > remaining || std::abs(t.offset - start.offset) > remaining) continue;
          if (!seen[arrow.target]) {
            seen[arrow.target] = 1;
            next_active.push_back(arrow.target);
          }
          next[arrow.target] += current[i] * arrow.weight;
        }
      }
      for (const auto i : active) current[i] = W{};
      for (const auto i : next_active) seen[i] = 0;
      std::swap(current, next);
      std::swap(active, next_active);
    }
    for (const auto i : active) {
      if (i == s) total += current[i];
      current[i] = W{};
    }
  }
  return total;
}

Region enlarge(const Region& r) { return Region(r.max_level() + 1, 2 * r.max_offset()); }

template <class W, class Compute>
TraceResult<W> stabilised(int m, Compute compute) {
  if (m < 1) throw std::invalid_argument("trace_power: m must be >= 1");
  Region r0(m + 2, m + 3);
  Region r1 = enlarge(r0);
  W v0 = compute(r0);
  W v1 = compute(r1);
  for (;;) {
    Region r2 = enlarge(r1);
    W v2 = compute(r2);
    if (v0 == v1 && v1 == v2) return {std::move(v0), r0};
    r0 = r1;
    r1 = r2;
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
}

}  // namespace

QPoly trace_power_in_region(EdgeType type, int m, const Region& r, const TransferRule& rule) {
  return closed_walk_sum<QPoly>(type, m, r, rule, [](const QPoly& w) { return w; });
}

Rational trace_power_in_region(EdgeType type, int m, const Region& r, const Rational& q_value,
                               const TransferRule& rule) {
  return closed_walk_sum<Rational>(type, m, r, rule, [&](const QPoly& w) { return w.eval(q_value); });
}

TraceResult<QPoly> trace_power(EdgeType type, int m, const TransferRule& rule) {
  return stabilised<QPoly>(m, [&](const Region& r) { return trace_power_in_region(type, m, r, rule); });
}

TraceResult<Rational> trace_power(EdgeType type, int m, const Rational& q_value, const TransferRule& rule) {
  return stabilised<Rational>(m, [&](const Region& r) { return trace_power_in_region(type, m, r, q_value, rule); });
}

QPoly SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto it = entries.find({row, col});
  return it == entries.end() ? QPoly() : it->second;
}

SparseMatrix operator_matrix(EdgeType type, const Region& r, const TruncationMode& mode) {
  if (!mode.is_full() && mode.level() != r.max_level()) {
    throw InvalidTruncation("operator_matrix: truncation level must equal the region's level bound");
  }
  SparseMatrix mat;
  mat.dim = r.edge_count();
  for (const auto& e : edges_in_region(type, r)) {
    const std::size_t col = r.index_of(e);
    for (const auto& arrow : out_neighbors(e, mode)) {
      if (!r.contains(arrow.target)) continue;
      mat.entries[{r.index_of(arrow.target), col}] += arrow.weight;
    }
  }
  return mat;
}

}  // namespace zetalab
