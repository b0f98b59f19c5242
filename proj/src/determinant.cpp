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

#include "zetalab/determinant.hpp"

#include <stdexcept>

#include "zetalab/transfer.hpp"

namespace zetalab {

namespace {

QPoly qpow(int e) { return QPoly::monomial(1, e); }
const QPoly& q_minus_1() {
  static const QPoly p = QPoly::q() - 1;
  return p;
}

// c u^power as a block entry.
UPoly u_term(const QPoly& c, int power) { return UPoly::monomial(c, power); }

// 1-based placement, dropping anything outside the 3k x 3k block.
void put(SparseBlock& block, int dim, int row, int col, const UPoly& value) {
  if (row < 1 || col < 1 || row > dim || col > dim) return;
  block[{row - 1, col - 1}] = value;
}

}  // namespace

BlockSpec build_blocks(int k) {
  if (k < 2) throw InvalidTruncation("build_blocks: k must be >= 2");
  const int dim = 3 * k;
  BlockSpec spec;
  spec.k = k;
  spec.block_dim = dim;
  const QPoly q = QPoly::q();

  for (int i = 1; i <= dim; ++i) put(spec.b, dim, i, i, UPoly(QPoly(1)));
  put(spec.b, dim, 2, 1, u_term(-(qpow(2) - 1), 1));
  for (int s = 1; s <= k; ++s) {
    put(spec.b, dim, 3 * s + 2, 3 * s + 1, u_term(-q_minus_1(), 1));
    if (s >= 2) put(spec.b, dim, 3 * (s - 1), 3 * s, u_term(-qpow(2), 1));
    put(spec.b, dim, 3 * s, 3 * s - 1, u_term(-(qpow(2) - q), 1));
  }

  spec.a = spec.b;
  put(spec.a, dim, 1, 3, u_term(-qpow(2), 1));
  for (int s = 1; s <= k; ++s) put(spec.a, dim, 3 * s + 1, 3 * s - 1, u_term(-q, 1));

  for (int s = 1; s <= k; ++s) {
    put(spec.c, dim, 3 * s - 2, 3 * s - 2, u_term(QPoly(-1), 1));
    put(spec.c, dim, 3 * s, 3 * s + 1, u_term(-(qpow(2) - q), 1));
    put(spec.d, dim, 3 * s + 2, 3 * s - 1, u_term(-q, 1));
  }
  put(spec.d, dim, 2, 3, u_term(-qpow(2), 1));
  return spec;
}

SparseBlock assemble_block_matrix(const BlockSpec& spec, int blocks) {
  if (blocks < 1) throw std::invalid_argument("assemble_block_matrix: need at least one block");
  SparseBlock m;
  const int dim = spec.block_dim;
  const auto place = [&](const SparseBlock& block, int bi, int bj) {
    for (const auto& [pos, value] : block) m[{bi * dim + pos.first, bj * dim + pos.second}] = value;
  };
  for (int i = 0; i < blocks; ++i) {
    place(i == 0 ? spec.a : spec.b, i, i);
    if (i + 1 < blocks) {
      place(spec.c, i + 1, i);
      place(spec.d, i, i + 1);
    }
  }
  return m;
}

AlphaTable schur_initial(int k, int order) {
  if (k < 1) throw InvalidTruncation("schur_initial: k must be >= 1");
  if (order < 1) throw std::invalid_argument("schur: order must be >= 1");
  AlphaTable table;
  table.k = k;
  table.order = order;
  table.iteration = 1;
  table.values.assign(static_cast<std::size_t>(k * k), USeries(order));
  table.at(1, 1) = USeries::monomial(-(qpow(2) - 1), 1, order);
  for (int s = 2; s <= k; ++s) table.at(s, s) = USeries::monomial(-q_minus_1(), 1, order);
  return table;
}

AlphaTable schur_step(const AlphaTable& prev) {
  const int k = prev.k;
  const int order = prev.order;
  AlphaTable next = prev;
  next.iteration = prev.iteration + 1;
  next.converged = false;

  // sum_i (q-1) q^{2i+1} u^{i+2} a_{(i,t)}
  const auto feedback = [&](int t) {
    USeries acc(order);
    for (int i = 1; i <= k; ++i) acc += prev.at(i, t).shifted(i + 2) * (q_minus_1() * qpow(2 * i + 1));
    return acc;
  };
  const QPoly q = QPoly::q();
  for (int t = 1; t <= k; ++t) {
    const QPoly lead = t == 1 ? -(qpow(2) - 1) : -(q_minus_1() * qpow(2 * t - 1));
    next.at(1, t) = USeries::monomial(lead, t, order) + feedback(t);
  }
  for (int s = 2; s <= k; ++s) {
    for (int t = 1; t <= k; ++t) {
      USeries v = prev.at(s - 1, t).shifted(2) * q;
      if (s == t) v += USeries::monomial(-q_minus_1(), 1, order);
      next.at(s, t) = std::move(v);
    }
  }
  return next;
}

AlphaTable schur_iterate(const BlockSpec& spec, int max_iterations, int order) {
  AlphaTable table = schur_initial(spec.k, order);
  while (table.iteration < max_iterations) {
    AlphaTable next = schur_step(table);
    if (next == table) {
      next.converged = true;
      return next;
    }
    table = std::move(next);
  }
  return table;
}

SparseBlock schur_top_block(const BlockSpec& spec, const AlphaTable& table) {
  if (table.k != spec.k) throw std::invalid_argument("schur_top_block: table and blocks disagree on k");
  SparseBlock top = spec.a;
  for (int s = 1; s <= spec.k; ++s) {
    for (int t = 1; t <= spec.k; ++t) {
      const auto& series = table.at(s, t);
      std::vector<QPoly> coeffs(series.coeffs().begin(), series.coeffs().end());
      UPoly entry(std::move(coeffs));
      if (entry.is_zero()) {
        top.erase({3 * s - 2, 3 * t - 3});
      } else {
        top[{3 * s - 2, 3 * t - 3}] = entry;
      }
    }
  }
  return top;
}

USeries alpha_limit(int t, int order) {
  if (t < 1) throw std::invalid_argument("alpha_limit: t must be >= 1");
  const UPoly denominator = UPoly(QPoly(1)) - UPoly::monomial(qpow(4), 3);
  if (t == 1) {
    const UPoly numerator =
        UPoly::monomial(-(qpow(2) - 1), 1) * (UPoly(QPoly(1)) - UPoly::monomial(qpow(3), 3));
    return rational_expand(numerator, denominator, order);
  }
  const UPoly numerator = UPoly::monomial(-(q_minus_1() * qpow(2 * t - 1)), t) +
                          UPoly::monomial(q_minus_1() * qpow(2 * t + 1), t + 3);
  return rational_expand(numerator, denominator, order);
}

namespace {

// 1 + sum_{j=2}^{J} q^{2j-3} u^{2j-3} alpha_j + alpha_1 sum_{j=1}^{J'} q^{4j-1}(q-1) u^{3j-1}
template <class Alpha>
USeries two_by_two(int order, int j_max, Alpha alpha) {
  USeries det = USeries::one(order);
  for (int j = 2; j <= j_max; ++j) {
    if (3 * j - 3 > order) break;  // alpha_j starts at u^j
    det += alpha(j).shifted(2 * j - 3) * qpow(2 * j - 3);
  }
  USeries tail(order);
  for (int j = 1; j <= j_max && 3 * j - 1 <= order; ++j) {
    tail[3 * j - 1] = qpow(4 * j - 1) * q_minus_1();
  }
  det += alpha(1) * tail;
  return det;
}

}  // namespace

USeries det_via_alpha(int order) {
  if (order < 0) throw std::invalid_argument("det_via_alpha: order must be >= 0");
  return two_by_two(order, order + 1, [&](int t) { return alpha_limit(t, order); });
}

USeries det_truncated_via_alpha(const AlphaTable& table) {
  return two_by_two(table.order, table.k, [&](int t) { return table.at(1, t); });
}

USeries det_from_traces(EdgeType type, const std::vector<QPoly>& traces, int order) {
  if (order < 0) throw std::invalid_argument("det_from_traces: order must be >= 0");
  const int step = static_cast<int>(type);
  USeries log_det(order);
  for (int n = 1; n * step <= order; ++n) {
    if (static_cast<std::size_t>(n) > traces.size()) throw std::invalid_argument("det_from_traces: not enough traces");
    log_det[n * step] = -traces[static_cast<std::size_t>(n - 1)] / Rational(n);
  }
  return series_exp(log_det);
}

USeries det_via_traces(EdgeType type, int order) {
  std::vector<QPoly> traces;
  for (int n = 1; n * static_cast<int>(type) <= order; ++n) traces.push_back(trace_power(type, n).value);
  return det_from_traces(type, traces, order);
}

RSeries det_unipotent(const SparseBlock& matrix, std::size_t dim, int order, const Rational& q_value) {
  std::vector<std::vector<RSeries>> rows(dim, std::vector<RSeries>(dim, RSeries(order)));
  for (const auto& [pos, entry] : matrix) {
    rows[static_cast<std::size_t>(pos.first)][static_cast<std::size_t>(pos.second)] =
        specialize(entry.to_series(order), q_value);
  }
  RSeries det = RSeries::one(order);
  for (std::size_t p = 0; p < dim; ++p) {
    const RSeries& pivot = rows[p][p];
    if (sgn(pivot[0]) == 0) throw SingularLeadingMinor("det_unipotent: pivot " + std::to_string(p) + " is not a unit");
    const RSeries pivot_inv = series_inv(pivot);
    det = det * pivot;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = p + 1; c < dim; ++c)
      if (!rows[p][c].is_zero()) pivot_cols.push_back(c);
    for (std::size_t r = p + 1; r < dim; ++r) {
      if (rows[r][p].is_zero()) continue;
      const RSeries factor = rows[r][p] * pivot_inv;
      for (const auto c : pivot_cols) rows[r][c] -= factor * rows[p][c];
      rows[r][p] = RSeries(order);
    }
  }
  return det;
}

RSeries det_direct(const BlockSpec& spec, int blocks, int order, const Rational& q_value) {
  if (order < 0) throw std::invalid_argument("det_direct: order must be >= 0");
  return det_unipotent(assemble_block_matrix(spec, blocks), static_cast<std::size_t>(spec.block_dim * blocks), order,
                       q_value);
}

}  // namespace zetalab
