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

// Test-only oracles. Nothing here goes through QPoly or Series arithmetic,
// so agreement with the library is a genuine cross-check.

#ifndef ZETALAB_TESTS_ORACLE_HPP
#define ZETALAB_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "zetalab/polyseries.hpp"
#include "zetalab/transfer.hpp"

namespace oracle {

/// Sum of c * u^i * q^j keyed by (i, j), truncated at u^order.
struct BiPoly {
  int order = 0;
  std::map<std::pair<int, int>, mpz_class> terms;

  static BiPoly one(int order) {
    BiPoly p{order, {}};
    p.terms[{0, 0}] = 1;
    return p;
  }

  static BiPoly zero(int order) { return BiPoly{order, {}}; }

  /// c q^a u^b
  static BiPoly term(int order, long c, int q_exp, int u_exp) {
    BiPoly p = zero(order);
    if (u_exp <= order) p.terms[{u_exp, q_exp}] = c;
    return p;
  }

  /// 1 + c q^a u^b where c = sign.
  static BiPoly binomial(int order, long sign, int q_exp, int u_exp) {
    BiPoly p = one(order);
    if (u_exp <= order) p.terms[{u_exp, q_exp}] += sign;
    return p;
  }

  /// 1 / (1 - q^a u^b) = sum_j q^{aj} u^{bj}
  static BiPoly geometric(int order, int q_exp, int u_exp) {
    BiPoly p{order, {}};
    for (int j = 0; j * u_exp <= order; ++j) p.terms[{j * u_exp, j * q_exp}] = 1;
    return p;
  }

  BiPoly operator*(const BiPoly& o) const {
    BiPoly r{std::min(order, o.order), {}};
    for (const auto& [k1, c1] : terms)
      for (const auto& [k2, c2] : o.terms) {
        const int i = k1.first + k2.first;
        if (i > r.order) continue;
        r.terms[{i, k1.second + k2.second}] += c1 * c2;
      }
    return r;
  }

  BiPoly operator+(const BiPoly& o) const {
    BiPoly r{std::min(order, o.order), {}};
    for (const auto& [k, c] : terms)
      if (k.first <= r.order) r.terms[k] += c;
    for (const auto& [k, c] : o.terms)
      if (k.first <= r.order) r.terms[k] += c;
    return r;
  }

  /// 1 / (1 - x) as sum_j x^j; x must have no u^0 term.
  static BiPoly inverse_one_minus(const BiPoly& x) {
    BiPoly acc = one(x.order);
    BiPoly power = one(x.order);
    for (int j = 1; j <= x.order; ++j) {
      power = power * x;
      acc = acc + power;
    }
    return acc;
  }

  BiPoly scaled(long c, int q_shift, int u_shift) const {
    BiPoly r{order, {}};
    for (const auto& [k, v] : terms)
      if (k.first + u_shift <= order) r.terms[{k.first + u_shift, k.second + q_shift}] += v * c;
    return r;
  }

  /// Conversion for comparison only.
  zetalab::USeries to_series() const {
    std::vector<std::vector<zetalab::Rational>> dense(static_cast<std::size_t>(order) + 1);
    for (const auto& [k, c] : terms) {
      auto& row = dense[static_cast<std::size_t>(k.first)];
      if (row.size() <= static_cast<std::size_t>(k.second)) row.resize(static_cast<std::size_t>(k.second) + 1);
      row[static_cast<std::size_t>(k.second)] += zetalab::Rational(c);
    }
    zetalab::USeries s(order);
    for (int i = 0; i <= order; ++i) s[i] = zetalab::QPoly(dense[static_cast<std::size_t>(i)]);
    return s;
  }

  mpz_class eval_u_coeff(int i, long q) const {
    mpz_class acc = 0;
    for (const auto& [k, c] : terms) {
      if (k.first != i) continue;
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(k.second));
      acc += c * p;
    }
    return acc;
  }
};

/// Tr(T^m) at an integer q by dense matrix powers of the region's operator.
inline mpz_class dense_trace(zetalab::EdgeType type, int m, const zetalab::Region& region, long q) {
  const std::size_t n = region.edge_count();
  std::vector<std::vector<mpz_class>> t(n, std::vector<mpz_class>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const auto e = region.label_at(type, col);
    for (const auto& a : zetalab::out_neighbors(e)) {
      if (!region.contains(a.target)) continue;
      const zetalab::Rational w = a.weight.eval(q);
      t[region.index_of(a.target)][col] += w.get_num();
    }
  }
  auto power = t;
  for (int step = 1; step < m; ++step) {
    std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (power[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (t[k][j] != 0) next[i][j] += power[i][k] * t[k][j];
      }
    power = std::move(next);
  }
  mpz_class tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
  return tr;
}

}  // namespace oracle

#endif  // ZETALAB_TESTS_ORACLE_HPP
