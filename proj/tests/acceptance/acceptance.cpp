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

// Acceptance suite: one line per criterion, exact equality throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "zetalab/cycles.hpp"
#include "zetalab/determinant.hpp"
#include "zetalab/transfer.hpp"
#include "zetalab/verify.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using oracle::BiPoly;

namespace {

QPoly qp(int e) { return QPoly::monomial(1, e); }

UPoly one_minus(int q_exp, int u_exp) { return UPoly(QPoly(1)) - UPoly::monomial(qp(q_exp), u_exp); }

// Empty string means pass; otherwise the first discrepancy.
using Check = std::function<std::string()>;

std::string count_identity() {
  for (int m = 1; m <= 9; ++m)
    for (long qv : {2L, 3L, 5L}) {
      const Rational q(qv);
      const Rational trace = trace_power(EdgeType::One, m, q).value;
      const Rational cycles = weighted_count(EdgeType::One, m, q);
      const Rational closed = counts_closed_form(m).eval(q);
      if (trace != closed || cycles != closed)
        return "m=" + std::to_string(m) + " q=" + std::to_string(qv) + ": trace=" + trace.get_str() +
               " cycles=" + cycles.get_str() + " closed=" + closed.get_str();
    }
  const auto pinned = [](int m, long qv, long expect) {
    return trace_power(EdgeType::One, m, Rational(qv)).value == expect;
  };
  if (!pinned(3, 2, 120) || !pinned(6, 2, 10944) || !pinned(9, 2, 763392) || !pinned(3, 3, 1782))
    return "pinned values differ";
  return {};
}

std::string symbolic_trace() {
  const QPoly t = trace_power(EdgeType::One, 3).value;
  const QPoly expect = qp(6) * Rational(3) - qp(4) * Rational(6) + qp(3) * Rational(3);
  return t == expect ? std::string() : "got " + t.to_string();
}

USeries criterion3_reference(int order) {
  return rational_expand(one_minus(3, 3) * one_minus(6, 3), one_minus(4, 3) * one_minus(4, 3), order);
}

std::string determinant_identity() {
  const USeries ref = criterion3_reference(12);
  const BiPoly g = BiPoly::geometric(12, 4, 3);
  const USeries oracle = (BiPoly::binomial(12, -1, 3, 3) * BiPoly::binomial(12, -1, 6, 3) * g * g).to_series();
  if (auto d = first_difference(ref, oracle); !d.empty()) return "rational_expand vs geometric oracle: " + d;
  if (auto d = first_difference(det_via_alpha(12), ref); !d.empty()) return "alpha: " + d;
  if (auto d = first_difference(det_via_traces(EdgeType::One, 12), ref); !d.empty()) return "traces: " + d;
  return {};
}

std::string direct_elimination() {
  const RSeries direct = det_direct(build_blocks(8), 8, 6, 2);
  return first_difference(direct, specialize(criterion3_reference(6), 2));
}

std::string schur_fixed_point() {
  const int k = 6, order = 9;
  const AlphaTable table = schur_iterate(build_blocks(k), 64, order);
  if (!table.converged) return "no fixed point after 64 iterations";
  // -(q^2-1)u / (1 - sum_{i=1}^{6} (q-1) q^{3i} u^{3i}) through the geometric oracle.
  BiPoly x = BiPoly::zero(order);
  for (int i = 1; i <= k; ++i) x = x + BiPoly::term(order, 1, 3 * i + 1, 3 * i) + BiPoly::term(order, -1, 3 * i, 3 * i);
  const BiPoly lead = BiPoly::term(order, -1, 2, 1) + BiPoly::term(order, 1, 0, 1);
  return first_difference(table.at(1, 1), (lead * BiPoly::inverse_one_minus(x)).to_series());
}

std::string type2_symmetry() {
  const USeries t2 = det_via_traces(EdgeType::Two, 12);
  const USeries t1 = det_via_traces(EdgeType::One, 12);
  if (auto d = first_difference(t2, substitute_power(t1, 2)); !d.empty()) return "det: " + d;
  if (auto d = first_difference(zeta_type2().series(12), substitute_power(zeta_type1().series(12), 2)); !d.empty())
    return "zeta: " + d;
  return {};
}

std::string zeta_assembly() {
  const UPoly num = one_minus(4, 3) * one_minus(4, 3) * one_minus(4, 6) * one_minus(4, 6);
  const UPoly den = one_minus(3, 3) * one_minus(6, 3) * one_minus(3, 6) * one_minus(6, 6);
  return first_difference(zeta_full().series(12), rational_expand(num, den, 12));
}

std::string row_sum_law() {
  for (EdgeType t : {EdgeType::One, EdgeType::Two})
    for (const auto& e : edges_in_region(t, Region(12, 12)))
      if (row_sum(e) != qp(2)) return to_string(e) + ": " + row_sum(e).to_string();
  return {};
}

std::string vanishing_law() {
  const CountTable counts = counts_from_zeta(12);
  for (int m = 1; m <= 12; ++m) {
    if (m % 3 == 0) continue;
    if (!counts.entries.at(m).is_zero()) return "N_" + std::to_string(m) + " = " + counts.entries.at(m).to_string();
    const QPoly t = trace_power(EdgeType::One, m).value;
    if (!t.is_zero()) return "trace m=" + std::to_string(m) + " = " + t.to_string();
  }
  return {};
}

std::string stabilization() {
  for (int m = 1; m <= 9; ++m) {
    const Rational base = trace_power_in_region(EdgeType::One, m, Region(m + 2, m + 3), 2);
    for (int level = m + 2; level <= std::max(2 * m, m + 2); ++level)
      for (int offset = m + 3; offset <= std::max(2 * m, m + 3); ++offset) {
        const Rational v = trace_power_in_region(EdgeType::One, m, Region(level, offset), 2);
        if (v != base)
          return "m=" + std::to_string(m) + " region (" + std::to_string(level) + "," + std::to_string(offset) +
                 "): " + v.get_str() + " != " + base.get_str();
      }
    if (trace_power(EdgeType::One, m, Rational(2)).value != base) return "trace_power disagrees at m=" + std::to_string(m);
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Check>> criteria{
      {"three-way count identity, m<=9, q in {2,3,5}", count_identity},
      {"symbolic trace at m=3", symbolic_trace},
      {"determinant identity to u^12 (alpha, traces, rational form)", determinant_identity},
      {"direct elimination at q=2, k=N=8, order 6", direct_elimination},
      {"Schur fixed point at k=6, order 9", schur_fixed_point},
      {"type-2 symmetry u -> u^2 to u^12", type2_symmetry},
      {"full zeta equals the four-factor product to u^12", zeta_assembly},
      {"row sums are q^2 below level and offset 12", row_sum_law},
      {"traces and counts vanish for 3 !| m <= 12", vanishing_law},
      {"trace stabilization up to (2m, 2m) at q=2", stabilization},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = criteria[i].second();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = detail.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %zu: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                pass ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
