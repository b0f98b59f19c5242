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

#include "zetalab/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

#include "zetalab/cycles.hpp"
#include "zetalab/determinant.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

namespace {

template <class S>
std::string first_difference_impl(const S& a, const S& b) {
  if (a.order() != b.order()) return "orders differ: " + std::to_string(a.order()) + " vs " + std::to_string(b.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (!(a[i] == b[i])) {
      using zetalab::to_string;
      if constexpr (std::is_same_v<S, USeries>) {
        return "u^" + std::to_string(i) + ": " + a[i].to_string() + " != " + b[i].to_string();
      } else {
        return "u^" + std::to_string(i) + ": " + a[i].get_str() + " != " + b[i].get_str();
      }
    }
  }
  return {};
}

CriterionResult result(std::string name, std::string failure, std::string ok_detail) {
  if (failure.empty()) return {std::move(name), true, std::move(ok_detail)};
  return {std::move(name), false, std::move(failure)};
}

UPoly one_minus(int q_exp, int u_exp) {
  return UPoly(QPoly(1)) - UPoly::monomial(QPoly::monomial(1, q_exp), u_exp);
}

}  // namespace

std::string first_difference(const USeries& a, const USeries& b) { return first_difference_impl(a, b); }
std::string first_difference(const RSeries& a, const RSeries& b) { return first_difference_impl(a, b); }

std::vector<CriterionResult> verify_all(const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  const int max_m = options.max_m;
  const int order = options.order;
  if (max_m < 1 || order < max_m) {
    out.push_back({"options", false, "need 1 <= max_m <= order"});
    return out;
  }
  const auto& rule = options.rule;
  const CountTable from_zeta = counts_from_zeta(order);

  // Three-way count identity plus the zeta-side counts.
  {
    std::string failure;
    for (int m = 1; m <= max_m && failure.empty(); ++m) {
      for (const auto& q : options.q_values) {
        const Rational trace = trace_power(EdgeType::One, m, q, rule).value;
        const Rational cycles = weighted_count(EdgeType::One, m, q, rule);
        const Rational closed = counts_closed_form(m).eval(q);
        const Rational zeta = from_zeta.entries.at(m).eval(q);
        if (trace != closed || cycles != closed || zeta != closed) {
          failure = "m=" + std::to_string(m) + " q=" + q.get_str() + ": trace=" + trace.get_str() +
                    " cycles=" + cycles.get_str() + " zeta=" + zeta.get_str() + " closed_form=" + closed.get_str();
          break;
        }
      }
    }
    out.push_back(result("count_identity", failure, "m<=" + std::to_string(max_m)));
  }

  // Symbolic traces, reused by the determinant checks.
  std::vector<QPoly> traces1, traces2;
  for (int n = 1; n <= order; ++n) traces1.push_back(trace_power(EdgeType::One, n, rule).value);
  for (int n = 1; 2 * n <= order; ++n) traces2.push_back(trace_power(EdgeType::Two, n, rule).value);

  if (max_m >= 3) {
    const QPoly& t3 = traces1[2];
    const QPoly expected = counts_closed_form(3);
    out.push_back(result("symbolic_trace_m3", t3 == expected ? "" : "Tr(T^3)=" + t3.to_string(), t3.to_string()));
  } else {
    out.push_back({"symbolic_trace_m3", true, "skipped: max_m < 3"});
  }

  const USeries det_alpha = det_via_alpha(order);
  const USeries det_traces = det_from_traces(EdgeType::One, traces1, order);
  const USeries det_closed = rational_expand(one_minus(3, 3) * one_minus(6, 3), one_minus(4, 3) * one_minus(4, 3), order);
  {
    std::string failure = first_difference(det_alpha, det_closed);
    if (!failure.empty()) failure = "alpha vs closed form, " + failure;
    if (failure.empty()) {
      failure = first_difference(det_traces, det_closed);
      if (!failure.empty()) failure = "traces vs closed form, " + failure;
    }
    out.push_back(result("determinant_identity", failure, "order " + std::to_string(order)));
  }

  {
    const int direct_order = std::min(order, 6);
    const int k = direct_order + 2;
    const BlockSpec spec = build_blocks(k);
    std::string failure;
    for (const auto& q : options.q_values) {
      const RSeries direct = det_direct(spec, k, direct_order, q);
      const RSeries expected = specialize(det_closed.truncated(direct_order), q);
      const std::string diff = first_difference(direct, expected);
      if (!diff.empty()) {
        failure = "q=" + q.get_str() + ", " + diff;
        break;
      }
    }
    out.push_back(result("direct_elimination", failure,
                         "k=N=" + std::to_string(k) + " order " + std::to_string(direct_order)));
  }

  {
    const int k = 6;
    const int schur_order = 9;
    const AlphaTable table = schur_iterate(build_blocks(k), 64, schur_order);
    UPoly denominator(QPoly(1));
    for (int i = 1; i <= k; ++i) {
      denominator = denominator - UPoly::monomial((QPoly::q() - 1) * QPoly::monomial(1, 3 * i), 3 * i);
    }
    const USeries expected =
        rational_expand(UPoly::monomial(-(QPoly::monomial(1, 2) - 1), 1), denominator, schur_order);
    std::string failure = table.converged ? first_difference(table.at(1, 1), expected) : "did not converge";
    out.push_back(result("schur_fixed_point", failure, "converged after " + std::to_string(table.iteration) + " iterations"));
  }

  {
    const USeries det2 = det_from_traces(EdgeType::Two, traces2, order);
    std::string failure = first_difference(det2, substitute_power(det_traces, 2));
    if (failure.empty()) failure = first_difference(zeta_type2().series(order), substitute_power(zeta_type1().series(order), 2));
    out.push_back(result("type2_symmetry", failure, "order " + std::to_string(order)));
  }

  {
    const UPoly numerator = one_minus(4, 3) * one_minus(4, 3) * one_minus(4, 6) * one_minus(4, 6);
    const UPoly denominator = one_minus(3, 3) * one_minus(6, 3) * one_minus(3, 6) * one_minus(6, 6);
    const USeries four_factor = rational_expand(numerator, denominator, order);
    std::string failure = first_difference(zeta_full().series(order), four_factor);
    if (failure.empty()) failure = first_difference(zeta_type1().series(order) * zeta_type2().series(order), four_factor);
    out.push_back(result("zeta_assembly", failure, zeta_full().s_form()));
  }

  {
    const QPoly q2 = QPoly::monomial(1, 2);
    std::string failure;
    for (const auto type : {EdgeType::One, EdgeType::Two}) {
      for (const auto& e : edges_in_region(type, Region(12, 12))) {
        const QPoly s = row_sum(e, TruncationMode::full(), rule);
        if (!(s == q2)) {
          failure = to_string(e) + " sums to " + s.to_string();
          break;
        }
      }
      if (!failure.empty()) break;
    }
    out.push_back(result("row_sum_law", failure, "level, offset < 12"));
  }

  {
    std::string failure;
    for (int m = 1; m <= order && failure.empty(); ++m) {
      if (m % 3 == 0) continue;
      if (!from_zeta.entries.at(m).is_zero()) failure = "N_" + std::to_string(m) + "=" + from_zeta.entries.at(m).to_string();
      else if (!traces1[static_cast<std::size_t>(m - 1)].is_zero())
        failure = "Tr(T^" + std::to_string(m) + ")=" + traces1[static_cast<std::size_t>(m - 1)].to_string();
    }
    out.push_back(result("vanishing_law", failure, "m<=" + std::to_string(order)));
  }

  {
    std::string failure;
    const Rational q = options.q_values.empty() ? Rational(2) : options.q_values.front();
    for (int m = 1; m <= max_m && failure.empty(); ++m) {
      const Rational base = trace_power_in_region(EdgeType::One, m, Region(m + 2, m + 3), q, rule);
      for (int levels = m + 2; levels <= std::max(2 * m, m + 2) && failure.empty(); ++levels) {
        for (int offsets = m + 3; offsets <= std::max(2 * m, m + 3); ++offsets) {
          const Rational v = trace_power_in_region(EdgeType::One, m, Region(levels, offsets), q, rule);
          if (v != base) {
            failure = "m=" + std::to_string(m) + " region (" + std::to_string(levels) + "," + std::to_string(offsets) +
                      ") gives " + v.get_str() + " vs " + base.get_str();
            break;
          }
        }
      }
    }
    out.push_back(result("stabilization", failure, "m<=" + std::to_string(max_m)));
  }
  return out;
}

}  // namespace zetalab
