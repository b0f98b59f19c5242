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

#include "zetalab/zeta.hpp"

#include <stdexcept>

namespace zetalab {

UPoly BinomialFactor::expand() const {
  const UPoly base = UPoly(QPoly(1)) - UPoly::monomial(QPoly::monomial(1, q_exp), u_exp);
  UPoly out(QPoly(1));
  for (int i = 0; i < multiplicity; ++i) out = out * base;
  return out;
}

namespace {

UPoly expand_all(const std::vector<BinomialFactor>& factors) {
  UPoly out(QPoly(1));
  for (const auto& f : factors) out = out * f.expand();
  return out;
}

std::string render(const std::vector<BinomialFactor>& factors, bool s_coordinates) {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (i > 0) out += '*';
    std::string term;
    if (s_coordinates) {
      // q^a u^b = q^(a - b s)
      term = "(1-q^(" + std::to_string(f.q_exp) + "-" + (f.u_exp == 1 ? std::string() : std::to_string(f.u_exp)) + "s))";
    } else {
      term = "(1-q^" + std::to_string(f.q_exp) + "*u" + (f.u_exp == 1 ? std::string() : "^" + std::to_string(f.u_exp)) + ")";
    }
    if (f.multiplicity != 1) term += "^" + std::to_string(f.multiplicity);
    out += term;
  }
  return out;
}

std::string render_quotient(const std::vector<BinomialFactor>& num, const std::vector<BinomialFactor>& den, bool s) {
  std::string top = render(num, s);
  if (den.empty()) return top;
  std::string bottom = render(den, s);
  const bool bare = den.size() == 1 && den.front().multiplicity == 1;
  return top + "/" + (bare ? bottom : "(" + bottom + ")");
}

}  // namespace

RationalFunction::RationalFunction(std::vector<BinomialFactor> numerator, std::vector<BinomialFactor> denominator)
    : numerator_factors_(std::move(numerator)),
      denominator_factors_(std::move(denominator)),
      numerator_(expand_all(numerator_factors_)),
      denominator_(expand_all(denominator_factors_)) {
  for (const auto& f : denominator_factors_) {
    if (f.u_exp < 1) throw std::invalid_argument("RationalFunction: denominator factor must vanish at u = 0");
  }
}

USeries RationalFunction::series(int order) const { return rational_expand(numerator_, denominator_, order); }

RationalFunction RationalFunction::reciprocal() const {
  return RationalFunction(denominator_factors_, numerator_factors_);
}

RationalFunction RationalFunction::substitute_power(int power) const {
  auto scale = [power](std::vector<BinomialFactor> factors) {
    for (auto& f : factors) f.u_exp *= power;
    return factors;
  };
  return RationalFunction(scale(numerator_factors_), scale(denominator_factors_));
}

std::string RationalFunction::u_form() const {
  return render_quotient(numerator_factors_, denominator_factors_, false);
}

std::string RationalFunction::s_form() const {
  return render_quotient(numerator_factors_, denominator_factors_, true);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  auto num = a.numerator_factors_;
  num.insert(num.end(), b.numerator_factors_.begin(), b.numerator_factors_.end());
  auto den = a.denominator_factors_;
  den.insert(den.end(), b.denominator_factors_.begin(), b.denominator_factors_.end());
  return RationalFunction(std::move(num), std::move(den));
}

RationalFunction zeta_type1() { return RationalFunction({{4, 3, 2}}, {{3, 3, 1}, {6, 3, 1}}); }

RationalFunction zeta_type2() { return zeta_type1().substitute_power(2); }

RationalFunction zeta_full() { return zeta_type1() * zeta_type2(); }

CountTable counts_from_zeta(int order) {
  if (order < 1) throw std::invalid_argument("counts_from_zeta: order must be >= 1");
  const USeries log_z = series_log(zeta_type1().series(order));
  const USeries counts = series_euler_derivative(log_z);
  CountTable table;
  for (int m = 1; m <= order; ++m) table.entries[m] = counts[m];
  return table;
}

QPoly counts_closed_form(int m) {
  if (m < 1) throw std::invalid_argument("counts_closed_form: m must be >= 1");
  if (m % 3 != 0) return {};
  const int r = m / 3;
  return QPoly::monomial(3, 6 * r) - QPoly::monomial(6, 4 * r) + QPoly::monomial(3, 3 * r);
}

}  // namespace zetalab
