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

#ifndef ZETALAB_ZETA_HPP
#define ZETALAB_ZETA_HPP

#include <map>
#include <string>
#include <vector>

#include "zetalab/complex.hpp"
#include "zetalab/polyseries.hpp"

namespace zetalab {

/// (1 - q^{q_exp} u^{u_exp})^multiplicity
struct BinomialFactor {
  int q_exp = 0;
  int u_exp = 0;
  int multiplicity = 1;

  UPoly expand() const;
  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

/// Quotient of u-polynomials over Q[q] with denominator constant term 1,
/// kept together with the binomial factorisation it was built from.
class RationalFunction {
 public:
  RationalFunction(std::vector<BinomialFactor> numerator, std::vector<BinomialFactor> denominator);

  const UPoly& numerator() const { return numerator_; }
  const UPoly& denominator() const { return denominator_; }
  const std::vector<BinomialFactor>& numerator_factors() const { return numerator_factors_; }
  const std::vector<BinomialFactor>& denominator_factors() const { return denominator_factors_; }

  USeries series(int order) const;
  RationalFunction reciprocal() const;
  /// u -> u^power
  RationalFunction substitute_power(int power) const;

  /// Factored display in u, e.g. "(1-q^4*u^3)^2/((1-q^3*u^3)*(1-q^6*u^3))".
  std::string u_form() const;
  /// Same with u = q^{-s}, e.g. "(1-q^(4-3s))^2/((1-q^(3-3s))*(1-q^(6-3s)))".
  std::string s_form() const;

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

 private:
  std::vector<BinomialFactor> numerator_factors_;
  std::vector<BinomialFactor> denominator_factors_;
  UPoly numerator_;
  UPoly denominator_;
};

/// Type-1 edge zeta function in u = q^{-s}.
RationalFunction zeta_type1();
/// Type-2 edge zeta function; equals zeta_type1 with u -> u^2.
RationalFunction zeta_type2();
/// Product of both types.
RationalFunction zeta_full();

struct CountTable {
  std::map<int, QPoly> entries;  ///< m -> N_m
};

/// N_m as the coefficients of u d/du log Z_1.
CountTable counts_from_zeta(int order);
/// 3q^{6r} - 6q^{4r} + 3q^{3r} for m = 3r, else 0.
QPoly counts_closed_form(int m);

/// Algebraic length of a type-k cycle of geometric length l is k * l.
inline int algebraic_length(EdgeType type, int geometric_length) {
  return static_cast<int>(type) * geometric_length;
}

}  // namespace zetalab

#endif  // ZETALAB_ZETA_HPP
