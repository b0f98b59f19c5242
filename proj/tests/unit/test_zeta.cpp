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

#include "doctest.h"
#include "oracle.hpp"
#include "zetalab/cycles.hpp"
#include "zetalab/determinant.hpp"
#include "zetalab/transfer.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using oracle::BiPoly;

namespace {
QPoly qp(int e) { return QPoly::monomial(1, e); }
const QPoly c3 = qp(6) - qp(4) * Rational(2) + qp(3);

// (1-q^4u^t)^2 / ((1-q^3u^t)(1-q^6u^t))
BiPoly zeta_oracle(int order, int t) {
  const BiPoly n = BiPoly::binomial(order, -1, 4, t);
  return n * n * BiPoly::geometric(order, 3, t) * BiPoly::geometric(order, 6, t);
}
}  // namespace

TEST_CASE("type-1 zeta") {
  const RationalFunction z = zeta_type1();
  USeries s3(3);
  s3[0] = 1;
  s3[3] = c3;
  CHECK(z.series(3) == s3);
  CHECK(z.series(3)[3].eval(2) == 40);
  CHECK(z.series(15) == zeta_oracle(15, 3).to_series());
  for (int m = 0; m <= 12; ++m) CHECK(z.reciprocal().series(m) == det_via_traces(EdgeType::One, m));
  CHECK(z.u_form() == "(1-q^4*u^3)^2/((1-q^3*u^3)*(1-q^6*u^3))");
  CHECK(z.s_form() == "(1-q^(4-3s))^2/((1-q^(3-3s))*(1-q^(6-3s)))");
}

TEST_CASE("type-2 zeta") {
  const RationalFunction z = zeta_type2();
  CHECK(z.series(12) == substitute_power(zeta_type1().series(12), 2));
  CHECK(z.series(5) == USeries::one(5));
  CHECK(z.series(6)[6].eval(3) == 594);
  CHECK(z.series(12) == zeta_oracle(12, 6).to_series());
  CHECK(zeta_type1().substitute_power(2).series(12) == z.series(12));
}

TEST_CASE("full zeta") {
  const RationalFunction z = zeta_full();
  CHECK(z.series(0) == USeries::one(0));
  for (int order : {0, 3, 6, 12, 15})
    CHECK(z.series(order) == zeta_type1().series(order) * zeta_type2().series(order));
  CHECK(z.series(12) == (zeta_oracle(12, 3) * zeta_oracle(12, 6)).to_series());
  CHECK(z.s_form() ==
        "(1-q^(4-3s))^2*(1-q^(4-6s))^2/((1-q^(3-3s))*(1-q^(6-3s))*(1-q^(3-6s))*(1-q^(6-6s)))");
}

TEST_CASE("binomial factors") {
  const BinomialFactor f{4, 3, 2};
  const UPoly e = f.expand();
  CHECK(e.coeff(0) == QPoly(1));
  CHECK(e.coeff(3) == qp(4) * Rational(-2));
  CHECK(e.coeff(6) == qp(8));
  CHECK(e.degree() == 6);
}

TEST_CASE("counts") {
  const CountTable t = counts_from_zeta(9);
  CHECK(t.entries.at(3) == qp(6) * Rational(3) - qp(4) * Rational(6) + qp(3) * Rational(3));
  CHECK(t.entries.at(4).is_zero());
  CHECK(t.entries.at(5).is_zero());
  CHECK(t.entries.at(9).eval(2) == 763392);

  CHECK(counts_closed_form(6) == qp(12) * Rational(3) - qp(8) * Rational(6) + qp(6) * Rational(3));
  CHECK(counts_closed_form(7).is_zero());
  CHECK(counts_closed_form(3).eval(5) == 43500);
  CHECK(counts_closed_form(3).eval(3) == 1782);
  CHECK(counts_closed_form(6).eval(2) == 10944);

  CHECK(algebraic_length(EdgeType::One, 4) == 4);
  CHECK(algebraic_length(EdgeType::Two, 4) == 8);
}

TEST_CASE("property: logarithmic derivative gives the closed-form counts") {
  const CountTable t = counts_from_zeta(15);
  CHECK(t.entries.size() == 15);
  for (int m = 1; m <= 15; ++m) CHECK(t.entries.at(m) == counts_closed_form(m));
}

TEST_CASE("property: zeta coefficients are integral") {
  const USeries z1 = zeta_type1().series(15);
  const USeries z = zeta_full().series(15);
  for (const auto& c : z1.coeffs()) CHECK(c.is_integral());
  for (const auto& c : z.coeffs()) CHECK(c.is_integral());
}

TEST_CASE("property: three-way count identity") {
  const CountTable t = counts_from_zeta(9);
  for (int m = 1; m <= 9; ++m) {
    CAPTURE(m);
    const QPoly tr = trace_power(EdgeType::One, m).value;
    CHECK(tr == t.entries.at(m));
    CHECK(weighted_count(EdgeType::One, m) == tr);
  }
}
