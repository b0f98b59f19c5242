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

#ifndef ZETALAB_POLYSERIES_HPP
#define ZETALAB_POLYSERIES_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

using Rational = mpq_class;

/// Polynomial in q with exact rational coefficients. Dense, index = power of
/// q, trailing zeros trimmed so the zero polynomial has no stored terms.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Rational> coeffs);

  static QPoly monomial(const Rational& c, int degree);
  static QPoly q() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of q^i; zero beyond the degree.
  Rational coeff(int i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational constant_term() const { return coeff(0); }

  /// Every coefficient has denominator 1.
  bool is_integral() const;
  Rational eval(const Rational& q_value) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  QPoly& operator*=(const Rational& rhs);
  QPoly& operator/=(const Rational& rhs);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator*(QPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QPoly operator/(QPoly lhs, const Rational& rhs) { return lhs /= rhs; }
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Canonical text form: descending powers, no spaces, e.g. "3*q^6-6*q^4+3*q^3".
  std::string to_string() const;
  /// Inverse of to_string; also accepts whitespace and "q**k".
  static QPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational qpoly_eval(const QPoly& p, const Rational& q_value);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const QPoly& p) { return p.is_zero(); }

// Unit test for the constant term of a series: a nonzero rational. zero is
// returned when there is no such unit.
inline Rational unit_value(const Rational& r) { return r; }
inline Rational unit_value(const QPoly& p) {
  return p.is_constant() ? p.constant_term() : Rational(0);
}

/// Truncated power series in u: coefficients u^0..u^order are retained.
/// Binary operations truncate to the smaller of the two orders.
template <class Coeff>
class Series {
 public:
  explicit Series(int order = 0) : coeffs_(static_cast<std::size_t>(std::max(order, 0)) + 1) {}

  Series(std::vector<Coeff> coeffs, int order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(std::max(order, 0)) + 1);
  }

  static Series one(int order) {
    Series s(order);
    s.coeffs_[0] = Coeff(1);
    return s;
  }

  static Series monomial(Coeff c, int power, int order) {
    Series s(order);
    if (power >= 0 && power <= order) s.coeffs_[power] = std::move(c);
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  Coeff& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const Coeff> coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return zetalab::is_zero(c); });
  }

  Series truncated(int new_order) const {
    return Series(std::vector<Coeff>(coeffs_.begin(),
                                     coeffs_.begin() + std::min(new_order, order()) + 1),
                  std::min(new_order, order()));
  }

  /// Multiply by u^power, keeping the order.
  Series shifted(int power) const {
    Series s(order());
    for (int i = 0; i + power <= order(); ++i) s[i + power] = coeffs_[static_cast<std::size_t>(i)];
    return s;
  }

  Series& operator+=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
    for (int i = 0; i <= order(); ++i) coeffs_[i] += rhs[i];
    return *this;
  }
  Series& operator-=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.coeffs_.size());
    for (int i = 0; i <= order(); ++i) coeffs_[i] -= rhs[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a) { return Series(a.order()) - a; }
  friend Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
  friend Series operator*(Series a, const Coeff& c) {
    for (auto& x : a.coeffs_) x *= c;
    return a;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  friend Series series_mul(const Series& f, const Series& g) {
    const int order = std::min(f.order(), g.order());
    Series r(order);
    for (int i = 0; i <= order; ++i) {
      if (zetalab::is_zero(f[i])) continue;
      for (int j = 0; i + j <= order; ++j) {
        if (zetalab::is_zero(g[j])) continue;
        r[i + j] += f[i] * g[j];
      }
    }
    return r;
  }

 private:
  std::vector<Coeff> coeffs_;
};

using USeries = Series<QPoly>;
using RSeries = Series<Rational>;

template <class Coeff>
Series<Coeff> series_inv(const Series<Coeff>& f) {
  const Rational c0 = unit_value(f[0]);
  if (is_zero(c0)) throw NonUnitConstantTerm("series_inv: constant term is not a nonzero rational");
  const Rational c0_inv = 1 / c0;
  Series<Coeff> g(f.order());
  g[0] = Coeff(c0_inv);
  for (int n = 1; n <= f.order(); ++n) {
    Coeff acc{};
    for (int k = 1; k <= n; ++k) {
      if (is_zero(f[k])) continue;
      acc += f[k] * g[n - k];
    }
    acc *= Rational(-c0_inv);
    g[n] = std::move(acc);
  }
  return g;
}

/// log f = -sum_{n>=1} (1-f)^n / n.
template <class Coeff>
Series<Coeff> series_log(const Series<Coeff>& f) {
  if (!(f[0] == Coeff(1))) throw ConstantTermNotOne("series_log: constant term must be 1");
  const int order = f.order();
  const Series<Coeff> h = Series<Coeff>::one(order) - f;
  Series<Coeff> power = h;
  Series<Coeff> result(order);
  for (int n = 1; n <= order; ++n) {
    result -= power * Coeff(Rational(Rational(1) / n));
    power = power * h;
  }
  return result;
}

/// exp f by the recurrence n g_n = sum_k k f_k g_{n-k}.
template <class Coeff>
Series<Coeff> series_exp(const Series<Coeff>& f) {
  if (!is_zero(f[0])) throw NonzeroConstantTerm("series_exp: constant term must be 0");
  Series<Coeff> g(f.order());
  g[0] = Coeff(1);
  for (int n = 1; n <= f.order(); ++n) {
    Coeff acc{};
    for (int k = 1; k <= n; ++k) {
      if (is_zero(f[k])) continue;
      acc += f[k] * g[n - k] * Coeff(Rational(k));
    }
    acc *= Coeff(Rational(Rational(1) / n));
    g[n] = std::move(acc);
  }
  return g;
}

/// d/du; the order drops by one (an order-0 series maps to the order-0 zero).
template <class Coeff>
Series<Coeff> series_derivative(const Series<Coeff>& f) {
  Series<Coeff> d(std::max(f.order() - 1, 0));
  for (int n = 1; n <= f.order(); ++n) d[n - 1] = f[n] * Coeff(Rational(n));
  return d;
}

/// u d/du, which keeps the order.
template <class Coeff>
Series<Coeff> series_euler_derivative(const Series<Coeff>& f) {
  Series<Coeff> d(f.order());
  for (int n = 1; n <= f.order(); ++n) d[n] = f[n] * Coeff(Rational(n));
  return d;
}

/// u -> u^power, same order.
template <class Coeff>
Series<Coeff> substitute_power(const Series<Coeff>& f, int power) {
  Series<Coeff> r(f.order());
  for (int n = 0; n * power <= f.order(); ++n) r[n * power] = f[n];
  return r;
}

RSeries specialize(const USeries& f, const Rational& q_value);

/// Polynomial in u with QPoly coefficients (numerators/denominators of
/// rational functions and block-matrix entries).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<QPoly> coeffs);
  UPoly(const QPoly& constant);  // NOLINT(google-explicit-constructor)
  static UPoly monomial(const QPoly& c, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  QPoly coeff(int i) const;
  std::span<const QPoly> coeffs() const { return coeffs_; }
  USeries to_series(int order) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<QPoly> coeffs_;
};

/// numerator / denominator expanded to u^order.
USeries rational_expand(const UPoly& numerator, const UPoly& denominator, int order);

std::vector<std::string> series_strings(const USeries& f);
std::vector<std::string> series_strings(const RSeries& f);

}  // namespace zetalab

#endif  // ZETALAB_POLYSERIES_HPP
