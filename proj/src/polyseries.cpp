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

#include <cctype>
#include <string>

#include "zetalab/polyseries.hpp"

namespace zetalab {

QPoly::QPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

QPoly::QPoly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int degree) {
  if (sgn(c) == 0) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational QPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool QPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Rational QPoly::eval(const Rational& q_value) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q_value + *it;
  return acc;
}

Rational qpoly_eval(const QPoly& p, const Rational& q_value) { return p.eval(q_value); }

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

QPoly& QPoly::operator/=(const Rational& rhs) {
  for (auto& c : coeffs_) c /= rhs;
  return *this;
}

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

QPoly parse_term(std::string_view term, bool negative) {
  Rational coeff = 1;
  int power = 0;
  const auto qpos = term.find('q');
  if (qpos == std::string_view::npos) {
    coeff = parse_rational(term);
  } else {
    std::string_view head = term.substr(0, qpos);
    std::string_view tail = term.substr(qpos + 1);
    if (!head.empty()) {
      if (head.back() != '*') throw ParseError("expected '*' before q in term '" + std::string(term) + "'");
      coeff = parse_rational(head.substr(0, head.size() - 1));
    }
    power = 1;
    if (!tail.empty()) {
      if (tail.front() != '^') throw ParseError("expected '^' after q in term '" + std::string(term) + "'");
      tail.remove_prefix(1);
      if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("invalid exponent in term '" + std::string(term) + "'");
      }
      power = std::stoi(std::string(tail));
    }
  }
  if (negative) coeff = -coeff;
  return QPoly::monomial(coeff, power);
}

}  // namespace

QPoly QPoly::parse(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*' && i + 1 < text.size() && text[i + 1] == '*') {
      s += '^';
      ++i;
      continue;
    }
    s += c;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  QPoly result;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    start = 1;
  }
  for (std::size_t i = start; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+' || s[i] == '-') {
      if (i == start) throw ParseError("empty term in '" + s + "'");
      result += parse_term(std::string_view(s).substr(start, i - start), negative);
      if (i < s.size()) negative = s[i] == '-';
      start = i + 1;
    }
  }
  return result;
}

RSeries specialize(const USeries& f, const Rational& q_value) {
  RSeries r(f.order());
  for (int i = 0; i <= f.order(); ++i) r[i] = f[i].eval(q_value);
  return r;
}

UPoly::UPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const QPoly& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

UPoly UPoly::monomial(const QPoly& c, int power) {
  std::vector<QPoly> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return UPoly(std::move(coeffs));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

USeries UPoly::to_series(int order) const {
  USeries s(order);
  for (int i = 0; i <= std::min(order, degree()); ++i) s[i] = coeffs_[static_cast<std::size_t>(i)];
  return s;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<QPoly> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a) {
  std::vector<QPoly> out;
  out.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) out.push_back(-c);
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const QPoly& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string cs = c.to_string();
    if (i == 0) {
      out += cs;
      continue;
    }
    out += "(" + cs + ")*u";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

USeries rational_expand(const UPoly& numerator, const UPoly& denominator, int order) {
  return numerator.to_series(order) * series_inv(denominator.to_series(order));
}

std::vector<std::string> series_strings(const USeries& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(c.to_string());
  return out;
}

std::vector<std::string> series_strings(const RSeries& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(c.get_str());
  return out;
}

}  // namespace zetalab
