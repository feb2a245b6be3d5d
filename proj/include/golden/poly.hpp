// Copyright 2026 The golden-laurent Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GOLDEN_POLY_HPP
#define GOLDEN_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golden/degree.hpp"
#include "golden/field.hpp"

namespace golden {

/// Dense univariate polynomial over a field, coefficients in ascending powers.
/// The coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
template <Field F>
class Polynomial {
 public:
  using field_type = F;
  using value_type = Elem<F>;

  explicit Polynomial(F field) : field_(std::move(field)) {}

  Polynomial(F field, std::vector<value_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
      if (!field_.owns(c)) throw FieldMismatch("coefficient does not belong to " + field_.name());
    }
    normalize();
  }

  /// Coefficients given as integers, reduced into the field.
  static Polynomial from_ints(const F& field, const std::vector<long long>& ints) {
    std::vector<value_type> c;
    c.reserve(ints.size());
    for (long long n : ints) c.push_back(field.embed(n));
    return Polynomial(field, std::move(c));
  }

  static Polynomial constant(const F& field, value_type c) { return Polynomial(field, {std::move(c)}); }

  /// c * X^k
  static Polynomial monomial(const F& field, std::size_t k, value_type c) {
    std::vector<value_type> v(k + 1, field.zero());
    v[k] = std::move(c);
    return Polynomial(field, std::move(v));
  }

  static Polynomial x(const F& field) { return monomial(field, 1, field.one()); }

  /// u*X + v
  static Polynomial linear(const F& field, value_type u, value_type v) {
    return Polynomial(field, {std::move(v), std::move(u)});
  }

  const F& field() const noexcept { return field_; }
  const std::vector<value_type>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Degree degree() const {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }

  /// Coefficient of X^i; zero beyond the degree.
  value_type coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  const value_type& leading_coefficient() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Polynomial operator-() const {
    std::vector<value_type> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return Polynomial(field_, std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_field(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<value_type> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(a.field_, std::move(c));
  }

  Polynomial scaled(const value_type& s) const {
    std::vector<value_type> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    return Polynomial(field_, std::move(c));
  }

  /// Multiply by X^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<value_type> c(k, field_.zero());
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(field_, std::move(c));
  }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_field(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("polynomials over " + a.field_.name() + " and " + b.field_.name());
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_field(a, b);
    std::vector<value_type> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = subtract ? c[i] - b.coeffs_[i] : c[i] + b.coeffs_[i];
    return Polynomial(a.field_, std::move(c));
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  F field_;
  std::vector<value_type> coeffs_;
};

template <Field F>
struct DivRem {
  Polynomial<F> quotient;
  Polynomial<F> remainder;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
template <Field F>
DivRem<F> divrem(const Polynomial<F>& a, const Polynomial<F>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!(a.field() == b.field())) throw FieldMismatch("divrem over different fields");
  const F& field = a.field();
  const std::size_t db = b.coefficients().size() - 1;
  if (a.is_zero() || a.coefficients().size() - 1 < db) return {Polynomial<F>(field), a};

  std::vector<Elem<F>> rem = a.coefficients();
  std::vector<Elem<F>> quo(rem.size() - db, field.zero());
  const Elem<F> lead_inv = b.leading_coefficient().inverse();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Elem<F> c = rem[k + db] * lead_inv;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.coefficients()[j];
    quo[k] = std::move(c);
  }
  rem.resize(db, field.zero());
  return {Polynomial<F>(field, std::move(quo)), Polynomial<F>(field, std::move(rem))};
}

// Text form: comma-separated ascending coefficients, "1,0,1" is 1 + X^2.

template <Field F>
Polynomial<F> parse_polynomial(const F& field, std::string_view text) {
  std::vector<Elem<F>> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty coefficient in polynomial '" + std::string(text) + "'");
    coeffs.push_back(field.parse(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Polynomial<F>(field, std::move(coeffs));
}

template <Field F>
std::string format_polynomial(const Polynomial<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (i != 0) out += ',';
    out += p.coefficients()[i].str();
  }
  return out;
}

}  // namespace golden

#endif  // GOLDEN_POLY_HPP
