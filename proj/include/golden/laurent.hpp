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

#ifndef GOLDEN_LAURENT_HPP
#define GOLDEN_LAURENT_HPP

/// Truncated formal Laurent series in X^{-1} with certified precision.
///
/// A series L = sum_{i >= u} c_i X^{-i} is stored from its first nonzero
/// coefficient c_u together with a precision N: every coefficient c_i with
/// i <= N is known exactly, nothing beyond N is. Arithmetic propagates N by
///   add/sub     min(N1, N2)
///   mul         min(N1 + u2, N2 + u1)
///   reciprocal  N - 2u
/// A series whose certified coefficients are all zero is "zero to precision
/// N"; it reports valuation -inf and behaves as if u = N + 1.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "golden/degree.hpp"
#include "golden/field.hpp"
#include "golden/poly.hpp"

namespace golden {

template <Field F>
class LaurentSeries {
 public:
  using value_type = Elem<F>;

  /// coeffs[j] is the coefficient of X^{-(start + j)}.
  LaurentSeries(F field, std::int64_t start, std::vector<value_type> coeffs, std::int64_t precision)
      : field_(std::move(field)), start_(start), coeffs_(std::move(coeffs)), precision_(precision) {
    if (!coeffs_.empty() && start_ + static_cast<std::int64_t>(coeffs_.size()) - 1 > precision_) {
      throw DomainError("series stores coefficients beyond its precision");
    }
    normalize();
  }

  static LaurentSeries zero(const F& field, std::int64_t precision) { return LaurentSeries(field, 1, {}, precision); }

  /// c_1, ..., c_N of a series with negative valuation; precision N.
  static LaurentSeries from_fractional_coefficients(const F& field, std::vector<value_type> c) {
    auto n = static_cast<std::int64_t>(c.size());
    return LaurentSeries(field, 1, std::move(c), n);
  }

  static LaurentSeries from_polynomial(const Polynomial<F>& p, std::int64_t precision) {
    const auto& pc = p.coefficients();
    if (pc.empty()) return zero(p.field(), precision);
    std::int64_t start = -(static_cast<std::int64_t>(pc.size()) - 1);
    std::vector<value_type> c;
    for (std::int64_t i = start; i <= std::min<std::int64_t>(precision, 0); ++i) c.push_back(pc[-i]);
    return LaurentSeries(p.field(), start, std::move(c), precision);
  }

  /// Expansion of P/Q certified through X^{-precision}.
  static LaurentSeries from_rational(const Polynomial<F>& p, const Polynomial<F>& q, std::int64_t precision) {
    if (q.is_zero()) throw DivisionByZero("from_rational with zero denominator");
    if (!(p.field() == q.field())) throw FieldMismatch("from_rational over different fields");
    const F& field = p.field();
    if (p.is_zero()) return zero(field, precision);
    const auto& pc = p.coefficients();
    const auto& qc = q.coefficients();
    const std::int64_t dp = static_cast<std::int64_t>(pc.size()) - 1;
    const std::int64_t dq = static_cast<std::int64_t>(qc.size()) - 1;
    const std::int64_t start = dq - dp;
    const std::int64_t count = precision - start + 1;
    if (count <= 0) return zero(field, precision);

    // In y = 1/X: P/Q = y^{dq-dp} * rev(P)(y) / rev(Q)(y).
    const value_type lead_inv = qc.back().inverse();
    std::vector<value_type> s;
    s.reserve(static_cast<std::size_t>(count));
    for (std::int64_t k = 0; k < count; ++k) {
      value_type acc = k <= dp ? pc[dp - k] : field.zero();
      for (std::int64_t j = 1; j <= std::min(k, dq); ++j) {
        acc -= qc[dq - j] * s[k - j];
      }
      s.push_back(acc * lead_inv);
    }
    return LaurentSeries(field, start, std::move(s), precision);
  }

  const F& field() const noexcept { return field_; }
  std::int64_t precision() const noexcept { return precision_; }
  /// Index u of the first nonzero coefficient (precision + 1 for a zero series).
  std::int64_t start() const noexcept { return start_; }
  const std::vector<value_type>& stored_coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// nu_inf(L) = -u, or -inf when zero to precision.
  Degree valuation() const { return is_zero() ? Degree::minus_infinity() : Degree(-start_); }

  /// Coefficient of X^{-i}; only certified indices may be read.
  value_type coefficient(std::int64_t i) const {
    if (i > precision_) {
      throw PrecisionError("coefficient " + std::to_string(i) + " requested, series certified only to " +
                           std::to_string(precision_));
    }
    if (i < start_ || i >= start_ + static_cast<std::int64_t>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i - start_)];
  }

  /// c_first, ..., c_last.
  std::vector<value_type> coefficients(std::int64_t first, std::int64_t last) const {
    std::vector<value_type> out;
    for (std::int64_t i = first; i <= last; ++i) out.push_back(coefficient(i));
    return out;
  }

  /// [L] = sum_{i <= 0} c_i X^{-i}.
  Polynomial<F> polynomial_part() const {
    if (precision_ < 0) throw PrecisionError("polynomial part is not certified below precision 0");
    if (is_zero() || start_ > 0) return Polynomial<F>(field_);
    std::vector<value_type> c(static_cast<std::size_t>(-start_ + 1), field_.zero());
    for (std::int64_t i = start_; i <= 0; ++i) c[static_cast<std::size_t>(-i)] = coefficient(i);
    return Polynomial<F>(field_, std::move(c));
  }

  /// {L} = L - [L]; same precision.
  LaurentSeries fractional_part() const {
    if (is_zero() || start_ >= 1) return *this;
    std::vector<value_type> c;
    for (std::int64_t i = 1; i < start_ + static_cast<std::int64_t>(coeffs_.size()); ++i) c.push_back(coefficient(i));
    return LaurentSeries(field_, 1, std::move(c), precision_);
  }

  LaurentSeries operator-() const { return scaled(-field_.one()); }

  LaurentSeries scaled(const value_type& s) const {
    std::vector<value_type> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(a * s);
    return LaurentSeries(field_, start_, std::move(c), precision_);
  }

  /// Drop certified coefficients beyond a lower precision.
  LaurentSeries truncated(std::int64_t precision) const {
    if (precision >= precision_) return *this;
    std::vector<value_type> c;
    for (std::int64_t i = start_; i <= precision && i < start_ + static_cast<std::int64_t>(coeffs_.size()); ++i) {
      c.push_back(coefficient(i));
    }
    return LaurentSeries(field_, start_, std::move(c), precision);
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    check_field(a, b);
    const std::int64_t prec = std::min(a.precision_ + b.start_, b.precision_ + a.start_);
    if (a.is_zero() || b.is_zero()) return zero(a.field_, prec);
    const std::int64_t first = a.start_ + b.start_;
    if (prec < first) return zero(a.field_, prec);
    std::vector<value_type> c(static_cast<std::size_t>(prec - first + 1), a.field_.zero());
    const auto na = static_cast<std::int64_t>(a.coeffs_.size());
    const auto nb = static_cast<std::int64_t>(b.coeffs_.size());
    for (std::int64_t i = 0; i < na; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::int64_t j = 0; j < nb && i + j < static_cast<std::int64_t>(c.size()); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return LaurentSeries(a.field_, first, std::move(c), prec);
  }

  /// Product with an exact polynomial; precision drops by deg P.
  LaurentSeries times(const Polynomial<F>& p) const {
    if (!(p.field() == field_)) throw FieldMismatch("series and polynomial over different fields");
    if (p.is_zero()) return zero(field_, precision_);
    const auto dp = static_cast<std::int64_t>(p.coefficients().size()) - 1;
    // Give the exact factor enough precision that only L limits the product.
    const std::int64_t exact = std::max<std::int64_t>(0, precision_ - dp - start_);
    return *this * from_polynomial(p, exact);
  }

  /// 1/L certified to N - 2u.
  LaurentSeries reciprocal() const {
    if (is_zero()) {
      throw PrecisionError("cannot invert a series that is zero to precision " + std::to_string(precision_));
    }
    const std::int64_t n = precision_ - start_ + 1;
    const value_type lead_inv = coeffs_[0].inverse();
    std::vector<value_type> inv;
    inv.reserve(static_cast<std::size_t>(n));
    inv.push_back(lead_inv);
    const auto stored = static_cast<std::int64_t>(coeffs_.size());
    for (std::int64_t k = 1; k < n; ++k) {
      value_type acc = field_.zero();
      for (std::int64_t j = 1; j <= std::min(k, stored - 1); ++j) acc += coeffs_[j] * inv[k - j];
      inv.push_back(-(acc * lead_inv));
    }
    return LaurentSeries(field_, -start_, std::move(inv), precision_ - 2 * start_);
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.field_ == b.field_ && a.start_ == b.start_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static void check_field(const LaurentSeries& a, const LaurentSeries& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch("series over " + a.field_.name() + " and " + b.field_.name());
  }

  static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    check_field(a, b);
    const std::int64_t prec = std::min(a.precision_, b.precision_);
    const std::int64_t first = std::min(a.start_, b.start_);
    if (prec < first) return zero(a.field_, prec);
    std::vector<value_type> c;
    c.reserve(static_cast<std::size_t>(prec - first + 1));
    for (std::int64_t i = first; i <= prec; ++i) {
      c.push_back(subtract ? a.coefficient(i) - b.coefficient(i) : a.coefficient(i) + b.coefficient(i));
    }
    return LaurentSeries(a.field_, first, std::move(c), prec);
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      start_ = precision_ + 1;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    start_ += static_cast<std::int64_t>(lead);
    while (coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  F field_;
  std::int64_t start_;
  std::vector<value_type> coeffs_;
  std::int64_t precision_;
};

}  // namespace golden

#endif  // GOLDEN_LAURENT_HPP
