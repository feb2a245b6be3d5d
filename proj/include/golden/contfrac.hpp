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

#ifndef GOLDEN_CONTFRAC_HPP
#define GOLDEN_CONTFRAC_HPP

/// Continued fractions [0; A_1, A_2, ...] over k(X) and certified conversion
/// between continued fractions and Laurent series.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "golden/field.hpp"
#include "golden/laurent.hpp"
#include "golden/poly.hpp"

namespace golden {

/// Partial quotients stored as a preperiod followed by an optional repeated
/// period. An empty period means the continued fraction is finite. Quotients
/// are produced on demand by index, never materialized.
template <Field F>
class ContinuedFraction {
 public:
  explicit ContinuedFraction(F field, std::vector<Polynomial<F>> preperiod = {},
                             std::vector<Polynomial<F>> period = {})
      : field_(std::move(field)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    for (const auto* part : {&preperiod_, &period_}) {
      for (const auto& a : *part) {
        if (!(a.field() == field_)) throw FieldMismatch("partial quotient over a different field");
        if (a.degree() < Degree(1)) throw DomainError("partial quotients must have degree >= 1");
      }
    }
  }

  const F& field() const noexcept { return field_; }
  const std::vector<Polynomial<F>>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Polynomial<F>>& period() const noexcept { return period_; }
  bool is_finite() const noexcept { return period_.empty(); }

  /// Number of quotients of a finite continued fraction.
  std::size_t length() const {
    if (!is_finite()) throw DomainError("periodic continued fraction has no finite length");
    return preperiod_.size();
  }

  bool has_quotient(std::size_t i) const noexcept { return i >= 1 && (!is_finite() || i <= preperiod_.size()); }

  /// A_i, 1-based.
  const Polynomial<F>& quotient(std::size_t i) const {
    if (!has_quotient(i)) {
      throw DomainError("quotient " + std::to_string(i) + " requested from a finite continued fraction of length " +
                        std::to_string(preperiod_.size()));
    }
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return period_[(i - 1 - preperiod_.size()) % period_.size()];
  }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  F field_;
  std::vector<Polynomial<F>> preperiod_;
  std::vector<Polynomial<F>> period_;
};

/// A quotient u X + v of a golden ratio analog.
template <Field F>
struct LinearQuotient {
  Elem<F> u;
  Elem<F> v;
};

/// A golden ratio analog [0; u_1 X + v_1, u_2 X + v_2, ...] given by its
/// (u_i, v_i) pairs, u_i != 0.
template <Field F>
class GoldenSpec {
 public:
  GoldenSpec(F field, std::vector<LinearQuotient<F>> preperiod, std::vector<LinearQuotient<F>> period)
      : field_(std::move(field)), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (preperiod_.empty() && period_.empty()) throw DomainError("golden spec without quotients");
    for (const auto* part : {&preperiod_, &period_}) {
      for (const auto& q : *part) {
        if (!field_.owns(q.u) || !field_.owns(q.v)) throw FieldMismatch("golden spec entry from another field");
        if (q.u.is_zero()) throw DomainError("golden spec requires every u_i != 0");
      }
    }
  }

  /// Purely periodic [0; overline{u_1 X + v_1, ..., u_r X + v_r}].
  static GoldenSpec periodic(const F& field, std::vector<LinearQuotient<F>> period) {
    return GoldenSpec(field, {}, std::move(period));
  }

  /// [0; overline{u X + v}].
  static GoldenSpec constant(const F& field, Elem<F> u, Elem<F> v) {
    return periodic(field, {LinearQuotient<F>{std::move(u), std::move(v)}});
  }

  const F& field() const noexcept { return field_; }
  const std::vector<LinearQuotient<F>>& preperiod() const noexcept { return preperiod_; }
  const std::vector<LinearQuotient<F>>& period() const noexcept { return period_; }
  bool is_finite() const noexcept { return period_.empty(); }
  bool has_quotient(std::size_t i) const noexcept { return i >= 1 && (!is_finite() || i <= preperiod_.size()); }

  /// (u_i, v_i), 1-based.
  const LinearQuotient<F>& at(std::size_t i) const {
    if (!has_quotient(i)) throw DomainError("golden spec has no quotient " + std::to_string(i));
    if (i <= preperiod_.size()) return preperiod_[i - 1];
    return period_[(i - 1 - preperiod_.size()) % period_.size()];
  }

  ContinuedFraction<F> to_cf() const {
    auto lift = [this](const std::vector<LinearQuotient<F>>& qs) {
      std::vector<Polynomial<F>> out;
      for (const auto& q : qs) out.push_back(Polynomial<F>::linear(field_, q.u, q.v));
      return out;
    };
    return ContinuedFraction<F>(field_, lift(preperiod_), lift(period_));
  }

 private:
  F field_;
  std::vector<LinearQuotient<F>> preperiod_;
  std::vector<LinearQuotient<F>> period_;
};

template <Field F>
ContinuedFraction<F> golden_to_cf(const GoldenSpec<F>& g) {
  return g.to_cf();
}

/// True iff every quotient (preperiod and one full period) has degree 1.
template <Field F>
bool is_golden(const ContinuedFraction<F>& cf) {
  for (const auto* part : {&cf.preperiod(), &cf.period()}) {
    for (const auto& a : *part) {
      if (!(a.degree() == 1)) return false;
    }
  }
  return true;
}

/// n-th convergent P_n / Q_n with d_n = deg Q_n.
template <Field F>
struct Convergent {
  std::size_t n;
  Polynomial<F> p;
  Polynomial<F> q;
  std::int64_t d;
};

/// Walks the convergent recursion Q_n = A_n Q_{n-1} + Q_{n-2} (same for P)
/// from Q_{-1} = 0, P_{-1} = 1, Q_0 = 1, P_0 = 0.
template <Field F>
class ConvergentStream {
 public:
  explicit ConvergentStream(const ContinuedFraction<F>& cf)
      : cf_(&cf),
        p_prev_(Polynomial<F>::constant(cf.field(), cf.field().one())),
        q_prev_(cf.field()),
        current_{0, Polynomial<F>(cf.field()), Polynomial<F>::constant(cf.field(), cf.field().one()), 0} {}

  const Convergent<F>& current() const noexcept { return current_; }
  bool has_next() const noexcept { return cf_->has_quotient(current_.n + 1); }

  /// deg A_{n+1}; requires has_next().
  std::int64_t next_quotient_degree() const { return cf_->quotient(current_.n + 1).degree().value(); }

  const Convergent<F>& advance() {
    const Polynomial<F>& a = cf_->quotient(current_.n + 1);
    Polynomial<F> p = a * current_.p + p_prev_;
    Polynomial<F> q = a * current_.q + q_prev_;
    p_prev_ = std::move(current_.p);
    q_prev_ = std::move(current_.q);
    current_.p = std::move(p);
    current_.q = std::move(q);
    current_.n += 1;
    current_.d = current_.q.degree().value();
    return current_;
  }

 private:
  const ContinuedFraction<F>* cf_;
  Polynomial<F> p_prev_;
  Polynomial<F> q_prev_;
  Convergent<F> current_;
};

/// Convergents 1..n.
template <Field F>
std::vector<Convergent<F>> convergents(const ContinuedFraction<F>& cf, std::size_t n) {
  ConvergentStream<F> stream(cf);
  std::vector<Convergent<F>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!stream.has_next()) {
      throw DomainError("convergent " + std::to_string(i + 1) + " requested from a finite continued fraction of length " +
                        std::to_string(cf.length()));
    }
    out.push_back(stream.advance());
  }
  return out;
}

template <Field F>
struct RationalExpansion {
  Polynomial<F> polynomial_part;
  ContinuedFraction<F> cf;
};

/// Euclidean algorithm: P/Q = polynomial_part + [0; A_1, ..., A_m].
template <Field F>
RationalExpansion<F> cf_of_rational(const Polynomial<F>& p, const Polynomial<F>& q) {
  if (q.is_zero()) throw DivisionByZero("cf_of_rational with zero denominator");
  auto [head, num] = divrem(p, q);
  Polynomial<F> den = q;
  std::vector<Polynomial<F>> quotients;
  while (!num.is_zero()) {
    auto [a, r] = divrem(den, num);
    quotients.push_back(std::move(a));
    den = std::move(num);
    num = std::move(r);
  }
  return {std::move(head), ContinuedFraction<F>(p.field(), std::move(quotients))};
}

/// Series of the value of cf certified through X^{-precision}. Uses the first
/// convergent with d_n + d_{n+1} > precision; a finite continued fraction is
/// its last convergent exactly.
template <Field F>
LaurentSeries<F> cf_to_series(const ContinuedFraction<F>& cf, std::int64_t precision) {
  ConvergentStream<F> stream(cf);
  while (stream.has_next()) {
    const std::int64_t d_n = stream.current().d;
    if (d_n + d_n + stream.next_quotient_degree() > precision) break;
    stream.advance();
  }
  return LaurentSeries<F>::from_rational(stream.current().p, stream.current().q, precision);
}

template <Field F>
LaurentSeries<F> cf_to_series(const GoldenSpec<F>& g, std::int64_t precision) {
  return cf_to_series(g.to_cf(), precision);
}

template <Field F>
struct CertifiedExpansion {
  /// The certified quotients A_1..A_m as a finite continued fraction.
  ContinuedFraction<F> cf;
  std::size_t certified_count = 0;
  /// The remainder vanished within precision: the series agrees with the
  /// rational value of cf through its precision.
  bool rational_within_precision = false;
  /// Precision left over after the last certified quotient.
  std::int64_t remaining_precision = 0;
};

/// Partial quotients of a series with negative valuation. A quotient A_m is
/// emitted only when the input precision N satisfies N >= 2 d_m, which is
/// exactly when every series agreeing with L through X^{-N} shares A_1..A_m.
template <Field F>
CertifiedExpansion<F> series_to_cf(const LaurentSeries<F>& series) {
  if (!series.is_zero() && series.start() < 1) {
    throw DomainError("series_to_cf requires negative valuation (no polynomial part)");
  }
  std::vector<Polynomial<F>> quotients;
  LaurentSeries<F> rest = series;
  bool rational = false;
  while (true) {
    // Nothing is known about a remainder certified to no fractional digit.
    if (rest.precision() < 1) break;
    if (rest.is_zero()) {
      rational = true;
      break;
    }
    // 1/rest has precision N - 2u; its polynomial part (degree u) is
    // certified iff that is >= 0.
    if (rest.precision() - 2 * rest.start() < 0) break;
    LaurentSeries<F> inv = rest.reciprocal();
    quotients.push_back(inv.polynomial_part());
    rest = inv.fractional_part();
  }
  CertifiedExpansion<F> out{ContinuedFraction<F>(series.field(), std::move(quotients)), 0, rational,
                            rest.precision()};
  out.certified_count = out.cf.length();
  return out;
}

}  // namespace golden

#endif  // GOLDEN_CONTFRAC_HPP
