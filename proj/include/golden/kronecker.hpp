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

#ifndef GOLDEN_KRONECKER_HPP
#define GOLDEN_KRONECKER_HPP

/// Kronecker-type sequences over F_p: x_n is read off the digits of
/// {n(X) L}, either by multiplying series or through the Hankel matrix of L.
/// Points are exact rationals with denominator p^M.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "golden/hankel.hpp"
#include "golden/laurent.hpp"
#include "golden/poly.hpp"

namespace golden {

/// The digit bijection eta, fixed to d -> d * 1.
struct DigitMap {
  std::uint64_t p;

  Fp eta(std::uint64_t d) const {
    if (d >= p) throw DomainError("digit " + std::to_string(d) + " out of range for base " + std::to_string(p));
    return Fp(d, p);
  }

  std::uint64_t eta_inverse(const Fp& x) const {
    if (x.modulus() != p) throw FieldMismatch("digit from another field");
    return x.value();
  }
};

struct KroneckerPoint {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  /// u_1, ..., u_M.
  std::vector<std::uint64_t> digits;
  mpq_class value;

  std::string digit_string() const {
    std::string s;
    for (auto d : digits) {
      if (!s.empty() && p > 10) s += ".";
      s += std::to_string(d);
    }
    return s;
  }

  /// value rounded to `places` decimals.
  std::string decimal(int places = 12) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    mpz_class scaled = (value.get_num() * scale * 2 + value.get_den()) / (value.get_den() * 2);
    std::string digits_str = scaled.get_str();
    if (digits_str.size() <= static_cast<std::size_t>(places)) {
      digits_str.insert(0, static_cast<std::size_t>(places) + 1 - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(places), ".");
    return digits_str;
  }
};

namespace detail {

inline std::vector<std::uint64_t> base_digits(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint64_t> d;
  while (n != 0) {
    d.push_back(n % p);
    n /= p;
  }
  return d;
}

inline mpq_class digits_value(const std::vector<std::uint64_t>& digits, std::uint64_t p) {
  mpz_class num = 0;
  mpz_class den = 1;
  for (auto d : digits) {
    num = num * p + d;
    den *= p;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace detail

/// n(X) = sum eta(n_i) X^i from the base-p digits of n.
inline Polynomial<PrimeField> n_to_poly(std::uint64_t n, std::uint64_t p) {
  const PrimeField field(p);
  const DigitMap eta{p};
  std::vector<Fp> c;
  for (auto d : detail::base_digits(n, p)) c.push_back(eta.eta(d));
  return Polynomial<PrimeField>(field, std::move(c));
}

/// Digits u_1..u_M of {n(X) L}.
inline KroneckerPoint point_via_series(std::uint64_t n, const LaurentSeries<PrimeField>& series, std::size_t digit_count) {
  const std::uint64_t p = series.field().characteristic();
  const DigitMap eta{p};
  KroneckerPoint pt{n, p, {}, 0};
  const auto np = n_to_poly(n, p);
  if (!np.is_zero()) {
    const std::int64_t need = static_cast<std::int64_t>(digit_count) + np.degree().value();
    if (series.precision() < need) {
      throw PrecisionError("point " + std::to_string(n) + " needs series precision " + std::to_string(need));
    }
  }
  const auto frac = series.times(np).fractional_part();
  for (std::size_t i = 1; i <= digit_count; ++i) {
    pt.digits.push_back(np.is_zero() ? 0 : eta.eta_inverse(frac.coefficient(static_cast<std::int64_t>(i))));
  }
  pt.value = detail::digits_value(pt.digits, p);
  return pt;
}

/// Same point as M_L times the digit vector of n, using the M x (digits of n)
/// slice of the Hankel matrix.
inline KroneckerPoint point_via_matrix(std::uint64_t n, const LaurentSeries<PrimeField>& series, std::size_t digit_count) {
  const std::uint64_t p = series.field().characteristic();
  const DigitMap eta{p};
  KroneckerPoint pt{n, p, std::vector<std::uint64_t>(digit_count, 0), 0};
  const auto nd = detail::base_digits(n, p);
  if (!nd.empty()) {
    const Matrix<PrimeField> h = hankel_slice(series, digit_count, nd.size());
    std::vector<Fp> vec;
    for (auto d : nd) vec.push_back(eta.eta(d));
    const auto y = h * vec;
    for (std::size_t i = 0; i < digit_count; ++i) pt.digits[i] = eta.eta_inverse(y[i]);
  }
  pt.value = detail::digits_value(pt.digits, p);
  return pt;
}

/// ceil(log_p N) + 16.
inline std::size_t default_digit_depth(std::uint64_t count, std::uint64_t p) {
  std::size_t m = 0;
  for (std::uint64_t reach = 1; reach < count; reach *= p) ++m;
  return m + 16;
}

/// x_0, ..., x_{count-1}.
inline std::vector<KroneckerPoint> kronecker_points(const LaurentSeries<PrimeField>& series, std::uint64_t count,
                                                    std::size_t digit_count) {
  std::vector<KroneckerPoint> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) out.push_back(point_via_series(n, series, digit_count));
  return out;
}

/// Exact star discrepancy: max over sorted x_(i) of max(x_(i) - (i-1)/N, i/N - x_(i)).
inline mpq_class star_discrepancy(std::vector<mpq_class> points) {
  if (points.empty()) throw DomainError("star discrepancy of an empty point set");
  for (const auto& x : points) {
    if (x < 0 || x >= 1) throw DomainError("point " + x.get_str() + " outside [0,1)");
  }
  std::sort(points.begin(), points.end());
  const auto count = static_cast<long>(points.size());
  mpq_class worst = 0;
  for (long i = 1; i <= count; ++i) {
    const mpq_class& x = points[static_cast<std::size_t>(i - 1)];
    mpq_class a = x - mpq_class(mpz_class(i - 1), mpz_class(count));
    mpq_class b = mpq_class(mpz_class(i), mpz_class(count)) - x;
    a.canonicalize();
    b.canonicalize();
    worst = std::max({worst, a, b});
  }
  return worst;
}

/// The first p^m points, read to m digits, hit every a / p^m exactly once.
inline bool has_net_property(const LaurentSeries<PrimeField>& series, unsigned m) {
  const std::uint64_t p = series.field().characteristic();
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  std::vector<bool> seen(count, false);
  for (std::uint64_t n = 0; n < count; ++n) {
    const auto pt = point_via_series(n, series, m);
    std::uint64_t a = 0;
    for (auto d : pt.digits) a = a * p + d;
    if (seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

}  // namespace golden

#endif  // GOLDEN_KRONECKER_HPP
