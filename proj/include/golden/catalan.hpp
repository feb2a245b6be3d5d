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

#ifndef GOLDEN_CATALAN_HPP
#define GOLDEN_CATALAN_HPP

/// Catalan triangle numbers, binomials and Catalan numbers modulo p, and the
/// explicit Laurent coefficients of [0; overline{X}] in positive
/// characteristic that they produce.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "golden/binomial.hpp"
#include "golden/field.hpp"
#include "golden/laurent.hpp"

namespace golden {

/// Base-p digits, least significant first, without trailing zeros (0 has no digits).
struct PadicDigits {
  std::uint64_t p;
  std::vector<std::uint64_t> digits;

  static PadicDigits of(std::uint64_t n, std::uint64_t p) {
    if (p < 2) throw DomainError("p-adic base must be >= 2");
    PadicDigits out{p, {}};
    while (n != 0) {
      out.digits.push_back(n % p);
      n /= p;
    }
    return out;
  }

  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

/// B_{n,m} = C(n-1, m) - C(n-1, m-1).
inline mpz_class catalan_triangle_B(std::int64_t n, std::int64_t m) { return binomial(n - 1, m) - binomial(n - 1, m - 1); }

/// C_n = C(2n, n) - C(2n, n-1), exactly.
inline mpz_class catalan_number(std::int64_t n) { return binomial(2 * n, n) - binomial(2 * n, n - 1); }

namespace detail {

// C(m, n) mod p for single digits m, n < p.
inline std::uint64_t small_binomial_mod(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (n > m) return 0;
  if (n > m - n) n = m - n;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    num = mulmod(num, (m - i) % p, p);
    den = mulmod(den, (i + 1) % p, p);
  }
  return mulmod(num, powmod(den, p - 2, p), p);
}

}  // namespace detail

/// C(m, n) mod p by Lucas' theorem: product of digit binomials.
inline std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("binom_mod_p needs a prime modulus");
  std::uint64_t result = 1 % p;
  while (n != 0 || m != 0) {
    std::uint64_t mi = m % p;
    std::uint64_t ni = n % p;
    if (ni > mi) return 0;
    result = detail::mulmod(result, detail::small_binomial_mod(mi, ni, p), p);
    m /= p;
    n /= p;
  }
  return result;
}

/// C_n mod p as (C(2n,n) - C(2n,n-1)) mod p with both binomials by Lucas.
inline std::uint64_t catalan_mod_p_lucas(std::uint64_t n, std::uint64_t p) {
  std::uint64_t a = binom_mod_p(2 * n, n, p);
  std::uint64_t b = n == 0 ? 0 : binom_mod_p(2 * n, n - 1, p);
  return (a + p - b) % p;
}

/// C_n mod p for odd p by the carry analysis of 2n in base p.
///
/// Lowest digit a_0 != p-1: C_n != 0 iff every digit is <= (p-1)/2, and then
/// doubling n has no carries, so C_n = C(2n,n)/(n+1) = prod C(2a_i, a_i) / (a_0+1).
/// Lowest digit a_0 == p-1: strip the maximal run of l digits p-1 and use
/// C_n = -(2 n_l + 1) C_{n_l} with n_l = n / p^l, whose lowest digit is not p-1.
inline std::uint64_t catalan_mod_p(std::uint64_t n, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("catalan_mod_p needs an odd prime");
  auto no_carry_case = [p](std::uint64_t m) -> std::uint64_t {
    const PadicDigits d = PadicDigits::of(m, p);
    std::uint64_t prod = 1;
    for (std::uint64_t a : d.digits) {
      if (a > (p - 1) / 2) return 0;
      prod = detail::mulmod(prod, detail::small_binomial_mod(2 * a, a, p), p);
    }
    return detail::mulmod(prod, detail::powmod(d.digit(0) + 1, p - 2, p), p);
  };
  if (n % p != p - 1) return no_carry_case(n);
  std::uint64_t nl = n;
  while (nl % p == p - 1) nl /= p;
  const std::uint64_t factor = (2 * (nl % p) + 1) % p;
  const std::uint64_t value = detail::mulmod(factor, no_carry_case(nl), p);
  return value == 0 ? 0 : p - value;
}

/// (-1)^n C_n mod p.
inline std::uint64_t signed_catalan_mod_p(std::uint64_t n, std::uint64_t p) {
  if (p == 2) return catalan_mod_p_lucas(n, 2);
  std::uint64_t c = catalan_mod_p(n, p);
  return (n % 2 == 1 && c != 0) ? p - c : c;
}

/// Coefficient of X^{-i} (i >= 1) in [0; overline{X}] over F_p: zero for even
/// i, (-1)^r C_r for i = 2r + 1. For p = 2 this is 1 iff i + 1 is a power of 2.
inline Fp phi_coefficient(std::uint64_t i, std::uint64_t p) {
  if (i == 0) throw DomainError("phi_coefficient index starts at 1");
  const PrimeField field(p);
  if (i % 2 == 0) return field.zero();
  if (p == 2) return ((i + 1) & i) == 0 ? field.one() : field.zero();
  return Fp(signed_catalan_mod_p((i - 1) / 2, p), p);
}

/// First `count` values of (a_i), [0; overline{X}] = sum a_i X^{-2i-1} over
/// F_3, produced by block rewriting: start (1, 2); step k sets a_{3^k - 1} = 2,
/// repeats a_0..a_{3^k - 2}, then appends 3^k zeros.
inline std::vector<std::uint64_t> char3_pattern(std::size_t count) {
  if (count < 2) throw DomainError("char3_pattern needs count >= 2");
  std::vector<std::uint64_t> a = {1, 2};
  std::size_t power = 3;
  while (a.size() < count) {
    a.push_back(2);
    for (std::size_t i = 0; i + 1 < power; ++i) a.push_back(a[i]);
    a.insert(a.end(), power, 0);
    power *= 3;
  }
  a.resize(count);
  return a;
}

/// nu_2(n): exponent of 2 in n > 0.
inline unsigned dyadic_valuation(std::uint64_t n) {
  if (n == 0) throw DomainError("dyadic valuation of 0");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

/// [0; overline{X+1}] over F_2 through X^{-N}: c_{2n-1} = c_{2n} = nu_2(2n) mod 2.
inline LaurentSeries<PrimeField> char2_phibar_series(std::int64_t precision) {
  if (precision < 1) throw DomainError("char2_phibar_series needs N >= 1");
  const PrimeField f2(2);
  std::vector<Fp> c;
  for (std::int64_t i = 1; i <= precision; ++i) {
    const auto n = static_cast<std::uint64_t>((i + 1) / 2);
    c.push_back(Fp(dyadic_valuation(2 * n) % 2, 2));
  }
  return LaurentSeries<PrimeField>::from_fractional_coefficients(f2, std::move(c));
}

/// sum_{i=0}^{n} C_i C_{n-i} = C_{n+1} for all n <= n_max, in exact integers.
inline bool catalan_recurrence_check(std::int64_t n_max) {
  std::vector<mpz_class> c;
  for (std::int64_t n = 0; n <= n_max + 1; ++n) c.push_back(catalan_number(n));
  for (std::int64_t n = 0; n <= n_max; ++n) {
    mpz_class sum = 0;
    for (std::int64_t i = 0; i <= n; ++i) sum += c[i] * c[n - i];
    if (sum != c[n + 1]) return false;
  }
  return true;
}

}  // namespace golden

#endif  // GOLDEN_CATALAN_HPP
