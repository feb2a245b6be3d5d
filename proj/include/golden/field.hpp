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

#ifndef GOLDEN_FIELD_HPP
#define GOLDEN_FIELD_HPP

/// Exact scalar fields: the prime fields F_p and the rationals.
///
/// A field is described by a small value type (PrimeField, RationalField)
/// that hands out elements. Elements are self-contained values; prime-field
/// elements carry their modulus so that combining residues of different
/// fields is detected at run time and reported as FieldMismatch. Mixing F_p
/// and Q elements does not compile.

#include <gmpxx.h>

#include <array>
#include <cctype>
#include <charconv>
#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "golden/error.hpp"

namespace golden {

namespace detail {

__extension__ typedef unsigned __int128 u128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline std::uint64_t mpz_mod_u64(const mpz_class& n, std::uint64_t m) {
  mpz_class r;
  mpz_class mm;
  mpz_import(mm.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), mm.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count == 0 ? 0 : out;
}

inline mpz_class parse_integer(std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
  std::string s(token);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t first = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (first == s.size()) throw ParseError("malformed integer literal '" + s + "'");
  for (std::size_t i = first; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace detail

/// Deterministic Miller-Rabin; the fixed witness set is exact below 2^64.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Residue class modulo a prime, always fully reduced.
class Fp {
 public:
  Fp(std::uint64_t residue, std::uint64_t modulus) : value_(residue % modulus), modulus_(modulus) {}

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Fp inverse() const {
    if (value_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(modulus_));
    // Fermat; the modulus is prime by construction of PrimeField.
    return {detail::powmod(value_, modulus_ - 2, modulus_), modulus_};
  }

  Fp operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check_same(a, b);
    std::uint64_t s = a.value_ + b.value_;
    if (s < a.value_ || s >= a.modulus_) s -= a.modulus_;
    return {s, a.modulus_};
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check_same(a, b);
    return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.modulus_ - (b.value_ - a.value_), a.modulus_};
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check_same(a, b);
    return {detail::mulmod(a.value_, b.value_, a.modulus_), a.modulus_};
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }

  std::string str() const { return std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

 private:
  static void check_same(const Fp& a, const Fp& b) {
    if (a.modulus_ != b.modulus_) {
      throw FieldMismatch("operands from F_" + std::to_string(a.modulus_) + " and F_" +
                          std::to_string(b.modulus_));
    }
  }

  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(long long n) : q_(static_cast<long>(n)) {}
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const mpq_class& get() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0 in Q");
    return Rational(mpq_class(1 / q_));
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  mpq_class q_;
};

/// F_p for a prime p < 2^64.
class PrimeField {
 public:
  using value_type = Fp;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const { return "F" + std::to_string(p_); }

  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1 % p_, p_}; }

  Fp embed(long long n) const {
    if (n >= 0) return {static_cast<std::uint64_t>(n) % p_, p_};
    // -(|n| mod p) without overflowing on LLONG_MIN.
    std::uint64_t mag = static_cast<std::uint64_t>(-(n + 1)) + 1;
    return -Fp(mag % p_, p_);
  }
  Fp embed(const mpz_class& n) const { return {detail::mpz_mod_u64(n, p_), p_}; }

  Fp parse(std::string_view token) const { return embed(detail::parse_integer(token)); }

  bool owns(const Fp& x) const noexcept { return x.modulus() == p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// The rationals Q.
class RationalField {
 public:
  using value_type = Rational;

  std::uint64_t characteristic() const noexcept { return 0; }
  std::string name() const { return "Q"; }

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational embed(long long n) const { return Rational(n); }
  Rational embed(const mpz_class& n) const { return Rational(n); }

  /// Accepts "n" or "n/d".
  Rational parse(std::string_view token) const {
    auto slash = token.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(token));
    mpz_class den = detail::parse_integer(token.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
    return Rational(detail::parse_integer(token.substr(0, slash)), den);
  }

  bool owns(const Rational&) const noexcept { return true; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept Field = std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a, long long n,
                                                         const mpz_class& big, std::string_view text) {
  typename F::value_type;
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.embed(n) } -> std::same_as<typename F::value_type>;
  { f.embed(big) } -> std::same_as<typename F::value_type>;
  { f.parse(text) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.owns(a) } -> std::same_as<bool>;
  { a + a } -> std::same_as<typename F::value_type>;
  { a - a } -> std::same_as<typename F::value_type>;
  { a * a } -> std::same_as<typename F::value_type>;
  { -a } -> std::same_as<typename F::value_type>;
  { a.inverse() } -> std::same_as<typename F::value_type>;
  { a.is_zero() } -> std::same_as<bool>;
  { a == a } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
};

template <Field F>
using Elem = typename F::value_type;

/// Image of n under Z -> k.
template <Field F>
Elem<F> embed_int(const F& field, long long n) {
  return field.embed(n);
}

}  // namespace golden

#endif  // GOLDEN_FIELD_HPP
