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

#include <gtest/gtest.h>

#include <random>

#include "golden/field.hpp"

namespace golden {
namespace {

TEST(Primality, SmallNumbers) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 97, 7919};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  const std::vector<std::uint64_t> composites = {0, 1, 4, 9, 15, 561, 7917};
  for (auto n : composites) EXPECT_FALSE(is_prime(n)) << n;
}

TEST(Primality, AgreesWithTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial(n)) << n;
}

TEST(Primality, LargeValues) {
  EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest prime below 2^64
  EXPECT_FALSE(is_prime(18446744073709551557ULL - 2));
  EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(4), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(EmbedInt, Examples) {
  EXPECT_EQ(embed_int(PrimeField(3), 5).value(), 2u);
  EXPECT_EQ(embed_int(PrimeField(2), -1).value(), 1u);
  EXPECT_EQ(embed_int(RationalField{}, 7).str(), "7");
  EXPECT_EQ(embed_int(PrimeField(7), -15).value(), 6u);
}

TEST(FpArithmetic, Examples) {
  const PrimeField f5(5);
  const PrimeField f7(7);
  EXPECT_EQ(f5.embed(2).inverse().value(), 3u);
  EXPECT_EQ((f7.embed(3) * f7.embed(5)).value(), 1u);
  EXPECT_EQ((f7.embed(3) - f7.embed(5)).value(), 5u);
  EXPECT_EQ((-f7.embed(0)).value(), 0u);
  EXPECT_EQ((f7.embed(6) / f7.embed(3)).value(), 2u);
}

TEST(FpArithmetic, Errors) {
  const PrimeField f5(5);
  const PrimeField f7(7);
  EXPECT_THROW(f5.zero().inverse(), DivisionByZero);
  EXPECT_THROW(f5.one() / f5.zero(), DivisionByZero);
  EXPECT_THROW(f5.one() + f7.one(), FieldMismatch);
  EXPECT_THROW((void)(f5.one() == f7.one()), FieldMismatch);
}

TEST(FpArithmetic, NearWordSizeModulus) {
  const PrimeField f(18446744073709551557ULL);
  const Fp a = f.embed(-1);
  EXPECT_EQ((a + a).value(), 18446744073709551557ULL - 2);
  EXPECT_EQ((a * a).value(), 1u);
  EXPECT_EQ((a * a.inverse()).value(), 1u);
}

TEST(RationalArithmetic, Examples) {
  const RationalField q;
  EXPECT_EQ((Rational(1, 2) + Rational(1, 3)).str(), "5/6");
  EXPECT_EQ(Rational(4, -6).str(), "-2/3");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(q.parse("3/2") * q.parse("-2"), q.embed(-3));
  EXPECT_THROW(Rational(1, 0), DivisionByZero);
  EXPECT_THROW(q.zero().inverse(), DivisionByZero);
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
}

TEST(Parsing, Tokens) {
  const PrimeField f5(5);
  const RationalField q;
  EXPECT_EQ(f5.parse("-1").value(), 4u);
  EXPECT_EQ(f5.parse(" 12 ").value(), 2u);
  EXPECT_EQ(q.parse("-6/4").str(), "-3/2");
  EXPECT_THROW(f5.parse("x"), ParseError);
  EXPECT_THROW(f5.parse(""), ParseError);
  EXPECT_THROW(q.parse("1/0"), ParseError);
  EXPECT_THROW(q.parse("1/2/3"), ParseError);
}

template <Field F>
void field_axioms(const F& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(-1000, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    const long long m = dist(rng);
    const long long n = dist(rng);
    const auto a = field.embed(m);
    const auto b = field.embed(n);
    ASSERT_EQ(a + (-a), field.zero());
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), field.one());
    }
    ASSERT_EQ(field.embed(m + n), a + b);
    ASSERT_EQ(field.embed(m * n), a * b);
    ASSERT_EQ(a * (b + field.one()), a * b + a);
  }
}

TEST(FieldProperties, InverseNegationAndHomomorphism) {
  std::mt19937_64 rng(0);
  field_axioms(PrimeField(2), rng);
  field_axioms(PrimeField(3), rng);
  field_axioms(PrimeField(101), rng);
  field_axioms(PrimeField(4294967311ULL), rng);
  field_axioms(RationalField{}, rng);
}

TEST(FieldMixing, DoesNotCompile) {
  // Fp and Rational have no common arithmetic; only same-kind mixing is a runtime error.
  static_assert(!std::is_invocable_v<std::plus<>, Fp, Rational>);
  static_assert(!std::is_invocable_v<std::multiplies<>, Rational, Fp>);
}

}  // namespace
}  // namespace golden
