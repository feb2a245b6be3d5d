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

#include "golden/laurent.hpp"
#include "support.hpp"

namespace golden {
namespace {

using testing::ints;
using testing::poly;

TEST(Valuation, Examples) {
  const PrimeField f5(5);
  const auto a = LaurentSeries<PrimeField>::from_fractional_coefficients(f5, {f5.one(), f5.zero(), f5.one()});
  EXPECT_EQ(a.valuation(), -1);
  const LaurentSeries<PrimeField> b(f5, -2, {f5.one(), f5.zero(), f5.one(), f5.one()}, 5);
  EXPECT_EQ(b.valuation(), 2);
  const auto z = LaurentSeries<PrimeField>::zero(f5, 10);
  EXPECT_TRUE(z.valuation().is_minus_infinity());
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.precision(), 10);
  EXPECT_EQ(z.start(), 11);
}

TEST(Construction, RejectsCoefficientsBeyondPrecision) {
  const PrimeField f3(3);
  EXPECT_THROW(LaurentSeries<PrimeField>(f3, 1, {f3.one(), f3.one()}, 1), DomainError);
}

TEST(Coefficients, UncertifiedIndexIsAnError) {
  const PrimeField f2(2);
  const auto s = LaurentSeries<PrimeField>::from_rational(poly(f2, {1}), poly(f2, {0, 1}), 5);
  EXPECT_EQ(ints(s.coefficients(1, 5)), (std::vector<long long>{1, 0, 0, 0, 0}));
  EXPECT_THROW((void)s.coefficient(6), PrecisionError);
}

TEST(Parts, Examples) {
  const RationalField q;
  const PrimeField f5(5);
  // X + 1 + X^{-1}
  const LaurentSeries<RationalField> l(q, -1, {q.one(), q.one(), q.one()}, 4);
  EXPECT_EQ(l.polynomial_part(), poly(q, {1, 1}));
  EXPECT_EQ(l.fractional_part().start(), 1);
  EXPECT_EQ(l.fractional_part().stored_coefficients().size(), 1u);
  EXPECT_EQ(l.fractional_part().precision(), 4);

  const auto neg = LaurentSeries<RationalField>::from_fractional_coefficients(q, {q.one(), q.embed(2)});
  EXPECT_TRUE(neg.polynomial_part().is_zero());
  EXPECT_EQ(neg.fractional_part(), neg);

  // 2X^2 + 3X^{-2}
  const LaurentSeries<PrimeField> m(f5, -2, {f5.embed(2), f5.zero(), f5.zero(), f5.zero(), f5.embed(3)}, 6);
  EXPECT_EQ(m.polynomial_part(), poly(f5, {0, 0, 2}));
  EXPECT_EQ(m.fractional_part().start(), 2);
  EXPECT_EQ(m.fractional_part().coefficient(2).value(), 3u);
}

TEST(FromRational, Examples) {
  const PrimeField f2(2);
  const PrimeField f3(3);
  const auto a = LaurentSeries<PrimeField>::from_rational(poly(f2, {1}), poly(f2, {0, 1}), 5);
  EXPECT_EQ(a.start(), 1);
  EXPECT_EQ(a.stored_coefficients().size(), 1u);
  EXPECT_EQ(a.precision(), 5);
  const auto b = LaurentSeries<PrimeField>::from_rational(poly(f3, {1}), poly(f3, {1, 1}), 4);
  EXPECT_EQ(ints(b.coefficients(1, 4)), (std::vector<long long>{1, 2, 1, 2}));
  EXPECT_EQ(b.precision(), 4);
  EXPECT_THROW(LaurentSeries<PrimeField>::from_rational(poly(f3, {1}), Polynomial<PrimeField>(f3), 4),
               DivisionByZero);
}

TEST(FromRational, TimesDenominatorGivesNumerator) {
  std::mt19937_64 rng(0);
  const PrimeField f7(7);
  std::uniform_int_distribution<long long> coef(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long long> pc(4), qc(6);
    for (auto& c : pc) c = coef(rng);
    for (auto& c : qc) c = coef(rng);
    const auto p = poly(f7, pc);
    const auto q = poly(f7, qc);
    if (q.is_zero()) continue;
    const auto s = LaurentSeries<PrimeField>::from_rational(p, q, 30);
    ASSERT_EQ(s.precision(), 30);
    const auto back = s.times(q);
    const auto expect = LaurentSeries<PrimeField>::from_polynomial(p, back.precision());
    ASSERT_EQ((back - expect).is_zero(), true);
    ASSERT_GE(back.precision(), 30 - q.degree().value());
  }
}

TEST(Arithmetic, PrecisionRules) {
  const RationalField q;
  // u = 1, N = 10 and u = 2, N = 7
  const LaurentSeries<RationalField> a(q, 1, {q.one(), q.embed(2)}, 10);
  const LaurentSeries<RationalField> b(q, 2, {q.embed(3)}, 7);
  EXPECT_EQ((a + b).precision(), 7);
  EXPECT_EQ((a - b).precision(), 7);
  EXPECT_EQ((a * b).precision(), std::min(10 + 2, 7 + 1));
  EXPECT_EQ(a.reciprocal().precision(), 10 - 2);
  EXPECT_EQ(b.reciprocal().precision(), 7 - 4);
  EXPECT_EQ(a.reciprocal().start(), -1);
}

TEST(Arithmetic, ReciprocalIdentity) {
  const PrimeField f5(5);
  const LaurentSeries<PrimeField> a(f5, 2, {f5.embed(3), f5.embed(1), f5.embed(4), f5.embed(4)}, 12);
  const auto prod = a * a.reciprocal();
  EXPECT_EQ(prod.precision(), std::min(12 - 2, 8 + 2));
  EXPECT_EQ(prod.start(), 0);
  EXPECT_EQ(prod.stored_coefficients().size(), 1u);
  EXPECT_EQ(prod.coefficient(0), f5.one());
  EXPECT_THROW(LaurentSeries<PrimeField>::zero(f5, 5).reciprocal(), PrecisionError);
}

TEST(Arithmetic, MismatchedFields) {
  const auto a = LaurentSeries<PrimeField>::zero(PrimeField(3), 4);
  const auto b = LaurentSeries<PrimeField>::zero(PrimeField(5), 4);
  EXPECT_THROW(a + b, FieldMismatch);
  EXPECT_THROW(a * b, FieldMismatch);
}

TEST(Valuation, Ultrametric) {
  std::mt19937_64 rng(0);
  const PrimeField f3(3);
  std::uniform_int_distribution<int> start(-4, 6);
  std::uniform_int_distribution<long long> coef(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    auto make = [&] {
      const int s = start(rng);
      std::vector<Fp> c = {f3.embed(1 + coef(rng) % 2)};
      for (int i = 0; i < 8; ++i) c.push_back(f3.embed(coef(rng)));
      return LaurentSeries<PrimeField>(f3, s, c, 20);
    };
    const auto a = make();
    const auto b = make();
    if (a.valuation() == b.valuation()) continue;
    ASSERT_EQ((a + b).valuation(), std::max(a.valuation(), b.valuation()));
  }
}

TEST(Times, PolynomialFactor) {
  const PrimeField f2(2);
  // (X^{-1} + X^{-3}) * X = 1 + X^{-2}
  const auto l = LaurentSeries<PrimeField>::from_fractional_coefficients(f2, {f2.one(), f2.zero(), f2.one(), f2.zero()});
  const auto t = l.times(poly(f2, {0, 1}));
  EXPECT_EQ(t.start(), 0);
  EXPECT_EQ(t.precision(), 3);
  EXPECT_EQ(ints(t.coefficients(0, 3)), (std::vector<long long>{1, 0, 1, 0}));
}

}  // namespace
}  // namespace golden
