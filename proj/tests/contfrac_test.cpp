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

#include "golden/contfrac.hpp"
#include "golden/random.hpp"
#include "support.hpp"

namespace golden {
namespace {

using testing::golden_xv;
using testing::ints;
using testing::poly;

TEST(ContinuedFraction, RejectsConstantQuotient) {
  const PrimeField f3(3);
  EXPECT_THROW(ContinuedFraction<PrimeField>(f3, {poly(f3, {1})}), DomainError);
  EXPECT_THROW(GoldenSpec<PrimeField>::constant(f3, f3.zero(), f3.one()), DomainError);
}

TEST(CfOfRational, Examples) {
  const PrimeField f3(3);
  const RationalField q;
  {
    auto e = cf_of_rational(poly(q, {1}), poly(q, {0, 1}));
    ASSERT_EQ(e.cf.length(), 1u);
    EXPECT_EQ(e.cf.quotient(1), poly(q, {0, 1}));
    EXPECT_TRUE(e.polynomial_part.is_zero());
  }
  {
    auto e = cf_of_rational(poly(f3, {0, 1}), poly(f3, {1, 0, 1}));
    ASSERT_EQ(e.cf.length(), 2u);
    EXPECT_EQ(e.cf.quotient(1), poly(f3, {0, 1}));
    EXPECT_EQ(e.cf.quotient(2), poly(f3, {0, 1}));
    const auto c = convergents(e.cf, 2);
    EXPECT_EQ(c[1].p, poly(f3, {0, 1}));
    EXPECT_EQ(c[1].q, poly(f3, {1, 0, 1}));
  }
  {
    // Consecutive Fibonacci polynomials of [0; overline{X}]: n quotients X.
    const auto g = golden_xv(q, 1, 0);
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto c = convergents(g.to_cf(), n);
      auto e = cf_of_rational(c[n - 1].p, c[n - 1].q);
      ASSERT_EQ(e.cf.length(), n);
      for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(e.cf.quotient(i), poly(q, {0, 1}));
    }
  }
  {
    auto e = cf_of_rational(poly(q, {1, 0, 0, 1}), poly(q, {0, 1}));
    EXPECT_EQ(e.polynomial_part, poly(q, {0, 0, 1}));
    EXPECT_EQ(e.cf.length(), 1u);
  }
}

TEST(Convergents, Examples) {
  const RationalField q;
  const PrimeField f2(2);
  const auto c = convergents(golden_xv(q, 1, 0).to_cf(), 3);
  EXPECT_EQ(c[0].q, poly(q, {0, 1}));
  EXPECT_EQ(c[1].q, poly(q, {1, 0, 1}));
  EXPECT_EQ(c[2].q, poly(q, {0, 2, 0, 1}));
  EXPECT_EQ(c[0].p, poly(q, {1}));
  EXPECT_EQ(convergents(golden_xv(f2, 1, 0).to_cf(), 3)[2].q, poly(f2, {0, 0, 0, 1}));
  const ContinuedFraction<RationalField> finite(q, {poly(q, {1, 1})});
  EXPECT_THROW(convergents(finite, 2), DomainError);
}

TEST(Convergents, DeterminantIdentity) {
  std::mt19937_64 rng(0);
  const RationalField q;
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_golden(q, rng);
    const auto c = convergents(g.to_cf(), 20);
    // P_1 Q_0 - P_0 Q_1 = 1
    Polynomial<RationalField> p_prev(q);
    Polynomial<RationalField> q_prev = poly(q, {1});
    for (std::size_t n = 0; n < 20; ++n) {
      const auto det = c[n].p * q_prev - p_prev * c[n].q;
      ASSERT_EQ(det, poly(q, {n % 2 == 0 ? 1 : -1}));
      ASSERT_EQ(c[n].d, static_cast<std::int64_t>(n + 1));
      p_prev = c[n].p;
      q_prev = c[n].q;
    }
  }
}

TEST(CfToSeries, Char2Golden) {
  const PrimeField f2(2);
  const auto s = cf_to_series(golden_xv(f2, 1, 0), 16);
  EXPECT_EQ(ints(s.coefficients(1, 16)), (std::vector<long long>{1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(s.precision(), 16);
}

TEST(CfToSeries, FiniteFraction) {
  const RationalField q;
  const ContinuedFraction<RationalField> cf(q, {poly(q, {0, 1})});
  const auto s = cf_to_series(cf, 5);
  EXPECT_EQ(s.start(), 1);
  EXPECT_EQ(s.stored_coefficients().size(), 1u);
  EXPECT_EQ(s.precision(), 5);
}

TEST(CfToSeries, Char3Golden) {
  const PrimeField f3(3);
  const auto s = cf_to_series(golden_xv(f3, 1, 0), 9);
  EXPECT_EQ(ints(s.coefficients(1, 9)), (std::vector<long long>{1, 0, 2, 0, 2, 0, 1, 0, 2}));
}

TEST(CfToSeries, Char5GoldenStrings) {
  const PrimeField f5(5);
  const auto s = cf_to_series(golden_xv(f5, 1, 0), 25);
  // c_{2r+1} = (-1)^r C_r mod 5 from C_0..C_12 = 1, 1, 2, 5, 14, 42, 132, 429,
  // 1430, 4862, 16796, 58786, 208012; even positions vanish.
  const std::vector<long long> expect = {1, 0, 4, 0, 2, 0, 0, 0, 4, 0, 3, 0, 2,
                                         0, 1, 0, 0, 0, 3, 0, 1, 0, 4, 0, 2};
  EXPECT_EQ(ints(s.coefficients(1, 25)), expect);
}

template <Field F>
void quadratic_oracle(const F& field, std::mt19937_64& rng, int trials) {
  for (int t = 0; t < trials; ++t) {
    const auto g = random_golden(field, rng);
    const auto s = cf_to_series(g, 60);
    ASSERT_EQ(s.start(), 1);
    const auto res = testing::periodic_residual(g, s);
    ASSERT_TRUE(res.is_zero()) << "trial " << t;
    ASSERT_GE(res.precision(), 60 - static_cast<std::int64_t>(g.period().size()));
  }
}

TEST(CfToSeries, SatisfiesQuadraticEquation) {
  std::mt19937_64 rng(0);
  quadratic_oracle(PrimeField(3), rng, 30);
  quadratic_oracle(PrimeField(5), rng, 30);
  quadratic_oracle(PrimeField(7), rng, 30);
  quadratic_oracle(RationalField{}, rng, 15);
}

TEST(CfToSeries, ApproximationOrder) {
  std::mt19937_64 rng(0);
  const PrimeField f5(5);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_golden(f5, rng);
    const std::int64_t n_prec = 80;
    const auto s = cf_to_series(g, n_prec);
    const auto cv = convergents(g.to_cf(), 30);
    for (std::size_t n = 0; n + 1 < cv.size(); ++n) {
      const std::int64_t expect = cv[n].d + cv[n + 1].d;
      if (expect > n_prec) break;
      const auto diff = s - LaurentSeries<PrimeField>::from_rational(cv[n].p, cv[n].q, n_prec);
      ASSERT_EQ(diff.valuation(), -expect);
    }
  }
}

TEST(SeriesToCf, Examples) {
  const PrimeField f2(2);
  const PrimeField f3(3);
  {
    const auto e = series_to_cf(cf_to_series(golden_xv(f2, 1, 0), 32));
    EXPECT_GE(e.certified_count, 15u);
    for (std::size_t i = 1; i <= e.certified_count; ++i) EXPECT_EQ(e.cf.quotient(i), poly(f2, {0, 1}));
    EXPECT_FALSE(e.rational_within_precision);
  }
  {
    const auto l = LaurentSeries<PrimeField>::from_fractional_coefficients(f3, {f3.one(), f3.zero(), f3.zero()});
    const auto e = series_to_cf(l);
    ASSERT_EQ(e.certified_count, 1u);
    EXPECT_EQ(e.cf.quotient(1), poly(f3, {0, 1}));
    EXPECT_TRUE(e.rational_within_precision);
  }
  {
    const auto l = LaurentSeries<PrimeField>::from_rational(poly(f3, {1}), poly(f3, {1, 1}), 12);
    const auto e = series_to_cf(l);
    ASSERT_EQ(e.certified_count, 1u);
    EXPECT_EQ(e.cf.quotient(1), poly(f3, {1, 1}));
    EXPECT_TRUE(e.rational_within_precision);
  }
  {
    const auto l = LaurentSeries<PrimeField>::from_fractional_coefficients(f3, {f3.zero()});
    const auto e = series_to_cf(l);
    EXPECT_EQ(e.certified_count, 0u);
  }
  {
    const LaurentSeries<PrimeField> l(f3, 0, {f3.one()}, 4);
    EXPECT_THROW(series_to_cf(l), DomainError);
  }
}

TEST(SeriesToCf, CertificationIsTight) {
  // Every quotient returned is shared by all series agreeing through N;
  // perturbing c_{N+1} must not change them.
  std::mt19937_64 rng(0);
  const PrimeField f3(3);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_golden(f3, rng);
    for (std::int64_t n = 8; n <= 20; ++n) {
      const auto s = cf_to_series(g, n);
      const auto e = series_to_cf(s);
      ASSERT_EQ(e.certified_count, static_cast<std::size_t>(n / 2));
      auto c = s.coefficients(1, n);
      c.push_back(f3.one());
      const auto perturbed = series_to_cf(LaurentSeries<PrimeField>::from_fractional_coefficients(f3, c));
      ASSERT_GE(perturbed.certified_count, e.certified_count);
      for (std::size_t i = 1; i <= e.certified_count; ++i) ASSERT_EQ(e.cf.quotient(i), g.to_cf().quotient(i));
    }
  }
}

TEST(SeriesToCf, RoundTrip) {
  std::mt19937_64 rng(0);
  for (auto field : {PrimeField(3), PrimeField(5)}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_golden(field, rng);
      const auto e = series_to_cf(cf_to_series(g, 64));
      ASSERT_GE(e.certified_count, 25u);
      for (std::size_t i = 1; i <= e.certified_count; ++i) ASSERT_EQ(e.cf.quotient(i), g.to_cf().quotient(i));
    }
  }
  const RationalField q;
  for (int t = 0; t < 5; ++t) {
    const auto g = random_golden(q, rng);
    const auto e = series_to_cf(cf_to_series(g, 64));
    ASSERT_GE(e.certified_count, 25u);
    for (std::size_t i = 1; i <= e.certified_count; ++i) ASSERT_EQ(e.cf.quotient(i), g.to_cf().quotient(i));
  }
}

TEST(Golden, Predicates) {
  const PrimeField f2(2);
  EXPECT_TRUE(is_golden(golden_xv(f2, 1, 0).to_cf()));
  EXPECT_FALSE(is_golden(ContinuedFraction<PrimeField>(f2, {poly(f2, {1, 0, 1})})));
  const auto g = GoldenSpec<PrimeField>::periodic(f2, {{f2.one(), f2.zero()}, {f2.one(), f2.one()}});
  const auto cf = golden_to_cf(g);
  EXPECT_EQ(cf.quotient(1), poly(f2, {0, 1}));
  EXPECT_EQ(cf.quotient(2), poly(f2, {1, 1}));
  EXPECT_EQ(cf.quotient(5), poly(f2, {0, 1}));
  EXPECT_EQ(cf.quotient(6), poly(f2, {1, 1}));
}

TEST(Golden, Preperiod) {
  const PrimeField f5(5);
  const GoldenSpec<PrimeField> g(f5, {{f5.embed(2), f5.embed(3)}}, {{f5.one(), f5.zero()}});
  EXPECT_EQ(g.at(1).u, f5.embed(2));
  EXPECT_EQ(g.at(2).u, f5.one());
  EXPECT_EQ(g.at(7).v, f5.zero());
  // 1/(2X + 3 + phi) where phi = [0; overline{X}]
  const auto s = cf_to_series(g, 30);
  const auto phi = cf_to_series(golden_xv(f5, 1, 0), 40);
  const auto denom = phi + LaurentSeries<PrimeField>::from_polynomial(poly(f5, {3, 2}), 40);
  const auto diff = s - denom.reciprocal();
  EXPECT_TRUE(diff.is_zero());
  EXPECT_GE(diff.precision(), 30);
}

}  // namespace
}  // namespace golden
