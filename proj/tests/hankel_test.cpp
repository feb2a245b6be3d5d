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

#include "golden/hankel.hpp"
#include "golden/random.hpp"
#include "support.hpp"

namespace golden {
namespace {

using testing::golden_xv;
using testing::poly;

template <Field F>
Matrix<F> from_rows(const F& field, const std::vector<std::vector<long long>>& rows) {
  Matrix<F> m(field, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = field.embed(rows[i][j]);
  }
  return m;
}

TEST(HankelOfSeries, Examples) {
  const PrimeField f2(2);
  const PrimeField f3(3);
  const auto phi2 = cf_to_series(golden_xv(f2, 1, 0), 5);
  EXPECT_EQ(hankel_of_series(phi2, 3), from_rows(f2, {{1, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  const auto xinv = LaurentSeries<PrimeField>::from_fractional_coefficients(f3, {f3.one(), f3.zero(), f3.zero()});
  EXPECT_EQ(hankel_of_series(xinv, 2), from_rows(f3, {{1, 0}, {0, 0}}));
  const auto phi3 = cf_to_series(golden_xv(f3, 1, 0), 3);
  EXPECT_EQ(hankel_of_series(phi3, 2), from_rows(f3, {{1, 0}, {0, 2}}));
}

TEST(HankelOfSeries, Errors) {
  const PrimeField f3(3);
  const auto phi3 = cf_to_series(golden_xv(f3, 1, 0), 4);
  try {
    (void)hankel_of_series(phi3, 3);
    FAIL() << "expected PrecisionError";
  } catch (const PrecisionError& e) {
    EXPECT_NE(std::string(e.what()).find("needs precision 5"), std::string::npos);
  }
  const LaurentSeries<PrimeField> poly_part(f3, 0, {f3.one()}, 6);
  EXPECT_THROW((void)hankel_of_series(poly_part, 2), DomainError);
}

TEST(Regularity, Examples) {
  const PrimeField f3(3);
  EXPECT_TRUE(is_regular(hankel_of_series(cf_to_series(golden_xv(f3, 1, 0), 15), 8)));
  const auto inv_sq = LaurentSeries<PrimeField>::from_rational(poly(f3, {1}), poly(f3, {0, 0, 1}), 5);
  const auto rep = leading_minors(hankel_of_series(inv_sq, 2));
  EXPECT_FALSE(rep.regular);
  EXPECT_EQ(rep.first_singular_minor, 1u);
  const auto one = LaurentSeries<PrimeField>::from_fractional_coefficients(f3, {f3.embed(2)});
  EXPECT_TRUE(is_regular(hankel_of_series(one, 1)));
}

TEST(Regularity, DegreeTwoQuotientBreaksMinorAtItsPosition) {
  std::mt19937_64 rng(0);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (std::size_t j = 1; j <= 5; ++j) {
      const auto g = random_golden(f, rng);
      std::vector<Polynomial<PrimeField>> q;
      for (std::size_t i = 1; i < j; ++i) q.push_back(g.to_cf().quotient(i));
      q.push_back(poly(f, {1, 0, 1}));
      std::vector<Polynomial<PrimeField>> period;
      for (std::size_t i = j; i < j + g.period().size(); ++i) period.push_back(g.to_cf().quotient(i));
      const ContinuedFraction<PrimeField> cf(f, q, period);
      const auto rep = leading_minors(hankel_of_series(cf_to_series(cf, 63), 32));
      EXPECT_FALSE(rep.regular);
      EXPECT_EQ(rep.first_singular_minor, j) << "p=" << p << " j=" << j;
    }
  }
}

TEST(RMatrix, Examples) {
  const RationalField q;
  const PrimeField f2(2);
  const PrimeField f3(3);
  EXPECT_EQ(r_matrix(golden_xv(q, 1, 0), 3), from_rows(q, {{0, -1, 0}, {1, 0, -1}, {0, 1, 0}}));
  EXPECT_EQ(r_matrix(golden_xv(f2, 1, 0), 3), from_rows(f2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  const auto g = golden_xv(f3, 2, 1);
  EXPECT_EQ(b_matrix(g, 2), from_rows(f3, {{-1, -1}, {1, -1}}));
  EXPECT_EQ(d_matrix(g, 2), from_rows(f3, {{2, 0}, {0, 2}}));
  EXPECT_EQ(r_matrix(g, 2), from_rows(f3, {{1, 1}, {2, 1}}));
}

TEST(RMatrix, FactorsAsBTimesD) {
  std::mt19937_64 rng(0);
  const RationalField q;
  for (int t = 0; t < 10; ++t) {
    const auto g = random_golden(q, rng);
    EXPECT_EQ(r_matrix(g, 9), b_matrix(g, 9) * d_matrix(g, 9));
  }
}

TEST(UMatrix, Examples) {
  const PrimeField f2(2);
  const RationalField q;
  EXPECT_EQ(u_matrix(golden_xv(f2, 1, 0), 3), from_rows(f2, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(u_matrix(golden_xv(q, 3, 2), 1), from_rows(q, {{1}}));
  const auto u = u_matrix(golden_xv(q, 1, 0), 5);
  EXPECT_EQ(u.row(0), (std::vector<Rational>{q.embed(1), q.zero(), q.embed(-1), q.zero(), q.embed(2)}));
}

TEST(UMatrix, RowOneMatchesCatalanTriangleClosedForm) {
  const RationalField q;
  const std::size_t k = 24;
  const auto u = u_matrix(golden_xv(q, 1, 0), k);
  for (std::size_t l = 1; l <= k; ++l) {
    for (std::size_t j = l; j <= k; ++j) {
      Rational expect = q.zero();
      if ((j - l) % 2 == 0) {
        const auto h = static_cast<std::int64_t>((j - l) / 2);
        const mpz_class v = binomial(static_cast<std::int64_t>(j) - 1, h) - binomial(static_cast<std::int64_t>(j) - 1, h - 1);
        expect = q.embed(h % 2 == 0 ? v : mpz_class(-v));
      }
      ASSERT_EQ(u(l - 1, j - 1), expect) << "(" << l << "," << j << ")";
    }
  }
}

TEST(UMatrix, TruncationConsistency) {
  std::mt19937_64 rng(0);
  const PrimeField f5(5);
  for (int t = 0; t < 5; ++t) {
    const auto g = random_golden(f5, rng);
    const auto big = u_matrix(g, 20);
    const auto lbig = l_matrix(g, 20);
    for (std::size_t k = 1; k < 20; k += 3) {
      ASSERT_EQ(u_matrix(g, k), big.upper_left(k));
      ASSERT_EQ(l_matrix(g, k), lbig.upper_left(k));
    }
  }
}

TEST(UMatrix, TransposeOfLOverF2) {
  std::mt19937_64 rng(0);
  const PrimeField f2(2);
  for (int t = 0; t < 5; ++t) {
    const auto g = random_golden(f2, rng);
    EXPECT_EQ(l_matrix(g, 16).transpose(), u_matrix(g, 16));
  }
}

TEST(PMatrix, Examples) {
  const RationalField q;
  const PrimeField f3(3);
  EXPECT_EQ(p_matrix(3, q), from_rows(q, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(p_matrix(1, q), from_rows(q, {{1}}));
  EXPECT_EQ(p_matrix(8, q) * u_matrix(golden_xv(q, 1, 0), 8), Matrix<RationalField>::identity(q, 8));
  EXPECT_EQ(u_matrix(golden_xv(f3, 1, 0), 20) * p_matrix(20, f3), Matrix<PrimeField>::identity(f3, 20));
}

TEST(PMatrix, ColumnsAreFibonacciPolynomials) {
  const RationalField q;
  const auto p = p_matrix(12, q);
  const auto fib = fibonacci_polys(golden_xv(q, 1, 0), 11);
  for (std::size_t n = 0; n < 12; ++n) {
    for (std::size_t i = 0; i < 12; ++i) {
      const auto& c = fib[n].coefficients();
      ASSERT_EQ(p(i, n), i < c.size() ? c[i] : q.zero());
    }
  }
}

TEST(LuFactorization, PassesForGoldenSpecs) {
  const PrimeField f2(2);
  EXPECT_TRUE(verify_lu_factorization(golden_xv(f2, 1, 0), 8).passed());
  std::mt19937_64 rng(0);
  const PrimeField f5(5);
  for (int t = 0; t < 5; ++t) {
    auto g = random_golden(f5, rng, 2);
    const auto rep = verify_lu_factorization(g, 16);
    EXPECT_TRUE(rep.passed()) << rep.str();
  }
  EXPECT_TRUE(verify_lu_factorization(golden_xv(RationalField{}, 2, -1), 12).passed());
}

TEST(LuFactorization, CorruptedFactorIsReported) {
  const PrimeField f5(5);
  const auto g = golden_xv(f5, 1, 0);
  auto u = u_matrix(g, 8);
  u(2, 5) += f5.one();
  const auto rep = check_lu_factors(g, l_matrix(g, 8), u);
  EXPECT_FALSE(rep.passed());
  EXPECT_TRUE(rep.triangular);
  EXPECT_FALSE(rep.zeckendorf_columns);
  EXPECT_FALSE(rep.hankel_product && rep.generating_matrix);
  ASSERT_TRUE(rep.failing_cell.has_value());
  EXPECT_EQ(rep.failing_check, "zeckendorf");
  EXPECT_EQ(rep.failing_cell->str(), "(3,6)");
}

TEST(LuFactorization, LowerEntryBreaksTriangularity) {
  const PrimeField f3(3);
  const auto g = golden_xv(f3, 1, 1);
  auto u = u_matrix(g, 6);
  u(4, 1) = f3.one();
  const auto rep = check_lu_factors(g, l_matrix(g, 6), u);
  EXPECT_FALSE(rep.triangular);
  EXPECT_EQ(rep.failing_check, "triangular");
  EXPECT_EQ(rep.failing_cell->str(), "(5,2)");
}

TEST(CatalanIdentities, Examples) {
  EXPECT_TRUE(catalan_identity_check(0, 1));
  EXPECT_TRUE(catalan_identity_check(3, 4));
  for (std::int64_t i = 0; i <= 10; ++i) {
    for (std::int64_t k = 1; k <= 10; ++k) {
      ASSERT_TRUE(catalan_identity_check(i, k)) << i << "," << k;
      ASSERT_TRUE(catalan_identity_check(i, k, PrimeField(3)));
    }
  }
}

}  // namespace
}  // namespace golden
