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

#ifndef GOLDEN_SUITES_HPP
#define GOLDEN_SUITES_HPP

/// Parameterized verification suites shared by the acceptance runner and the
/// command-line `verify` command. Each returns pass/fail with a short detail.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "golden/golden.hpp"
#include "golden/random.hpp"

namespace golden {

struct SuiteResult {
  bool ok = true;
  std::string detail;

  /// Keeps the first failure message.
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void pass_detail(std::string d) {
    if (ok) detail = std::move(d);
  }
};

/// Field characteristics; 0 stands for Q.
using FieldList = std::vector<std::uint64_t>;

namespace detail {

template <Field F>
GoldenSpec<F> golden_const(const F& field, long long u, long long v) {
  return GoldenSpec<F>::constant(field, field.embed(u), field.embed(v));
}

template <typename Fn>
void for_each_field(const FieldList& fields, Fn&& fn) {
  for (auto p : fields) {
    if (p == 0) {
      fn(RationalField{});
    } else {
      fn(PrimeField(p));
    }
  }
}

inline std::string join_digits(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace detail

/// c_i of [0; overline{X}] over F_2 is 1 exactly at i = 2^n - 1.
inline SuiteResult char2_series_suite(std::int64_t n = 1024) {
  SuiteResult r;
  const auto l = cf_to_series(detail::golden_const(PrimeField(2), 1, 0), n);
  std::set<std::int64_t> ones;
  for (std::int64_t i = 2; i - 1 <= n; i *= 2) ones.insert(i - 1);
  for (std::int64_t i = 1; i <= n; ++i) {
    if (l.coefficient(i).value() != (ones.count(i) ? 1u : 0u)) {
      r.fail("c_" + std::to_string(i) + " wrong");
      break;
    }
  }
  r.pass_detail("c_i = 1 exactly at i = 2^n - 1, i <= " + std::to_string(n));
  return r;
}

inline SuiteResult lu_suite(const FieldList& fields, int count = 50, std::size_t k = 32, std::uint64_t seed = 0) {
  SuiteResult r;
  detail::for_each_field(fields, [&](const auto& field) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
      const auto g = random_golden(field, rng);
      const auto report = verify_lu_factorization(g, k);
      if (!report.passed()) r.fail(field.name() + " #" + std::to_string(t) + " " + report.str());
    }
  });
  r.pass_detail(std::to_string(count * static_cast<int>(fields.size())) + " random golden series, k = " +
                std::to_string(k) + ", four checks each");
  return r;
}

inline SuiteResult closed_forms_suite(const FieldList& fields, std::size_t n_max = 50, std::size_t m_max = 60) {
  SuiteResult r;
  detail::for_each_field(fields, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    FibonacciBasis<F> basis(detail::golden_const(field, 1, 0));
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (!(fib_closed_form(n, field) == basis[n])) r.fail(field.name() + " F_" + std::to_string(n));
    }
    for (std::size_t m = 0; m <= m_max; ++m) {
      const auto greedy = zeckendorf(Polynomial<F>::monomial(field, m, field.one()), basis);
      if (!(zeck_powers_closed_form(m, field).z == greedy.z)) r.fail(field.name() + " X^" + std::to_string(m));
    }
  });
  r.pass_detail("F_n for n <= " + std::to_string(n_max) + ", X^m for m <= " + std::to_string(m_max));
  return r;
}

inline SuiteResult catalan_identity_suite(std::int64_t i_max = 10, std::int64_t k_max = 10, std::size_t size = 64) {
  SuiteResult r;
  for (std::int64_t i = 0; i <= i_max; ++i) {
    for (std::int64_t k = 1; k <= k_max; ++k) {
      if (!catalan_identity_check(i, k)) r.fail("i=" + std::to_string(i) + " k=" + std::to_string(k));
    }
  }
  const RationalField q;
  if (!(p_matrix(size, q) * u_matrix(detail::golden_const(q, 1, 0), size) == Matrix<RationalField>::identity(q, size))) {
    r.fail("P U != I over Q");
  }
  const PrimeField f3(3);
  if (!(p_matrix(size, f3) * u_matrix(detail::golden_const(f3, 1, 0), size) == Matrix<PrimeField>::identity(f3, size))) {
    r.fail("P U != I over F3");
  }
  r.pass_detail("i <= " + std::to_string(i_max) + ", 1 <= k <= " + std::to_string(k_max) + "; P U = I at k = " +
                std::to_string(size) + " over Q, F3");
  return r;
}

inline SuiteResult catalan_mod_p_suite(std::uint64_t n_max = 5000) {
  SuiteResult r;
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t n = 0; n < n_max; ++n) {
      if (catalan_mod_p(n, p) != catalan_mod_p_lucas(n, p)) {
        r.fail("C_" + std::to_string(n) + " mod " + std::to_string(p));
        break;
      }
    }
  }
  for (auto [p, n] : std::vector<std::pair<std::uint64_t, std::int64_t>>{{3, 729}, {5, 625}}) {
    const auto l = cf_to_series(detail::golden_const(PrimeField(p), 1, 0), n);
    for (std::int64_t i = 1; i <= n; ++i) {
      if (!(phi_coefficient(static_cast<std::uint64_t>(i), p) == l.coefficient(i))) {
        r.fail("coefficient " + std::to_string(i) + " over F" + std::to_string(p));
        break;
      }
    }
  }
  const auto a = char3_pattern(729);
  const auto l3 = cf_to_series(detail::golden_const(PrimeField(3), 1, 0), 2 * 729);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != l3.coefficient(static_cast<std::int64_t>(2 * i + 1)).value()) {
      r.fail("char-3 pattern a_" + std::to_string(i));
      break;
    }
  }
  r.pass_detail("n < " + std::to_string(n_max) + " for p = 3, 5, 7; series to 729 (F3), 625 (F5); 729 pattern terms");
  return r;
}

inline SuiteResult phibar_suite(std::int64_t n = 512) {
  SuiteResult r;
  if (!(char2_phibar_series(n) == cf_to_series(detail::golden_const(PrimeField(2), 1, 1), n))) r.fail("series differ");
  r.pass_detail("N = " + std::to_string(n));
  return r;
}

inline SuiteResult binomial_suite(std::int64_t m_max = 12) {
  SuiteResult r;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const auto k = static_cast<std::size_t>(2 * m + 8);
    if (!verify_binomial_theorem(m, k, PrimeField(3))) r.fail("F3 m=" + std::to_string(m));
    if (!verify_binomial_theorem(m, k, PrimeField(5))) r.fail("F5 m=" + std::to_string(m));
    if (!verify_binomial_theorem(m, k, RationalField{})) r.fail("Q m=" + std::to_string(m));
  }
  for (std::uint64_t p : {3, 5}) {
    for (unsigned kexp : {1u, 2u}) {
      for (std::uint64_t l = 1; l < p; ++l) {
        const std::string tag = "p=" + std::to_string(p) + " k=" + std::to_string(kexp) + " l=" + std::to_string(l);
        if (!verify_prime_power_expansion(l, kexp, p)) r.fail("prime power " + tag);
        if (!verify_prime_power_expansion(l, kexp, p, Fp(1, p), Fp(0, p))) r.fail("(1,0) " + tag);
        if (!verify_prime_power_expansion(l, kexp, p, Fp(2, p), Fp(1, p))) r.fail("(2,1) " + tag);
      }
    }
  }
  r.pass_detail("m <= " + std::to_string(m_max) + " at k = 2m+8 over F3, F5, Q; p^k l powers for p = 3, 5");
  return r;
}

inline SuiteResult fractal_suite(unsigned kexp_max = 7) {
  SuiteResult r;
  for (unsigned k = 2; k <= kexp_max; ++k) {
    if (!verify_char2_fractal(k, Char2Variant::Phi)) r.fail("phi kexp=" + std::to_string(k));
    if (!verify_char2_fractal(k, Char2Variant::PhiBar)) r.fail("phibar kexp=" + std::to_string(k));
  }
  r.pass_detail("kexp = 2.." + std::to_string(kexp_max) + ", both series");
  return r;
}

/// The published block strings for p = 3 and p = 5, including the p = 5
/// multipliers 3, 3, 1.
inline SuiteResult blockwise_suite() {
  SuiteResult r;
  const auto r3 = blockwise_series(3, Fp(1, 3), Fp(0, 3), 2);
  const std::string s3 = detail::join_digits(r3.blocks[0]) + " " + detail::join_digits(r3.blocks[1]);
  if (s3 != "(1,0,2) (0,2,0)") r.fail("p=3 strings " + s3);
  const auto r5 = blockwise_series(5, Fp(1, 5), Fp(0, 5), 2);
  const std::string s5 = detail::join_digits(r5.blocks[0]) + " " + detail::join_digits(r5.blocks[1]);
  if (s5 != "(1,0,4,0,2) (0,0,0,4,0)") r.fail("p=5 strings " + s5);
  std::string got;
  for (std::size_t l = 2; l < 5; ++l) {
    got += (l > 2 ? "," : "") + (r5.multipliers[l] ? std::to_string(*r5.multipliers[l]) : std::string("none"));
  }
  if (got != "3,3,1") r.fail("p=5 multipliers expected 3,3,1, got " + got);
  if (!blockwise_series(3, Fp(1, 3), Fp(0, 3), 4).matches_u_matrix) r.fail("p=3 size 81 differs from U");
  if (!blockwise_series(5, Fp(1, 5), Fp(0, 5), 3).matches_u_matrix) r.fail("p=5 size 125 differs from U");
  r.pass_detail("strings, multipliers 3,3,1, U rows at 81 and 125");
  return r;
}

inline SuiteResult regularity_suite(const FieldList& fields, int count = 20, std::size_t k = 64, std::uint64_t seed = 0) {
  SuiteResult r;
  const auto n = static_cast<std::int64_t>(2 * k - 1);
  for (auto p : fields) {
    if (p == 0) {
      r.fail("regularity suite runs over prime fields");
      continue;
    }
    const PrimeField f(p);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
      const auto g = random_golden(f, rng);
      if (!is_regular(hankel_of_series(cf_to_series(g, n), k))) r.fail(f.name() + " #" + std::to_string(t));
    }
    for (std::size_t j = 1; j <= 5; ++j) {
      const auto g = random_golden(f, rng);
      std::vector<Polynomial<PrimeField>> pre;
      for (std::size_t i = 1; i < j; ++i) pre.push_back(g.to_cf().quotient(i));
      pre.push_back(Polynomial<PrimeField>::monomial(f, 2, f.one()) + Polynomial<PrimeField>::constant(f, f.one()));
      std::vector<Polynomial<PrimeField>> period;
      for (std::size_t i = j; i < j + g.period().size(); ++i) period.push_back(g.to_cf().quotient(i));
      const auto rep = leading_minors(hankel_of_series(cf_to_series(ContinuedFraction<PrimeField>(f, pre, period), n), k));
      if (rep.regular || rep.first_singular_minor != j) r.fail(f.name() + " degree-2 quotient at " + std::to_string(j));
    }
  }
  r.pass_detail(std::to_string(count * static_cast<int>(fields.size())) + " regular at k = " + std::to_string(k) +
                "; first singular minor = insertion index j <= 5");
  return r;
}

inline SuiteResult kronecker_suite(std::uint64_t route_count = 1024) {
  SuiteResult r;
  for (auto [p, m_max] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 6}, {3, 5}}) {
    const auto l = cf_to_series(detail::golden_const(PrimeField(p), 1, 0), 48);
    for (unsigned m = 1; m <= m_max; ++m) {
      if (!has_net_property(l, m)) r.fail("F" + std::to_string(p) + " m=" + std::to_string(m));
    }
    for (std::uint64_t n = 0; n < route_count; ++n) {
      if (point_via_series(n, l, 20).digits != point_via_matrix(n, l, 20).digits) {
        r.fail("routes differ over F" + std::to_string(p) + " at n=" + std::to_string(n));
        break;
      }
    }
  }
  r.pass_detail("nets for F2 m <= 6, F3 m <= 5; routes agree for n < " + std::to_string(route_count) + ", M = 20");
  return r;
}

inline SuiteResult roundtrip_suite(const FieldList& fields, int count = 50, std::int64_t n = 128,
                                   std::size_t min_quotients = 60, std::uint64_t seed = 0) {
  SuiteResult r;
  std::size_t fewest = static_cast<std::size_t>(n);
  detail::for_each_field(fields, [&](const auto& field) {
    std::mt19937_64 rng(seed);
    for (int t = 0; t < count; ++t) {
      const auto g = random_golden(field, rng);
      const auto e = series_to_cf(cf_to_series(g, n));
      fewest = std::min(fewest, e.certified_count);
      if (e.certified_count < min_quotients) r.fail("only " + std::to_string(e.certified_count) + " quotients certified");
      for (std::size_t i = 1; i <= e.certified_count; ++i) {
        if (!(e.cf.quotient(i) == g.to_cf().quotient(i))) {
          r.fail(field.name() + " quotient " + std::to_string(i) + " differs");
          break;
        }
      }
    }
  });
  r.pass_detail(std::to_string(count * static_cast<int>(fields.size())) + " series, at least " + std::to_string(fewest) +
                " quotients each");
  return r;
}

}  // namespace golden

#endif  // GOLDEN_SUITES_HPP
