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

#ifndef GOLDEN_HANKEL_HPP
#define GOLDEN_HANKEL_HPP

/// Hankel matrices of Laurent series and the LU factorization of the
/// generating matrix of a golden ratio analog.
///
/// All matrices are finite truncations with 1-based semantics in the docs and
/// 0-based indexing in code.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "golden/catalan.hpp"
#include "golden/contfrac.hpp"
#include "golden/fibzeck.hpp"
#include "golden/laurent.hpp"
#include "golden/matrix.hpp"

namespace golden {

/// rows x cols slice of M_L: m_{i,j} = c_{i+j-1}.
template <Field F>
Matrix<F> hankel_slice(const LaurentSeries<F>& series, std::size_t rows, std::size_t cols) {
  const auto needed = static_cast<std::int64_t>(rows + cols) - 1;
  if (series.precision() < needed) {
    throw PrecisionError("Hankel slice " + std::to_string(rows) + "x" + std::to_string(cols) + " needs precision " +
                         std::to_string(needed) + ", series has " + std::to_string(series.precision()));
  }
  if (!series.is_zero() && series.start() < 1) throw DomainError("Hankel matrix needs a series with valuation <= -1");
  Matrix<F> m(series.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = series.coefficient(static_cast<std::int64_t>(i + j + 1));
  }
  return m;
}

/// k x k truncation of M_L; needs precision >= 2k - 1.
template <Field F>
Matrix<F> hankel_of_series(const LaurentSeries<F>& series, std::size_t k) {
  return hankel_slice(series, k, k);
}

/// First cell (i, j) with m_{i,j} != m_{i+1,j-1}, if any.
template <Field F>
std::optional<Cell> hankel_defect(const Matrix<F>& m) {
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    for (std::size_t j = 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(i + 1, j - 1))) return Cell{i, j};
    }
  }
  return std::nullopt;
}

template <Field F>
bool is_hankel(const Matrix<F>& m) {
  return !hankel_defect(m).has_value();
}

struct RegularityReport {
  bool regular = true;
  /// 1-based size of the first vanishing leading principal minor.
  std::optional<std::size_t> first_singular_minor;
};

/// Leading principal minors by elimination without pivoting: the s-th minor
/// is the product of the first s pivots, so the first zero pivot is the
/// first singular minor.
template <Field F>
RegularityReport leading_minors(const Matrix<F>& m) {
  if (!m.is_square()) throw DomainError("leading minors need a square matrix");
  Matrix<F> a = m;
  const std::size_t k = a.rows();
  for (std::size_t s = 0; s < k; ++s) {
    if (a(s, s).is_zero()) return {false, s + 1};
    const auto inv = a(s, s).inverse();
    for (std::size_t i = s + 1; i < k; ++i) {
      if (a(i, s).is_zero()) continue;
      const auto f = a(i, s) * inv;
      for (std::size_t j = s; j < k; ++j) a(i, j) -= f * a(s, j);
    }
  }
  return {true, std::nullopt};
}

template <Field F>
bool is_regular(const Matrix<F>& m) {
  return leading_minors(m).regular;
}

/// [R_phi]_k: (j+1, j) = u_j^{-1}, (j, j) = -v_j u_j^{-1}, (j-1, j) = -u_j^{-1}.
template <Field F>
Matrix<F> r_matrix(const GoldenSpec<F>& phi, std::size_t k) {
  Matrix<F> r(phi.field(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto& q = phi.at(j + 1);
    const auto inv = q.u.inverse();
    r(j, j) = -(q.v * inv);
    if (j + 1 < k) r(j + 1, j) = inv;
    if (j >= 1) r(j - 1, j) = -inv;
  }
  return r;
}

/// [B_phi]_k: R_phi = B_phi D_phi with D_phi = diag(u_1^{-1}, u_2^{-1}, ...).
template <Field F>
Matrix<F> b_matrix(const GoldenSpec<F>& phi, std::size_t k) {
  Matrix<F> b(phi.field(), k, k);
  for (std::size_t j = 0; j < k; ++j) {
    b(j, j) = -phi.at(j + 1).v;
    if (j + 1 < k) b(j + 1, j) = phi.field().one();
    if (j >= 1) b(j - 1, j) = -phi.field().one();
  }
  return b;
}

template <Field F>
Matrix<F> d_matrix(const GoldenSpec<F>& phi, std::size_t k) {
  Matrix<F> d(phi.field(), k, k);
  for (std::size_t j = 0; j < k; ++j) d(j, j) = phi.at(j + 1).u.inverse();
  return d;
}

/// [U_phi]_k: column 1 is e_1, column n+1 is R_phi times column n. Column n
/// is supported in rows 1..n, so size-k arithmetic is already exact.
template <Field F>
Matrix<F> u_matrix(const GoldenSpec<F>& phi, std::size_t k) {
  const Matrix<F> r = r_matrix(phi, k);
  Matrix<F> u(phi.field(), k, k);
  std::vector<Elem<F>> col(k, phi.field().zero());
  col[0] = phi.field().one();
  for (std::size_t n = 0; n < k; ++n) {
    if (n > 0) col = r * col;
    for (std::size_t i = 0; i < k; ++i) u(i, n) = col[i];
  }
  return u;
}

/// [L_phi]_k: row 1 is e_1, row n+1 is row n times R_phi.
template <Field F>
Matrix<F> l_matrix(const GoldenSpec<F>& phi, std::size_t k) {
  const Matrix<F> rt = r_matrix(phi, k).transpose();
  Matrix<F> l(phi.field(), k, k);
  std::vector<Elem<F>> row(k, phi.field().zero());
  row[0] = phi.field().one();
  for (std::size_t n = 0; n < k; ++n) {
    if (n > 0) row = rt * row;
    for (std::size_t j = 0; j < k; ++j) l(n, j) = row[j];
  }
  return l;
}

/// [P]_k, the inverse of U for [0; overline{X}]: column n holds the
/// coefficients of F_{n-1}(X), entry (i, l) = C((l+i)/2 - 1, (l-i)/2) when
/// l - i is even and >= 0.
template <Field F>
Matrix<F> p_matrix(std::size_t k, const F& field) {
  Matrix<F> p(field, k, k);
  for (std::size_t l = 1; l <= k; ++l) {
    for (std::size_t i = 1; i <= l; i += 1) {
      if ((l - i) % 2 != 0) continue;
      const auto top = static_cast<std::int64_t>((l + i) / 2) - 1;
      p(i - 1, l - 1) = field.embed(binomial(top, static_cast<std::int64_t>((l - i) / 2)));
    }
  }
  return p;
}

/// Outcome of the four checks on [L]_k, [U]_k. `failing_check` is one of
/// "triangular", "zeckendorf", "hankel", "generating-matrix" or empty.
struct LuReport {
  bool triangular = false;
  bool zeckendorf_columns = false;
  bool hankel_product = false;
  bool generating_matrix = false;
  std::string failing_check;
  std::optional<Cell> failing_cell;

  bool passed() const { return triangular && zeckendorf_columns && hankel_product && generating_matrix; }

  std::string str() const {
    if (passed()) return "pass";
    std::string s = "fail: " + failing_check;
    if (failing_cell) s += " at " + failing_cell->str();
    return s;
  }
};

/// Checks given factors of size k against phi; the series side is computed
/// independently from the continued fraction.
template <Field F>
LuReport check_lu_factors(const GoldenSpec<F>& phi, const Matrix<F>& l, const Matrix<F>& u) {
  const std::size_t k = u.rows();
  LuReport rep;
  auto fail = [&rep](const char* which, Cell c) {
    if (rep.failing_check.empty()) {
      rep.failing_check = which;
      rep.failing_cell = c;
    }
  };

  rep.triangular = true;
  for (std::size_t i = 0; i < k && rep.triangular; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const bool bad = (i == j) ? (l(i, j).is_zero() || u(i, j).is_zero())
                                : (j > i ? !l(i, j).is_zero() : !u(i, j).is_zero());
      if (bad) {
        rep.triangular = false;
        fail("triangular", Cell{i, j});
        break;
      }
    }
  }

  rep.zeckendorf_columns = true;
  FibonacciBasis<F> basis(phi);
  for (std::size_t n = 0; n < k && rep.zeckendorf_columns; ++n) {
    const auto rep_n = zeckendorf(Polynomial<F>::monomial(phi.field(), n, phi.field().one()), basis);
    for (std::size_t i = 0; i < k; ++i) {
      const Elem<F> expect = i < rep_n.z.size() ? rep_n.z[i] : phi.field().zero();
      if (!(u(i, n) == expect)) {
        rep.zeckendorf_columns = false;
        fail("zeckendorf", Cell{i, n});
        break;
      }
    }
  }

  const Matrix<F> lu = l * u;
  const auto defect = hankel_defect(lu);
  rep.hankel_product = !defect.has_value();
  if (defect) fail("hankel", *defect);

  const Matrix<F> m = hankel_of_series(cf_to_series(phi, static_cast<std::int64_t>(2 * k - 1)), k);
  const auto diff = first_difference(lu.scaled(phi.at(1).u.inverse()), m);
  rep.generating_matrix = !diff.has_value();
  if (diff) fail("generating-matrix", *diff);
  return rep;
}

template <Field F>
LuReport verify_lu_factorization(const GoldenSpec<F>& phi, std::size_t k) {
  if (k < 2) throw DomainError("verify_lu_factorization needs k >= 2");
  return check_lu_factors(phi, l_matrix(phi, k), u_matrix(phi, k));
}

/// Both alternating sums over Catalan triangle numbers vanish in exact integers:
///   sum_{r=0}^{k} (-1)^{k-r} C(i+r, r) B_{i+2k+1, k-r}
///   sum_{r=0}^{k} (-1)^r B_{i+2r+1, r} C(i+k+r, k-r)
inline bool catalan_identity_check(std::int64_t i, std::int64_t k) {
  if (i < 0 || k < 1) throw DomainError("catalan_identity_check needs i >= 0, k >= 1");
  mpz_class first = 0;
  mpz_class second = 0;
  for (std::int64_t r = 0; r <= k; ++r) {
    const mpz_class a = binomial(i + r, r) * catalan_triangle_B(i + 2 * k + 1, k - r);
    first += ((k - r) % 2 == 0) ? a : mpz_class(-a);
    const mpz_class b = catalan_triangle_B(i + 2 * r + 1, r) * binomial(i + k + r, k - r);
    second += (r % 2 == 0) ? b : mpz_class(-b);
  }
  return first == 0 && second == 0;
}

/// The same sums reduced into a field.
template <Field F>
bool catalan_identity_check(std::int64_t i, std::int64_t k, const F& field) {
  if (i < 0 || k < 1) throw DomainError("catalan_identity_check needs i >= 0, k >= 1");
  Elem<F> first = field.zero();
  Elem<F> second = field.zero();
  for (std::int64_t r = 0; r <= k; ++r) {
    const Elem<F> a = field.embed(binomial(i + r, r)) * field.embed(catalan_triangle_B(i + 2 * k + 1, k - r));
    first += ((k - r) % 2 == 0) ? a : -a;
    const Elem<F> b = field.embed(catalan_triangle_B(i + 2 * r + 1, r)) * field.embed(binomial(i + k + r, k - r));
    second += (r % 2 == 0) ? b : -b;
  }
  return first.is_zero() && second.is_zero();
}

}  // namespace golden

#endif  // GOLDEN_HANKEL_HPP
