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

#ifndef GOLDEN_FIBZECK_HPP
#define GOLDEN_FIBZECK_HPP

/// Fibonacci polynomials of a golden ratio analog and the greedy
/// Zeckendorf-type representation of polynomials in that basis.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "golden/binomial.hpp"
#include "golden/contfrac.hpp"
#include "golden/field.hpp"
#include "golden/poly.hpp"

namespace golden {

/// F_{-1} = 0, F_0 = 1, F_n = A_n F_{n-1} + F_{n-2} for phi = [0; A_1, A_2, ...],
/// grown on demand together with the leading coefficients f_n = lc(F_n).
/// Not safe for concurrent growth; give each task its own basis.
template <Field F>
class FibonacciBasis {
 public:
  explicit FibonacciBasis(GoldenSpec<F> phi)
      : phi_(std::move(phi)), polys_{Polynomial<F>::constant(phi_.field(), phi_.field().one())},
        leading_{phi_.field().one()} {}

  const GoldenSpec<F>& phi() const noexcept { return phi_; }

  void ensure(std::size_t n) {
    while (polys_.size() <= n) {
      const std::size_t i = polys_.size();
      const auto& q = phi_.at(i);
      Polynomial<F> prev2 = i >= 2 ? polys_[i - 2] : Polynomial<F>(phi_.field());
      polys_.push_back(Polynomial<F>::linear(phi_.field(), q.u, q.v) * polys_[i - 1] + prev2);
      leading_.push_back(polys_.back().leading_coefficient());
    }
  }

  const Polynomial<F>& operator[](std::size_t n) {
    ensure(n);
    return polys_[n];
  }

  const Elem<F>& leading(std::size_t n) {
    ensure(n);
    return leading_[n];
  }

 private:
  GoldenSpec<F> phi_;
  std::vector<Polynomial<F>> polys_;
  std::vector<Elem<F>> leading_;
};

/// [F_0, ..., F_n].
template <Field F>
std::vector<Polynomial<F>> fibonacci_polys(const GoldenSpec<F>& phi, std::size_t n) {
  FibonacciBasis<F> basis(phi);
  basis.ensure(n);
  std::vector<Polynomial<F>> out;
  for (std::size_t i = 0; i <= n; ++i) out.push_back(basis[i]);
  return out;
}

/// F_n for phi = [0; overline{X}]: sum_m C(n-m, m) X^{n-2m}.
template <Field F>
Polynomial<F> fib_closed_form(std::size_t n, const F& field) {
  std::vector<Elem<F>> c(n + 1, field.zero());
  const auto nn = static_cast<std::int64_t>(n);
  for (std::int64_t m = 0; 2 * m <= nn; ++m) c[n - 2 * m] = field.embed(binomial(nn - m, m));
  return Polynomial<F>(field, std::move(c));
}

/// Coefficients z_0..z_r with P = sum z_i F_i.
template <Field F>
struct ZeckendorfRep {
  std::vector<Elem<F>> z;

  /// Least j with z_j != 0.
  std::size_t lowest_nonzero() const {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (!z[j].is_zero()) return j;
    }
    throw DomainError("empty Zeckendorf representation");
  }

  friend bool operator==(const ZeckendorfRep&, const ZeckendorfRep&) = default;
};

/// sum z_i F_i; the empty representation gives the zero polynomial.
template <Field F>
Polynomial<F> reconstruct(const ZeckendorfRep<F>& rep, FibonacciBasis<F>& basis) {
  Polynomial<F> out(basis.phi().field());
  for (std::size_t i = 0; i < rep.z.size(); ++i) {
    if (!rep.z[i].is_zero()) out += basis[i].scaled(rep.z[i]);
  }
  return out;
}

/// Greedy leading-coefficient elimination against F_r, F_{r-1}, ..., F_0.
template <Field F>
ZeckendorfRep<F> zeckendorf(const Polynomial<F>& p, FibonacciBasis<F>& basis) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no Zeckendorf representation");
  const auto r = static_cast<std::size_t>(p.degree().value());
  basis.ensure(r);
  std::vector<Elem<F>> z(r + 1, p.field().zero());
  Polynomial<F> rest = p;
  for (std::size_t i = r + 1; i-- > 0;) {
    if (!(rest.degree() == static_cast<std::int64_t>(i))) continue;
    z[i] = rest.leading_coefficient() * basis.leading(i).inverse();
    rest -= basis[i].scaled(z[i]);
  }
  return {std::move(z)};
}

template <Field F>
ZeckendorfRep<F> zeckendorf(const Polynomial<F>& p, const GoldenSpec<F>& phi) {
  FibonacciBasis<F> basis(phi);
  return zeckendorf(p, basis);
}

/// Representation of X^m for phi = [0; overline{X}]: z_m = 1,
/// z_{m-2k} = (-1)^k (C(m,k) - C(m,k-1)), all other entries 0.
template <Field F>
ZeckendorfRep<F> zeck_powers_closed_form(std::size_t m, const F& field) {
  std::vector<Elem<F>> z(m + 1, field.zero());
  z[m] = field.one();
  const auto mm = static_cast<std::int64_t>(m);
  for (std::int64_t k = 1; 2 * k <= mm; ++k) {
    mpz_class value = binomial(mm, k) - binomial(mm, k - 1);
    if (k % 2 == 1) value = -value;
    z[m - 2 * k] = field.embed(value);
  }
  return {std::move(z)};
}

/// nu_inf({n(X) phi}) = -j - 1 with j the least index of a nonzero Zeckendorf
/// coefficient of n(X). The value is confirmed against the series of phi
/// expanded to the given precision.
template <Field F>
std::int64_t zeck_valuation(const Polynomial<F>& n_poly, const GoldenSpec<F>& phi, std::int64_t precision) {
  const std::int64_t predicted = -static_cast<std::int64_t>(zeckendorf(n_poly, phi).lowest_nonzero()) - 1;
  LaurentSeries<F> frac = cf_to_series(phi, precision).times(n_poly).fractional_part();
  if (frac.is_zero()) {
    throw PrecisionError("precision " + std::to_string(precision) + " too small to confirm the valuation of {n(X) phi}");
  }
  if (!(frac.valuation() == predicted)) {
    throw Error("verification", "series valuation " + frac.valuation().str() + " disagrees with Zeckendorf value " +
                                    std::to_string(predicted));
  }
  return predicted;
}

}  // namespace golden

#endif  // GOLDEN_FIBZECK_HPP
