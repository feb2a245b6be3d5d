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
#ifndef GOLDEN_TESTS_SUPPORT_HPP
#define GOLDEN_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "golden/golden.hpp"

namespace golden::testing {

inline std::vector<long long> ints(const std::vector<Fp>& xs) {
  std::vector<long long> out;
  for (const auto& x : xs) out.push_back(static_cast<long long>(x.value()));
  return out;
}

inline std::vector<std::string> strs(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

template <Field F>
Polynomial<F> poly(const F& field, std::vector<long long> c) {
  return Polynomial<F>::from_ints(field, c);
}

template <Field F>
GoldenSpec<F> golden_xv(const F& field, long long u, long long v) {
  return GoldenSpec<F>::constant(field, field.embed(u), field.embed(v));
}

/// Q_{r-1} L^2 + (Q_r - P_{r-1}) L - P_r, which vanishes for the value L of a
/// purely periodic continued fraction of period r. Computed with series
/// arithmetic only, independent of the convergent route to the expansion.
template <Field F>
LaurentSeries<F> periodic_residual(const GoldenSpec<F>& g, const LaurentSeries<F>& l) {
  const std::size_t r = g.period().size();
  const auto cv = convergents(g.to_cf(), r);
  const Polynomial<F> p_r = cv[r - 1].p;
  const Polynomial<F> q_r = cv[r - 1].q;
  const Polynomial<F> p_prev = r >= 2 ? cv[r - 2].p : Polynomial<F>(g.field());
  const Polynomial<F> q_prev = r >= 2 ? cv[r - 2].q : Polynomial<F>::constant(g.field(), g.field().one());
  const std::int64_t n = l.precision();
  auto sq = (l * l).times(q_prev);
  auto lin = l.times(q_r - p_prev);
  return sq + lin - LaurentSeries<F>::from_polynomial(p_r, n);
}

}  // namespace golden::testing

#endif  // GOLDEN_TESTS_SUPPORT_HPP
