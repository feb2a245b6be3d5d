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

#ifndef GOLDEN_RANDOM_HPP
#define GOLDEN_RANDOM_HPP

/// Reproducible random golden ratio analogs for property sweeps.

#include <cstdint>
#include <random>
#include <vector>

#include "golden/contfrac.hpp"

namespace golden {

namespace detail {

// Modulo mapping keeps draws identical across standard libraries.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline LinearQuotient<PrimeField> random_quotient(const PrimeField& f, std::mt19937_64& rng) {
  const std::uint64_t p = f.characteristic();
  return {Fp(1 + draw_below(rng, p - 1), p), Fp(draw_below(rng, p), p)};
}

inline LinearQuotient<RationalField> random_quotient(const RationalField&, std::mt19937_64& rng) {
  static constexpr long long kU[] = {1, -1, 2, -2, 3, -3};
  const long long u = kU[draw_below(rng, 6)];
  const long long v = static_cast<long long>(draw_below(rng, 7)) - 3;
  return {Rational(u), Rational(v)};
}

}  // namespace detail

/// Purely periodic [0; overline{A_1, ..., A_r}] with 1 <= r <= max_period.
/// Over F_p: u uniform in F_p^*, v uniform in F_p. Over Q: u in {+-1, +-2, +-3},
/// v in {-3, ..., 3}.
template <Field F>
GoldenSpec<F> random_golden(const F& field, std::mt19937_64& rng, std::size_t max_period = 3) {
  if (max_period == 0) throw DomainError("random_golden needs max_period >= 1");
  const std::size_t r = 1 + static_cast<std::size_t>(detail::draw_below(rng, max_period));
  std::vector<LinearQuotient<F>> period;
  for (std::size_t i = 0; i < r; ++i) period.push_back(detail::random_quotient(field, rng));
  return GoldenSpec<F>::periodic(field, std::move(period));
}

}  // namespace golden

#endif  // GOLDEN_RANDOM_HPP
