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

#ifndef GOLDEN_BINOMIAL_HPP
#define GOLDEN_BINOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>

namespace golden {

/// Exact C(n, k) with C(n, k) = 0 whenever n < k or k < 0 (and for n < 0).
inline mpz_class binomial(std::int64_t n, std::int64_t k) {
  mpz_class out;
  if (n < 0 || k < 0 || k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace golden

#endif  // GOLDEN_BINOMIAL_HPP
