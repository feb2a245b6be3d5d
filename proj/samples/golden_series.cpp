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

// Expands [0; overline{X}] over F_2 and F_3, then reads the continued
// fraction back from the truncated series.

#include <iostream>

#include "golden/golden.hpp"
#include "golden/io.hpp"

int main() {
  using namespace golden;
  for (std::uint64_t p : {2, 3}) {
    const PrimeField field(p);
    const auto phi = GoldenSpec<PrimeField>::constant(field, field.one(), field.zero());
    const auto series = cf_to_series(phi, 24);
    std::cout << field.name() << ": " << join_elements(series.coefficients(1, 24)) << '\n';

    const auto back = series_to_cf(series);
    std::cout << "  " << back.certified_count << " quotients certified, first "
              << format_polynomial(back.cf.quotient(1)) << '\n';
  }
  return 0;
}
