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

// First points of the Kronecker-type sequence of [0; overline{X}] over F_2
// with their exact star discrepancy.

#include <iostream>
#include <vector>

#include "golden/golden.hpp"

int main() {
  using namespace golden;
  const PrimeField f2(2);
  const auto series = cf_to_series(GoldenSpec<PrimeField>::constant(f2, f2.one(), f2.zero()), 40);
  const std::uint64_t count = 16;
  const auto points = kronecker_points(series, count, default_digit_depth(count, 2));

  std::vector<mpq_class> values;
  for (const auto& pt : points) {
    std::cout << pt.n << '\t' << pt.value.get_str() << '\t' << pt.decimal(6) << '\n';
    values.push_back(pt.value);
  }
  std::cout << "D*_" << count << " = " << star_discrepancy(values).get_str() << '\n';
  return 0;
}
