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

// LU factors of the Hankel matrix of a golden ratio analog over F_5.

#include <iostream>

#include "golden/golden.hpp"
#include "golden/io.hpp"

int main() {
  using namespace golden;
  const PrimeField f5(5);
  const auto phi = GoldenSpec<PrimeField>::periodic(f5, {{f5.embed(2), f5.embed(1)}, {f5.one(), f5.embed(3)}});
  const std::size_t k = 8;

  std::cout << "U =\n" << format_matrix(u_matrix(phi, k));
  std::cout << "L =\n" << format_matrix(l_matrix(phi, k));
  std::cout << "checks: " << verify_lu_factorization(phi, k).str() << '\n';
  return 0;
}
