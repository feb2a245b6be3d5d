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

#ifndef GOLDEN_DEGREE_HPP
#define GOLDEN_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "golden/error.hpp"

namespace golden {

/// An integer extended by -infinity. Used for polynomial degrees
/// (deg 0 = -inf) and for the degree valuation of Laurent series.
class Degree {
 public:
  constexpr explicit Degree(std::int64_t d) : d_(d) {}

  static constexpr Degree minus_infinity() { return Degree(kMinusInf, Tag{}); }

  constexpr bool is_minus_infinity() const noexcept { return d_ == kMinusInf; }

  std::int64_t value() const {
    if (is_minus_infinity()) throw DomainError("degree is -infinity");
    return d_;
  }

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;
  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr bool operator==(const Degree& a, std::int64_t b) { return a.d_ == b && !a.is_minus_infinity(); }

  std::string str() const { return is_minus_infinity() ? "-inf" : std::to_string(d_); }
  friend std::ostream& operator<<(std::ostream& os, const Degree& d) { return os << d.str(); }

 private:
  struct Tag {};
  static constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t d, Tag) : d_(d) {}

  std::int64_t d_;
};

}  // namespace golden

#endif  // GOLDEN_DEGREE_HPP
