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

#ifndef GOLDEN_ERROR_HPP
#define GOLDEN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace golden {

// Base of every error raised by the library. The CLI maps these to exit
// code 1; ParseError is the exception and maps to a usage error.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error("field-mismatch", what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error("division-by-zero", what) {}
};

// Requested coefficients lie beyond the certified precision of a series.
class PrecisionError : public Error {
 public:
  explicit PrecisionError(const std::string& what) : Error("precision", what) {}
};

// A precondition on a mathematical argument was violated.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Malformed textual input (polynomial, series or field spec).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

}  // namespace golden

#endif  // GOLDEN_ERROR_HPP
