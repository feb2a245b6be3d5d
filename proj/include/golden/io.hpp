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

#ifndef GOLDEN_IO_HPP
#define GOLDEN_IO_HPP

/// Text, JSON and plain PGM renderings of series and matrices.
///
/// JSON carries field-tagged exact values: integers in [0, p) over F_p and
/// "n" or "n/d" strings over Q. No floats are ever emitted.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "golden/field.hpp"
#include "golden/laurent.hpp"
#include "golden/matrix.hpp"
#include "json.hpp"

namespace golden {

inline nlohmann::json to_json_value(const Fp& x) { return x.value(); }
inline nlohmann::json to_json_value(const Rational& x) { return x.str(); }

inline Fp from_json_value(const PrimeField& f, const nlohmann::json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) return f.embed(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  throw ParseError("expected an integer for " + f.name());
}

inline Rational from_json_value(const RationalField& f, const nlohmann::json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.embed(j.get<long long>());
  throw ParseError("expected a \"n/d\" string for Q");
}

/// Comma-separated elements.
template <typename T>
std::string join_elements(const std::vector<T>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i].str();
  }
  return s;
}

/// "start=u; coeffs=c_u,...; precision=N".
template <Field F>
std::string format_series(const LaurentSeries<F>& s) {
  return "start=" + std::to_string(s.start()) + "; coeffs=" + join_elements(s.stored_coefficients()) +
         "; precision=" + std::to_string(s.precision());
}

template <Field F>
nlohmann::json series_to_json(const LaurentSeries<F>& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.stored_coefficients()) coeffs.push_back(to_json_value(c));
  return {{"field", s.field().name()}, {"start", s.start()}, {"coeffs", coeffs}, {"precision", s.precision()}};
}

template <Field F>
LaurentSeries<F> series_from_json(const F& field, const nlohmann::json& j) {
  try {
    if (j.at("field").get<std::string>() != field.name()) {
      throw FieldMismatch("series over " + j.at("field").get<std::string>() + ", expected " + field.name());
    }
    std::vector<Elem<F>> c;
    for (const auto& x : j.at("coeffs")) c.push_back(from_json_value(field, x));
    return LaurentSeries<F>(field, j.at("start").get<std::int64_t>(), std::move(c), j.at("precision").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

/// Rows of space-separated entries.
template <Field F>
std::string format_matrix(const Matrix<F>& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j).str();
    }
    out << '\n';
  }
  return out.str();
}

template <Field F>
nlohmann::json matrix_to_json(const Matrix<F>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json_value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"field", m.field().name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <Field F>
Matrix<F> matrix_from_json(const F& field, const nlohmann::json& j) {
  try {
    if (j.at("field").get<std::string>() != field.name()) throw FieldMismatch("matrix over another field");
    Matrix<F> m(field, j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const auto& e = j.at("entries");
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = from_json_value(field, e.at(i).at(k));
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

/// Plain PGM (P2), maxval 255, entry e drawn as e * floor(255 / (p - 1)).
inline void write_pgm(std::ostream& out, const std::vector<std::vector<std::uint64_t>>& pixels, std::uint64_t p) {
  if (p < 2) throw DomainError("PGM rendering needs a prime field");
  const std::uint64_t scale = 255 / (p - 1);
  const std::size_t height = pixels.size();
  const std::size_t width = height ? pixels[0].size() : 0;
  out << "P2\n" << width << ' ' << height << "\n255\n";
  for (const auto& row : pixels) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ' ';
      out << row[j] * scale;
    }
    out << '\n';
  }
}

inline void write_pgm(std::ostream& out, const Matrix<PrimeField>& m) {
  std::vector<std::vector<std::uint64_t>> px(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) px[i][j] = m(i, j).value();
  }
  write_pgm(out, px, m.field().characteristic());
}

inline void write_pgm(std::ostream&, const Matrix<RationalField>&) {
  throw DomainError("PGM output needs a prime field; use text or JSON output for matrices over Q");
}

}  // namespace golden

#endif  // GOLDEN_IO_HPP
