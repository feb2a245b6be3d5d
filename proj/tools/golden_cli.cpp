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

// golden: command-line front end to the library.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "golden/golden.hpp"
#include "golden/io.hpp"
#include "golden/suites.hpp"

namespace {

using namespace golden;
using json = nlohmann::json;

struct Options {
  std::string field = "Q";
  bool json = false;
  std::uint64_t seed = 0;
  std::string output;

  std::string phi_u = "1";
  std::string phi_v;
  std::string pre_u;
  std::string pre_v;

  std::string preperiod;
  std::string period;
  std::string coeffs;
  std::string poly;

  std::int64_t n = 32;
  std::size_t k = 16;
  std::size_t m_digits = 0;
  std::int64_t m = 12;
  std::uint64_t p = 3;
  unsigned kexp = 2;

  std::string emit = "U";
  std::string what = "U";
  std::string suite = "all";
  bool check = false;
  bool pgm = false;
  bool csv = false;
  bool signed_values = false;
  bool emit_blocks = false;
  bool discrepancy = false;
};

using AnyField = std::variant<PrimeField, RationalField>;

AnyField make_field(const std::string& spec) {
  if (spec == "Q" || spec == "q") return RationalField{};
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw ParseError("field must be a prime or Q, got '" + spec + "'");
  }
  return PrimeField(p);
}

const PrimeField& require_prime(const AnyField& f, const std::string& command) {
  if (const auto* p = std::get_if<PrimeField>(&f)) return *p;
  throw DomainError(command + " needs a prime field");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

template <Field F>
std::vector<Elem<F>> parse_elements(const F& field, const std::string& text) {
  std::vector<Elem<F>> out;
  if (text.empty()) return out;
  for (const auto& token : split(text, ',')) out.push_back(field.parse(token));
  return out;
}

template <Field F>
std::vector<Polynomial<F>> parse_quotients(const F& field, const std::string& text) {
  std::vector<Polynomial<F>> out;
  if (text.empty()) return out;
  for (const auto& token : split(text, ';')) out.push_back(parse_polynomial(field, token));
  return out;
}

template <Field F>
std::vector<LinearQuotient<F>> parse_linear(const F& field, const std::string& us, const std::string& vs) {
  const auto u = parse_elements(field, us);
  auto v = parse_elements(field, vs);
  if (v.empty()) v.assign(u.size(), field.zero());
  if (u.size() != v.size()) throw ParseError("u and v lists differ in length");
  std::vector<LinearQuotient<F>> out;
  for (std::size_t i = 0; i < u.size(); ++i) out.push_back({u[i], v[i]});
  return out;
}

template <Field F>
GoldenSpec<F> parse_golden(const F& field, const Options& o) {
  return GoldenSpec<F>(field, parse_linear(field, o.pre_u, o.pre_v), parse_linear(field, o.phi_u, o.phi_v));
}

template <Field F>
std::string join_polys(const std::vector<Polynomial<F>>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ";" : "") + format_polynomial(ps[i]);
  return s;
}

template <Field F>
json poly_json(const Polynomial<F>& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json_value(c));
  return a;
}

template <Field F>
void emit_matrix(const Matrix<F>& mat, const Options& o, std::ostream& out) {
  if (o.pgm) {
    write_pgm(out, mat);
  } else if (o.json) {
    out << matrix_to_json(mat).dump() << '\n';
  } else {
    out << format_matrix(mat);
  }
}

template <Field F>
void cmd_cf2series(const F& field, const Options& o, std::ostream& out) {
  LaurentSeries<F> series = LaurentSeries<F>::zero(field, o.n);
  if (!o.preperiod.empty() || !o.period.empty()) {
    series = cf_to_series(ContinuedFraction<F>(field, parse_quotients(field, o.preperiod), parse_quotients(field, o.period)), o.n);
  } else {
    series = cf_to_series(parse_golden(field, o), o.n);
  }
  if (o.json) {
    out << series_to_json(series).dump() << '\n';
  } else {
    out << join_elements(series.coefficients(1, o.n)) << '\n';
  }
}

template <Field F>
void cmd_series2cf(const F& field, const Options& o, std::ostream& out) {
  const auto e = series_to_cf(LaurentSeries<F>::from_fractional_coefficients(field, parse_elements(field, o.coeffs)));
  if (o.json) {
    json q = json::array();
    for (const auto& a : e.cf.preperiod()) q.push_back(poly_json(a));
    out << json{{"field", field.name()},
                {"quotients", q},
                {"certified", e.certified_count},
                {"rational_within_precision", e.rational_within_precision},
                {"remaining_precision", e.remaining_precision}}
               .dump()
        << '\n';
    return;
  }
  out << "quotients=" << join_polys(e.cf.preperiod()) << '\n';
  out << "certified=" << e.certified_count << '\n';
  out << "rational_within_precision=" << (e.rational_within_precision ? "true" : "false") << '\n';
  out << "remaining_precision=" << e.remaining_precision << '\n';
}

template <Field F>
void cmd_fib(const F& field, const Options& o, std::ostream& out) {
  if (o.n < 0) throw DomainError("fib needs n >= 0");
  const auto fs = fibonacci_polys(parse_golden(field, o), static_cast<std::size_t>(o.n));
  if (o.json) {
    json a = json::array();
    for (const auto& f : fs) a.push_back(poly_json(f));
    out << json{{"field", field.name()}, {"fibonacci", a}}.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < fs.size(); ++i) out << "F" << i << " = " << format_polynomial(fs[i]) << '\n';
}

template <Field F>
void cmd_zeck(const F& field, const Options& o, std::ostream& out) {
  const auto rep = zeckendorf(parse_polynomial(field, o.poly), parse_golden(field, o));
  if (o.json) {
    json z = json::array();
    for (const auto& c : rep.z) z.push_back(to_json_value(c));
    out << json{{"field", field.name()}, {"z", z}}.dump() << '\n';
  } else {
    out << join_elements(rep.z) << '\n';
  }
}

template <Field F>
Matrix<F> generating_matrix(const GoldenSpec<F>& g, std::size_t k) {
  return hankel_of_series(cf_to_series(g, static_cast<std::int64_t>(2 * k)), k);
}

template <Field F>
Matrix<F> named_matrix(const std::string& what, const GoldenSpec<F>& g, std::size_t k) {
  if (what == "U") return u_matrix(g, k);
  if (what == "L") return l_matrix(g, k);
  if (what == "R") return r_matrix(g, k);
  if (what == "M") return generating_matrix(g, k);
  if (what == "P") return p_matrix(k, g.field());
  throw ParseError("unknown matrix '" + what + "', expected U, L, R, M or P");
}

template <Field F>
int cmd_lu(const F& field, const Options& o, std::ostream& out) {
  const auto g = parse_golden(field, o);
  if (o.check) {
    const auto report = verify_lu_factorization(g, o.k);
    if (o.json) {
      json j = {{"field", field.name()},
                {"k", o.k},
                {"triangular", report.triangular},
                {"zeckendorf_columns", report.zeckendorf_columns},
                {"hankel_product", report.hankel_product},
                {"generating_matrix", report.generating_matrix},
                {"passed", report.passed()}};
      if (report.failing_cell) j["failing_cell"] = report.failing_cell->str();
      out << j.dump() << '\n';
    } else {
      out << report.str() << '\n';
    }
    return report.passed() ? 0 : 1;
  }
  emit_matrix(named_matrix(o.emit, g, o.k), o, out);
  return 0;
}

template <Field F>
void cmd_hankel(const F& field, const Options& o, std::ostream& out) {
  const auto series = o.coeffs.empty()
                          ? cf_to_series(parse_golden(field, o), static_cast<std::int64_t>(2 * o.k))
                          : LaurentSeries<F>::from_fractional_coefficients(field, parse_elements(field, o.coeffs));
  const auto h = hankel_of_series(series, o.k);
  const auto rep = leading_minors(h);
  if (o.json) {
    json j = matrix_to_json(h);
    j["regular"] = rep.regular;
    if (!rep.regular) j["first_singular_minor"] = *rep.first_singular_minor;
    out << j.dump() << '\n';
    return;
  }
  if (o.pgm) {
    write_pgm(out, h);
    return;
  }
  out << format_matrix(h);
  if (rep.regular) {
    out << "regular\n";
  } else {
    out << "singular leading minor " << *rep.first_singular_minor << '\n';
  }
}

void cmd_catalan_strip(const Options& o, std::ostream& out) {
  const PrimeField f(o.p);
  if (o.n < 0) throw DomainError("catalan-strip needs N >= 0");
  std::vector<std::uint64_t> row;
  for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(o.n); ++n) {
    if (o.signed_values) {
      row.push_back(signed_catalan_mod_p(n, o.p));
    } else {
      row.push_back(o.p == 2 ? catalan_mod_p_lucas(n, 2) : catalan_mod_p(n, o.p));
    }
  }
  if (o.pgm) {
    write_pgm(out, {row}, f.characteristic());
  } else if (o.json) {
    out << json{{"p", o.p}, {"signed", o.signed_values}, {"values", row}}.dump() << '\n';
  } else {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    out << s << '\n';
  }
}

void cmd_phibar2(const Options& o, std::ostream& out) {
  const auto s = char2_phibar_series(o.n);
  if (o.json) {
    out << series_to_json(s).dump() << '\n';
  } else {
    out << join_elements(s.coefficients(1, o.n)) << '\n';
  }
}

int cmd_fractal(const Options& o, std::ostream& out) {
  const PrimeField f(o.p);
  const auto u = parse_elements(f, o.phi_u);
  const auto v = parse_elements(f, o.phi_v.empty() ? std::string("0") : o.phi_v);
  if (u.size() != 1 || v.size() != 1) throw DomainError("fractal takes a single quotient u X + v");
  if (o.p == 2) {
    const bool ok = verify_char2_fractal(o.kexp, v[0].is_zero() ? Char2Variant::Phi : Char2Variant::PhiBar);
    if (o.emit_blocks) {
      const auto row = u_matrix(GoldenSpec<PrimeField>::constant(f, u[0], v[0]), std::size_t{1} << o.kexp).row(0);
      const std::size_t half = row.size() / 2;
      out << "(" << join_elements(std::vector<Fp>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(half))) << ")\n";
      out << "(" << join_elements(std::vector<Fp>(row.begin() + static_cast<std::ptrdiff_t>(half), row.end())) << ")\n";
    }
    out << "fractal " << (ok ? "verified" : "failed") << '\n';
    return ok ? 0 : 1;
  }
  const auto r = blockwise_series(o.p, u[0], v[0], o.kexp);
  if (o.json) {
    json mult = json::array();
    for (const auto& m : r.multipliers) mult.push_back(m ? json(*m) : json());
    out << json{{"p", r.p}, {"kexp", r.kexp}, {"blocks", r.blocks}, {"multipliers", mult}, {"matches_u_matrix", r.matches_u_matrix}}
               .dump()
        << '\n';
    return r.matches_u_matrix ? 0 : 1;
  }
  if (o.emit_blocks) {
    for (std::size_t l = 0; l < r.blocks.size(); ++l) {
      out << detail::join_digits(r.blocks[l]);
      if (r.multipliers[l]) out << " = " << *r.multipliers[l] << " * block " << l % 2;
      out << '\n';
    }
  }
  out << "row 1 of U " << (r.matches_u_matrix ? "matches" : "differs") << '\n';
  return r.matches_u_matrix ? 0 : 1;
}

int cmd_binomial(const AnyField& field, const Options& o, std::ostream& out) {
  bool all = true;
  std::visit(
      [&](const auto& f) {
        for (std::int64_t m = 1; m <= o.m; ++m) {
          const auto k = static_cast<std::size_t>(2 * m + 8);
          const bool ok = verify_binomial_theorem(m, k, f);
          all = all && ok;
          out << "m=" << m << " k=" << k << " " << (ok ? "ok" : "FAILED") << '\n';
        }
      },
      field);
  return all ? 0 : 1;
}

void cmd_kronecker(const AnyField& any, const Options& o, std::ostream& out) {
  const PrimeField& f = require_prime(any, "kronecker");
  if (o.n < 1) throw DomainError("kronecker needs N >= 1");
  const auto count = static_cast<std::uint64_t>(o.n);
  const std::size_t digits = o.m_digits ? o.m_digits : default_digit_depth(count, f.characteristic());
  std::size_t max_deg = 0;
  for (std::uint64_t r = count - 1; r >= f.characteristic(); r /= f.characteristic()) ++max_deg;
  const auto series = cf_to_series(parse_golden(f, o), static_cast<std::int64_t>(digits + max_deg + 1));
  const auto points = kronecker_points(series, count, digits);
  std::optional<mpq_class> disc;
  if (o.discrepancy) {
    std::vector<mpq_class> values;
    for (const auto& pt : points) values.push_back(pt.value);
    disc = star_discrepancy(values);
  }
  if (o.json) {
    json a = json::array();
    for (const auto& pt : points) {
      a.push_back({{"n", pt.n}, {"digits", pt.digit_string()}, {"value", pt.value.get_str()}, {"decimal", pt.decimal()}});
    }
    json j = {{"field", f.name()}, {"digits", digits}, {"points", a}};
    if (disc) j["star_discrepancy"] = disc->get_str();
    out << j.dump() << '\n';
    return;
  }
  const char sep = o.csv ? ',' : ' ';
  if (o.csv) out << "n,digits,value,decimal\n";
  for (const auto& pt : points) {
    out << pt.n << sep << pt.digit_string() << sep << pt.value.get_str() << sep << pt.decimal() << '\n';
  }
  if (disc) out << "star_discrepancy" << sep << disc->get_str() << '\n';
}

void cmd_matimg(const AnyField& any, const Options& o, std::ostream& out) {
  const PrimeField& f = require_prime(any, "matimg");
  const std::size_t size = static_cast<std::size_t>(int_pow(f.characteristic(), o.kexp));
  write_pgm(out, named_matrix(o.what, parse_golden(f, o), size));
}

int cmd_verify(const std::vector<std::string>& fields_given, const Options& o, std::ostream& out) {
  FieldList fields;
  for (const auto& s : fields_given) {
    const auto f = make_field(s);
    fields.push_back(std::holds_alternative<RationalField>(f) ? 0 : std::get<PrimeField>(f).characteristic());
  }
  auto pick = [&](FieldList dflt) { return fields.empty() ? dflt : fields; };
  const std::size_t k = o.k;
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites = {
      {"char2-series", [] { return char2_series_suite(1024); }},
      {"lu", [&] { return lu_suite(pick({2, 3, 5, 7, 0}), 50, k, o.seed); }},
      {"closed-forms", [&] { return closed_forms_suite(pick({0, 2, 3, 5, 7})); }},
      {"catalan-identities", [] { return catalan_identity_suite(); }},
      {"catalan-mod-p", [] { return catalan_mod_p_suite(); }},
      {"phibar", [] { return phibar_suite(); }},
      {"binomial", [] { return binomial_suite(); }},
      {"fractal", [] { return fractal_suite(); }},
      {"blockwise", [] { return blockwise_suite(); }},
      {"regularity", [&] { return regularity_suite(pick({2, 3}), 20, 64, o.seed); }},
      {"kronecker", [] { return kronecker_suite(); }},
      {"roundtrip", [&] { return roundtrip_suite(pick({3, 5}), 50, 128, 60, o.seed); }},
  };
  bool known = o.suite == "all";
  for (const auto& s : suites) known = known || s.first == o.suite;
  if (!known) throw ParseError("unknown suite '" + o.suite + "'");

  int failed = 0;
  json rows = json::array();
  for (const auto& [name, run] : suites) {
    if (o.suite != "all" && o.suite != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteResult r = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.ok) ++failed;
    if (o.json) {
      rows.push_back({{"suite", name}, {"passed", r.ok}, {"detail", r.detail}});
    } else {
      char line[64];
      std::snprintf(line, sizeof line, "%-20s %-5s %7.2fs  ", name.c_str(), r.ok ? "pass" : "FAIL", secs);
      out << line << r.detail << '\n';
    }
  }
  if (o.json) out << rows.dump() << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions and Laurent series of golden ratio analogs over F_p and Q", "golden"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::vector<std::string> verify_fields;

  app.add_option("--field", o.field, "prime p or Q")->capture_default_str();
  app.add_flag("--json", o.json, "JSON output");
  app.add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("-o,--output", o.output, "output file (default stdout)");

  auto add_phi = [&](CLI::App* sub) {
    sub->add_option("--phi-u", o.phi_u, "u_i of the period, comma-separated")->capture_default_str();
    sub->add_option("--phi-v", o.phi_v, "v_i of the period (default zeros)");
    sub->add_option("--pre-u", o.pre_u, "u_i of a preperiod");
    sub->add_option("--pre-v", o.pre_v, "v_i of a preperiod");
  };

  auto* cf2series = app.add_subcommand("cf2series", "series c_1..c_N of a continued fraction");
  cf2series->add_option("--preperiod", o.preperiod, "quotients A1;A2;... (ascending coefficients)");
  cf2series->add_option("--period", o.period, "periodic quotients B1;B2;...");
  cf2series->add_option("-N", o.n, "precision")->capture_default_str();
  add_phi(cf2series);

  auto* series2cf = app.add_subcommand("series2cf", "certified partial quotients of c_1..c_N");
  series2cf->add_option("--coeffs", o.coeffs, "c1,...,cN")->required();

  auto* fib = app.add_subcommand("fib", "Fibonacci polynomials F_0..F_n");
  fib->add_option("--n", o.n, "last index")->capture_default_str();
  add_phi(fib);

  auto* zeck = app.add_subcommand("zeck", "Zeckendorf representation of a polynomial");
  zeck->add_option("--poly", o.poly, "c0,c1,...")->required();
  add_phi(zeck);

  auto* lu = app.add_subcommand("lu", "LU factors of the Hankel matrix");
  lu->add_option("-k", o.k, "size")->capture_default_str();
  lu->add_option("--emit", o.emit, "U, L, R, M or P")->capture_default_str();
  lu->add_flag("--check", o.check, "run the factorization checks");
  lu->add_flag("--pgm", o.pgm, "PGM image output");
  add_phi(lu);

  auto* hankel = app.add_subcommand("hankel", "Hankel matrix and its leading minors");
  hankel->add_option("-k", o.k, "size")->capture_default_str();
  hankel->add_option("--coeffs", o.coeffs, "c1,...,cN instead of a golden series");
  hankel->add_flag("--pgm", o.pgm, "PGM image output");
  add_phi(hankel);

  auto* strip = app.add_subcommand("catalan-strip", "C_n mod p for n < N");
  strip->add_option("--p", o.p, "prime")->capture_default_str();
  strip->add_option("-N", o.n, "count")->capture_default_str();
  strip->add_flag("--signed", o.signed_values, "(-1)^n C_n mod p");
  strip->add_flag("--pgm", o.pgm, "1 x N PGM strip");

  auto* phibar2 = app.add_subcommand("phibar2", "closed form of [0; overline{X + 1}] over F_2");
  phibar2->add_option("-N", o.n, "precision")->capture_default_str();

  auto* fractal = app.add_subcommand("fractal", "blockwise expansion from powers of R");
  fractal->add_option("--p", o.p, "prime")->capture_default_str();
  fractal->add_option("--kexp", o.kexp, "size p^kexp")->capture_default_str();
  fractal->add_flag("--emit-blocks", o.emit_blocks, "print the block strings");
  fractal->add_option("--phi-u", o.phi_u, "u")->capture_default_str();
  fractal->add_option("--phi-v", o.phi_v, "v");

  auto* binom = app.add_subcommand("binomial-check", "shift-operator binomial expansion of R^m");
  binom->add_option("--m", o.m, "largest power")->capture_default_str();

  auto* kron = app.add_subcommand("kronecker", "Kronecker-type sequence points");
  kron->add_option("-N", o.n, "number of points")->capture_default_str();
  kron->add_option("-M", o.m_digits, "digits per point (default ceil(log_p N) + 16)");
  kron->add_flag("--csv", o.csv, "CSV output");
  kron->add_flag("--discrepancy", o.discrepancy, "append the exact star discrepancy");
  add_phi(kron);

  auto* matimg = app.add_subcommand("matimg", "PGM image of a p^kexp matrix");
  matimg->add_option("--what", o.what, "U, L, R, M or P")->capture_default_str();
  matimg->add_option("--kexp", o.kexp, "size p^kexp")->capture_default_str();
  add_phi(matimg);

  auto* verify = app.add_subcommand("verify", "run verification suites and print a table");
  verify->add_option("--suite", o.suite, "suite name or all")->capture_default_str();
  verify->add_option("-k", o.k, "size for the lu suite")->default_val(32);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: io: cannot open " << o.output << '\n';
      return 1;
    }
  }
  std::ostream& out = o.output.empty() ? std::cout : file;

  try {
    if (*verify) {
      if (verify->count("-k") == 0) o.k = 32;
      if (app.get_option("--field")->count() > 0) verify_fields.push_back(o.field);
      return cmd_verify(verify_fields, o, out);
    }
    if (*strip) {
      cmd_catalan_strip(o, out);
      return 0;
    }
    if (*phibar2) {
      cmd_phibar2(o, out);
      return 0;
    }
    if (*fractal) return cmd_fractal(o, out);

    const AnyField field = make_field(o.field);
    if (*binom) return cmd_binomial(field, o, out);
    if (*kron) {
      cmd_kronecker(field, o, out);
      return 0;
    }
    if (*matimg) {
      cmd_matimg(field, o, out);
      return 0;
    }
    return std::visit(
        [&](const auto& f) -> int {
          if (*cf2series) cmd_cf2series(f, o, out);
          if (*series2cf) cmd_series2cf(f, o, out);
          if (*fib) cmd_fib(f, o, out);
          if (*zeck) cmd_zeck(f, o, out);
          if (*hankel) cmd_hankel(f, o, out);
          if (*lu) return cmd_lu(f, o, out);
          return 0;
        },
        field);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  }
}
