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

#ifndef GOLDEN_SHIFTOPS_HPP
#define GOLDEN_SHIFTOPS_HPP

/// Row-shift and antidiagonal operators on finite truncations of N x N
/// matrices, the non-commutative binomial expansion of (shift_up - shift_down)^m,
/// its prime-power specializations, and the self-similar block structure of U.
///
/// Naming: shift_up is the operator written as a circled plus, (shift_up M)_{i,j}
/// = m_{i-1,j}; shift_down pulls rows up, (shift_down M)_{i,j} = m_{i+1,j}, with
/// the last row zero on a finite matrix. Identities between infinite matrices
/// are checked on upper-left windows that truncation cannot reach.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "golden/binomial.hpp"
#include "golden/contfrac.hpp"
#include "golden/hankel.hpp"
#include "golden/matrix.hpp"

namespace golden {

template <Field F>
Matrix<F> shift_up(const Matrix<F>& m) {
  Matrix<F> out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 1; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i - 1, j);
  }
  return out;
}

template <Field F>
Matrix<F> shift_down(const Matrix<F>& m) {
  Matrix<F> out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i + 1, j);
  }
  return out;
}

/// k x k truncation of J_l: ones where i + j = l + 1 (1-based).
template <Field F>
Matrix<F> antidiag(std::int64_t l, std::size_t k, const F& field) {
  Matrix<F> out(field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t j = l - 1 - static_cast<std::int64_t>(i);
    if (j >= 0 && j < static_cast<std::int64_t>(k)) out(i, static_cast<std::size_t>(j)) = field.one();
  }
  return out;
}

/// k x k truncation of J^(a)_l: (-1)^{i-1} where i + j = l + 1 (1-based).
template <Field F>
Matrix<F> alt_antidiag(std::int64_t l, std::size_t k, const F& field) {
  Matrix<F> out(field, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t j = l - 1 - static_cast<std::int64_t>(i);
    if (j >= 0 && j < static_cast<std::int64_t>(k)) {
      out(i, static_cast<std::size_t>(j)) = (i % 2 == 0) ? field.one() : -field.one();
    }
  }
  return out;
}

/// Zeroes the first n rows.
template <Field F>
Matrix<F> flatten(std::size_t n, const Matrix<F>& m) {
  Matrix<F> out = m;
  for (std::size_t i = 0; i < std::min(n, m.rows()); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.field().zero();
  }
  return out;
}

enum class OpKind { Identity, ShiftPow, AntiDiag, AltAntiDiag };

/// A formal sum of scalar multiples of I, shift_up^s(I) (s < 0 meaning
/// shift_down^{-s}(I)), J_l and J^(a)_l, kept sorted by (kind, parameter) with
/// merged scalars and no zero terms.
template <Field F>
class OpExpr {
 public:
  struct Term {
    Elem<F> scalar;
    OpKind kind;
    std::int64_t param;
  };

  explicit OpExpr(F field) : field_(std::move(field)) {}

  static OpExpr identity(const F& field) { return OpExpr(field).add(field.one(), OpKind::Identity, 0); }

  const F& field() const noexcept { return field_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  OpExpr& add(const Elem<F>& scalar, OpKind kind, std::int64_t param) {
    if (kind == OpKind::ShiftPow && param == 0) kind = OpKind::Identity;
    if (kind == OpKind::Identity) param = 0;
    auto key = std::make_tuple(kind, param);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const auto& k) { return std::make_tuple(t.kind, t.param) < k; });
    if (it != terms_.end() && it->kind == kind && it->param == param) {
      it->scalar += scalar;
      if (it->scalar.is_zero()) terms_.erase(it);
    } else if (!scalar.is_zero()) {
      terms_.insert(it, Term{scalar, kind, param});
    }
    return *this;
  }

  friend OpExpr operator+(OpExpr a, const OpExpr& b) {
    for (const auto& t : b.terms_) a.add(t.scalar, t.kind, t.param);
    return a;
  }

  friend OpExpr operator-(OpExpr a, const OpExpr& b) {
    for (const auto& t : b.terms_) a.add(-t.scalar, t.kind, t.param);
    return a;
  }

  OpExpr scaled(const Elem<F>& s) const {
    OpExpr out(field_);
    for (const auto& t : terms_) out.add(t.scalar * s, t.kind, t.param);
    return out;
  }

  /// Largest |s| over the shift powers.
  std::int64_t max_shift() const {
    std::int64_t m = 0;
    for (const auto& t : terms_) {
      if (t.kind == OpKind::ShiftPow) m = std::max(m, t.param < 0 ? -t.param : t.param);
    }
    return m;
  }

  /// k x k truncation of the infinite matrix.
  Matrix<F> materialize(std::size_t k) const {
    Matrix<F> out(field_, k, k);
    const auto kk = static_cast<std::int64_t>(k);
    for (const auto& t : terms_) {
      switch (t.kind) {
        case OpKind::Identity:
          for (std::size_t i = 0; i < k; ++i) out(i, i) += t.scalar;
          break;
        case OpKind::ShiftPow:
          for (std::int64_t i = 0; i < kk; ++i) {
            const std::int64_t j = i - t.param;
            if (j >= 0 && j < kk) out(i, j) += t.scalar;
          }
          break;
        case OpKind::AntiDiag:
        case OpKind::AltAntiDiag:
          for (std::int64_t i = 0; i < kk; ++i) {
            const std::int64_t j = t.param - 1 - i;
            if (j < 0 || j >= kk) continue;
            const bool negate = t.kind == OpKind::AltAntiDiag && i % 2 == 1;
            out(i, j) += negate ? -t.scalar : t.scalar;
          }
          break;
      }
    }
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += t.scalar.str();
      switch (t.kind) {
        case OpKind::Identity:
          s += "*I";
          break;
        case OpKind::ShiftPow:
          s += "*S^" + std::to_string(t.param);
          break;
        case OpKind::AntiDiag:
          s += "*J_" + std::to_string(t.param);
          break;
        case OpKind::AltAntiDiag:
          s += "*Ja_" + std::to_string(t.param);
          break;
      }
    }
    return s;
  }

 private:
  F field_;
  std::vector<Term> terms_;
};

namespace detail {

template <Field F>
Elem<F> signed_embed(const F& field, const mpz_class& c, bool negative) {
  return negative ? -field.embed(c) : field.embed(c);
}

}  // namespace detail

/// Expansion of (shift_up(I) - shift_down(I))^m:
///   sum_{r=0}^{m} C(m,r) (-1)^r shift_up^{m-2r}(I)
///   + (-1)^m sum_{l=0}^{floor(m/2)-1} C(m,l) (-1)^l J^(a)_{m-1-2l}.
/// The second sum is the correction for the non-commuting shifts.
template <Field F>
OpExpr<F> binomial_expansion_expr(std::int64_t m, const F& field, bool with_correction = true) {
  if (m < 1) throw DomainError("binomial expansion needs m >= 1");
  OpExpr<F> e(field);
  for (std::int64_t r = 0; r <= m; ++r) {
    e.add(detail::signed_embed(field, binomial(m, r), r % 2 == 1), OpKind::ShiftPow, m - 2 * r);
  }
  if (with_correction) {
    for (std::int64_t l = 0; l <= m / 2 - 1; ++l) {
      e.add(detail::signed_embed(field, binomial(m, l), (m + l) % 2 == 1), OpKind::AltAntiDiag, m - 1 - 2 * l);
    }
  }
  return e;
}

template <Field F>
Matrix<F> binomial_expansion_rhs(std::int64_t m, std::size_t k, const F& field, bool with_correction = true) {
  if (static_cast<std::int64_t>(k) <= m) throw DomainError("binomial expansion window vanishes for k <= m");
  return binomial_expansion_expr(m, field, with_correction).materialize(k);
}

/// (shift_up - shift_down) applied m times to I_k with the finite shift rules,
/// compared with the expansion on the upper-left (k-m) x (k-m) window.
template <Field F>
bool verify_binomial_theorem(std::int64_t m, std::size_t k, const F& field, bool with_correction = true) {
  if (static_cast<std::int64_t>(k) <= 2 * m) throw DomainError("verify_binomial_theorem needs k > 2m");
  Matrix<F> lhs = Matrix<F>::identity(field, k);
  for (std::int64_t i = 0; i < m; ++i) lhs = shift_up(lhs) - shift_down(lhs);
  const std::size_t w = k - static_cast<std::size_t>(m);
  return lhs.upper_left(w) == binomial_expansion_rhs(m, k, field, with_correction).upper_left(w);
}

inline std::uint64_t int_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Expansion of (shift_up(I) - shift_down(I))^{p^k l} over F_p, 1 <= l <= p-1:
///   sum_{i=0}^{l} C(l,i) (-1)^i shift_up^{p^k (l-2i)}(I) + s * sum_i C(l,i) (-1)^i J^(a)_{p^k (l-2i) - 1}
/// with s = +1, i <= l/2 - 1 for even l and s = -1, i <= (l-1)/2 for odd l.
inline OpExpr<PrimeField> prime_power_expr(std::uint64_t l, unsigned kexp, std::uint64_t p) {
  const PrimeField field(p);
  if (p == 2) throw DomainError("prime power expansion needs an odd prime");
  if (l < 1 || l > p - 1) throw DomainError("prime power expansion needs 1 <= l <= p-1");
  const auto n = static_cast<std::int64_t>(int_pow(p, kexp));
  const auto ll = static_cast<std::int64_t>(l);
  OpExpr<PrimeField> e(field);
  for (std::int64_t i = 0; i <= ll; ++i) {
    e.add(detail::signed_embed(field, binomial(ll, i), i % 2 == 1), OpKind::ShiftPow, n * (ll - 2 * i));
  }
  const bool even = ll % 2 == 0;
  const std::int64_t last = even ? ll / 2 - 1 : (ll - 1) / 2;
  for (std::int64_t i = 0; i <= last; ++i) {
    const bool negative = (i % 2 == 1) != !even;
    e.add(detail::signed_embed(field, binomial(ll, i), negative), OpKind::AltAntiDiag, n * (ll - 2 * i) - 1);
  }
  return e;
}

/// r^n, multiplying by the sparse factor on the left.
template <Field F>
Matrix<F> matrix_power(const Matrix<F>& r, std::uint64_t n) {
  Matrix<F> acc = Matrix<F>::identity(r.field(), r.rows());
  for (std::uint64_t i = 0; i < n; ++i) acc = r * acc;
  return acc;
}

/// Size for comparing powers up to n: window n + p^k + 4 after the n rows
/// that truncation may corrupt.
inline std::size_t prime_power_size(std::uint64_t n, std::uint64_t pk) { return static_cast<std::size_t>(2 * n + pk + 4); }

/// Checks the p^k case (l = 1) and the l case of prime_power_expr against
/// direct powers of [R_{[0; overline{X}]}].
inline bool verify_prime_power_expansion(std::uint64_t l, unsigned kexp, std::uint64_t p) {
  if (kexp < 1) throw DomainError("verify_prime_power_expansion needs kexp >= 1");
  const PrimeField field(p);
  const std::uint64_t pk = int_pow(p, kexp);
  const std::uint64_t n = pk * l;
  const std::size_t size = prime_power_size(n, pk);
  const std::size_t w = size - n;
  const Matrix<PrimeField> r = r_matrix(GoldenSpec<PrimeField>::constant(field, field.one(), field.zero()), size);
  const Matrix<PrimeField> rpk = matrix_power(r, pk);
  if (!(rpk.upper_left(w) == prime_power_expr(1, kexp, p).materialize(size).upper_left(w))) return false;
  const Matrix<PrimeField> rn = matrix_power(rpk, l);
  return rn.upper_left(w) == prime_power_expr(l, kexp, p).materialize(size).upper_left(w);
}

/// R_{u,v} = u^{-1}(R_{1,0} - v I) for [0; overline{uX + v}]. Over F_p,
///   R_{u,v}^{p^k}   = u^{-1} R_{1,0}^{p^k} - u^{-1} v I
///   R_{u,v}^{p^k l} = u^{-l} sum_{i=0}^{l} C(l,i) (-v)^i R_{1,0}^{p^k (l-i)}.
/// Both are checked against direct powers of R_{u,v}.
inline bool verify_prime_power_expansion(std::uint64_t l, unsigned kexp, std::uint64_t p, const Fp& u, const Fp& v) {
  if (kexp < 1) throw DomainError("verify_prime_power_expansion needs kexp >= 1");
  if (l < 1 || l > p - 1) throw DomainError("verify_prime_power_expansion needs 1 <= l <= p-1");
  const PrimeField field(p);
  const std::uint64_t pk = int_pow(p, kexp);
  const std::uint64_t n = pk * l;
  const std::size_t size = prime_power_size(n, pk);
  const std::size_t w = size - n;
  const Matrix<PrimeField> r10 = r_matrix(GoldenSpec<PrimeField>::constant(field, field.one(), field.zero()), size);
  const Matrix<PrimeField> ruv = r_matrix(GoldenSpec<PrimeField>::constant(field, u, v), size);
  const Fp uinv = u.inverse();
  const Matrix<PrimeField> id = Matrix<PrimeField>::identity(field, size);

  const Matrix<PrimeField> r10_pk = matrix_power(r10, pk);
  const Matrix<PrimeField> ruv_pk = matrix_power(ruv, pk);
  const Matrix<PrimeField> single = (r10_pk - id.scaled(v)).scaled(uinv);
  if (!(ruv_pk.upper_left(w) == single.upper_left(w))) return false;

  Matrix<PrimeField> rhs(field, size, size);
  Matrix<PrimeField> r10_power = id;  // R_{1,0}^{p^k j}, j = l - i
  std::vector<Matrix<PrimeField>> powers;
  for (std::uint64_t j = 0; j <= l; ++j) {
    powers.push_back(r10_power);
    r10_power = r10_pk * r10_power;
  }
  Fp minus_v_pow = field.one();
  for (std::uint64_t i = 0; i <= l; ++i) {
    const Fp c = field.embed(binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(i))) * minus_v_pow;
    rhs = rhs + powers[l - i].scaled(c);
    minus_v_pow = minus_v_pow * (-v);
  }
  Fp ul = field.one();
  for (std::uint64_t i = 0; i < l; ++i) ul = ul * uinv;
  rhs = rhs.scaled(ul);
  return matrix_power(ruv_pk, l).upper_left(w) == rhs.upper_left(w);
}

enum class Char2Variant { Phi, PhiBar };

/// Over F_2, for [0; overline{X}] (Phi) and [0; overline{X+1}] (PhiBar),
/// [U]_{2^k} has diagonal blocks [U]_{2^{k-1}}, zero lower-left block and
/// upper-right block A [U]_{2^{k-1}} with A = shift_down(J_{2^{k-1}}) for Phi
/// and I + shift_down(J_{2^{k-1}}) for PhiBar. kexp = 1 checks the initial
/// values [U]_2 = I and [[1,1],[0,1]].
inline bool verify_char2_fractal(unsigned kexp, Char2Variant variant) {
  if (kexp < 1 || kexp > 7) throw DomainError("verify_char2_fractal supports 1 <= kexp <= 7");
  const PrimeField f2(2);
  const auto phi = GoldenSpec<PrimeField>::constant(f2, f2.one(), variant == Char2Variant::Phi ? f2.zero() : f2.one());
  const std::size_t size = std::size_t{1} << kexp;
  const Matrix<PrimeField> u = u_matrix(phi, size);
  if (kexp == 1) {
    Matrix<PrimeField> expect = Matrix<PrimeField>::identity(f2, 2);
    if (variant == Char2Variant::PhiBar) expect(0, 1) = f2.one();
    return u == expect;
  }
  const std::size_t h = size / 2;
  const Matrix<PrimeField> small = u_matrix(phi, h);
  Matrix<PrimeField> a = shift_down(antidiag(static_cast<std::int64_t>(h), h, f2));
  if (variant == Char2Variant::PhiBar) a = a + Matrix<PrimeField>::identity(f2, h);
  return u.block(0, 0, h, h) == small && u.block(h, h, h, h) == small && u.block(h, 0, h, h).is_zero() &&
         u.block(0, h, h, h) == a * small;
}

/// Row 1 of [U_{[0; overline{uX+v}]}]_{p^kexp} assembled level by level from
/// blocks: with h = p^j, block column l of [U]_{p h} is the first h columns of
/// [R_{u,v}^{l h}]_{p h} times [U]_h. R_{u,v}^{l h} is expanded through
/// powers of R_{1,0}, which come from the binomial expansion (h = 1) or the
/// prime power expansion (h > 1); no matrix powers are taken.
struct BlockwiseResult {
  std::uint64_t p = 0;
  unsigned kexp = 0;
  std::vector<std::uint64_t> coefficients;
  /// The p strings of length p^{kexp-1} making up the top level.
  std::vector<std::vector<std::uint64_t>> blocks;
  /// multipliers[l] = s with blocks[l] = s * blocks[l mod 2] when such s exists.
  std::vector<std::optional<std::uint64_t>> multipliers;
  bool matches_u_matrix = false;
};

namespace detail {

// [R_{1,0}^{h n}]_size as an exact truncation of the infinite matrix.
inline Matrix<PrimeField> r10_power_block(unsigned j, std::uint64_t n, std::size_t size, std::uint64_t p) {
  const PrimeField field(p);
  if (n == 0) return Matrix<PrimeField>::identity(field, size);
  if (j == 0) return binomial_expansion_expr(static_cast<std::int64_t>(n), field).materialize(size);
  return prime_power_expr(n, j, p).materialize(size);
}

}  // namespace detail

inline BlockwiseResult blockwise_series(std::uint64_t p, const Fp& u, const Fp& v, unsigned kexp) {
  if (p == 2 || !is_prime(p)) throw DomainError("blockwise_series needs an odd prime");
  if (kexp < 1) throw DomainError("blockwise_series needs kexp >= 1");
  const PrimeField field(p);
  if (!field.owns(u) || !field.owns(v)) throw FieldMismatch("u, v must lie in F_p");
  if (u.is_zero()) throw DomainError("blockwise_series needs u != 0");
  const Fp uinv = u.inverse();

  Matrix<PrimeField> cur = Matrix<PrimeField>::identity(field, 1);
  std::uint64_t h = 1;
  for (unsigned j = 0; j < kexp; ++j) {
    const std::size_t big = static_cast<std::size_t>(h * p);
    Matrix<PrimeField> next(field, big, big);
    std::vector<Matrix<PrimeField>> r10;
    for (std::uint64_t n = 0; n < p; ++n) r10.push_back(detail::r10_power_block(j, n, big, p));
    Fp ul = field.one();
    for (std::uint64_t l = 0; l < p; ++l) {
      Matrix<PrimeField> rl(field, big, big);
      Fp minus_v_pow = field.one();
      for (std::uint64_t i = 0; i <= l; ++i) {
        const Fp c = field.embed(binomial(static_cast<std::int64_t>(l), static_cast<std::int64_t>(i))) * minus_v_pow;
        rl = rl + r10[l - i].scaled(c);
        minus_v_pow = minus_v_pow * (-v);
      }
      rl = rl.scaled(ul);
      next.set_block(0, static_cast<std::size_t>(l * h), rl.block(0, 0, big, static_cast<std::size_t>(h)) * cur);
      ul = ul * uinv;
    }
    cur = std::move(next);
    h *= p;
  }

  BlockwiseResult out;
  out.p = p;
  out.kexp = kexp;
  for (std::size_t c = 0; c < cur.cols(); ++c) out.coefficients.push_back(cur(0, c).value());
  const std::size_t len = static_cast<std::size_t>(h / p);
  for (std::uint64_t l = 0; l < p; ++l) {
    out.blocks.emplace_back(out.coefficients.begin() + static_cast<std::ptrdiff_t>(l * len),
                            out.coefficients.begin() + static_cast<std::ptrdiff_t>((l + 1) * len));
  }
  for (std::uint64_t l = 0; l < p; ++l) {
    const auto& base = out.blocks[l % 2];
    const auto& blk = out.blocks[l];
    std::optional<std::uint64_t> s;
    bool ok = true;
    for (std::size_t i = 0; i < len && ok; ++i) {
      if (base[i] == 0) {
        ok = blk[i] == 0;
        continue;
      }
      const std::uint64_t ratio = (Fp(blk[i], p) / Fp(base[i], p)).value();
      if (s && *s != ratio) ok = false;
      s = ratio;
    }
    out.multipliers.push_back(ok ? s : std::nullopt);
  }
  const auto direct = u_matrix(GoldenSpec<PrimeField>::constant(field, u, v), static_cast<std::size_t>(h));
  out.matches_u_matrix = true;
  for (std::size_t c = 0; c < cur.cols(); ++c) {
    if (!(direct(0, c) == cur(0, c))) out.matches_u_matrix = false;
  }
  return out;
}

}  // namespace golden

#endif  // GOLDEN_SHIFTOPS_HPP
