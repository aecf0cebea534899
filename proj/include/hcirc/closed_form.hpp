#pragma once

// Closed forms for g-circulant matrices over a Horadam sequence:
// spectral norm, determinant and inverse, each guarded by the hypotheses
// under which the formula holds.
//
// Notation shared by the determinant and inverse:
//   M = gk·(H(n) − H(0)),  N = H(1) − H(n+1).

#include "hcirc/errors.hpp"
#include "hcirc/numeric.hpp"
#include "hcirc/sequence.hpp"
#include "hcirc/structmat.hpp"

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace hcirc {

struct Precondition {
  std::string name;
  bool held;
  std::string violation;  ///< Skip reason reported when `held` is false.
};

namespace detail {

inline const Precondition* first_failed(const std::vector<Precondition>& pre) {
  for (const auto& p : pre)
    if (!p.held) return &p;
  return nullptr;
}

inline void require(const std::vector<Precondition>& pre) {
  if (const auto* p = first_failed(pre)) throw precondition_error(p->violation);
}

inline Precondition coprime(std::size_t n, std::size_t g) {
  return {"gcd(n,g)=1", std::gcd(n, g) == 1, reason::gcd_not_one};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Spectral norm

inline std::vector<Precondition> norm_preconditions(const HoradamParams& p, std::size_t n) {
  bool nonneg = p.fk().sign() >= 0 && p.gk().sign() >= 0;
  if (nonneg)
    for (const auto& h : terms(p, 1, n)) nonneg = nonneg && h.sign() >= 0;
  return {
      {"fk+gk-1≠0", !(p.fk() + p.gk() - Rational(1)).is_zero(), reason::sum_denominator_zero},
      {"nonnegative fk, gk and H(1..n)", nonneg, reason::negative_entries},
  };
}

/// ‖C_{n,g}(H)‖₂ for every g coprime to n: the common row sum
/// (H(n+1) + gk·H(n) − H(1) − gk·H(0)) / (fk + gk − 1).
/// Only valid for entrywise-nonnegative matrices (Perron argument); a
/// negative entry raises precondition_error and the caller should fall back
/// to spectral_norm_float.
inline Rational norm_closed(const HoradamParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("norm_closed: n must be >= 1");
  detail::require(norm_preconditions(p, n));
  return sum_closed(p, n);
}

// ---------------------------------------------------------------------------
// Determinant

struct DetIngredients {
  Rational m;
  Rational n;
  /// c[i-1] = H(1)·H(i+2) − H(2)·H(i+1) for i = 1..n−1.
  std::vector<Rational> c;
};

inline DetIngredients det_ingredients(const HoradamParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("det_ingredients: n must be >= 1");
  auto h = terms(p, 0, n + 1);
  DetIngredients out{p.gk() * (h[n] - h[0]), h[1] - h[n + 1], {}};
  out.c.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) out.c.push_back(h[1] * h[i + 2] - h[2] * h[i + 1]);
  return out;
}

/// det circ(H(1), ..., H(n)) in the division-free form
///   H(1)·N^{n−1} + Σ_{i=1}^{n−1} c_i·M^{n−1−i}·N^{i−1},
/// defined for every input including M = 0, N = 0 or H(1) = 0.
inline Rational det_circ_closed(const HoradamParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("det_circ_closed: n must be >= 1");
  if (n == 1) return p.b();
  auto d = det_ingredients(p, n);
  const auto nn = static_cast<std::int64_t>(n);
  Rational det = p.b() * rat_pow(d.n, nn - 1);
  for (std::int64_t i = 1; i < nn; ++i)
    det += d.c[static_cast<std::size_t>(i - 1)] * rat_pow(d.m, nn - 1 - i) * rat_pow(d.n, i - 1);
  return det;
}

inline std::vector<Precondition> det_gcirc_preconditions(std::size_t n, std::size_t g) {
  return {detail::coprime(n, g)};
}

/// det C_{n,g}(H) = det Q_g · det C_n(H), valid when gcd(n, g) = 1.
/// Outside that hypothesis the matrix is singular for n > 1, but that is a
/// separate fact and is not returned from here.
inline Rational det_gcirc_closed(const HoradamParams& p, std::size_t n, std::size_t g) {
  if (n == 0) throw std::invalid_argument("det_gcirc_closed: n must be >= 1");
  detail::require(det_gcirc_preconditions(n, g));
  return permutation_parity(n, g) * det_circ_closed(p, n);
}

// ---------------------------------------------------------------------------
// Inverse

struct InverseIngredients {
  /// s[j] = S^{(j)} for j = 1..n−2; s[0] is S^{(0)} = 0. S^{(−1)} = 0 too.
  std::vector<Rational> s;
  Rational h;
  Rational det;
};

inline std::vector<Precondition> inverse_preconditions(const HoradamParams& p, std::size_t n) {
  std::vector<Precondition> pre{{"n>2", n > 2, reason::small_n}};
  if (n <= 2) return pre;
  auto d = det_ingredients(p, n);
  pre.push_back({"H(1)≠0", !p.b().is_zero(), reason::first_term_zero});
  pre.push_back({"N≠0", !d.n.is_zero(), reason::n_zero});
  pre.push_back({"det C_n(H)≠0", !det_circ_closed(p, n).is_zero(), reason::singular});
  return pre;
}

inline std::vector<Precondition> inverse_gcirc_preconditions(const HoradamParams& p, std::size_t n,
                                                             std::size_t g) {
  auto pre = inverse_preconditions(p, n);
  pre.insert(pre.begin() + 1, detail::coprime(n, g));
  return pre;
}

namespace detail {

inline void require_inverse(const std::vector<Precondition>& pre) {
  if (const auto* f = first_failed(pre)) {
    if (f->violation == reason::singular) throw singular_matrix_error();
    throw precondition_error(f->violation);
  }
}

}  // namespace detail

/// S^{(j)} = Σ_{i=1}^{j} (H(j+3−i) − H(2)·H(j+2−i)/H(1))·M^{i−1}/N^{i}
/// and the normalization h = det C_n(H) / (H(1)·N^{n−2}).
inline InverseIngredients inverse_ingredients(const HoradamParams& p, std::size_t n) {
  detail::require_inverse(inverse_preconditions(p, n));
  auto d = det_ingredients(p, n);
  auto h = terms(p, 0, n + 1);
  const Rational ratio = h[2] / h[1];

  InverseIngredients out;
  out.s.assign(n - 1, Rational(0));
  for (std::size_t j = 1; j + 2 <= n; ++j) {
    Rational acc;
    for (std::size_t i = 1; i <= j; ++i)
      acc += (h[j + 3 - i] - ratio * h[j + 2 - i]) * rat_pow(d.m, static_cast<std::int64_t>(i) - 1) /
             rat_pow(d.n, static_cast<std::int64_t>(i));
    out.s[j] = acc;
  }
  out.det = det_circ_closed(p, n);
  out.h = out.det / (h[1] * rat_pow(d.n, static_cast<std::int64_t>(n) - 2));
  return out;
}

/// First row of C_n(H)⁻¹:
///   e1 = (1 + fk·S^{(n−2)} + gk·S^{(n−3)})/h
///   e2 = (gk·S^{(n−2)} − H(2)/H(1))/h
///   e_{j+2} = −(S^{(j)} − fk·S^{(j−1)} − gk·S^{(j−2)})/h,  j = 1..n−2
inline std::vector<Rational> inv_circ_closed(const HoradamParams& p, std::size_t n) {
  auto ing = inverse_ingredients(p, n);
  auto s = [&ing](std::ptrdiff_t j) { return j <= 0 ? Rational(0) : ing.s[static_cast<std::size_t>(j)]; };
  const auto nn = static_cast<std::ptrdiff_t>(n);
  const Rational h2_over_h1 = term(p, 2) / p.b();

  std::vector<Rational> row;
  row.reserve(n);
  row.push_back((Rational(1) + p.fk() * s(nn - 2) + p.gk() * s(nn - 3)) / ing.h);
  row.push_back((p.gk() * s(nn - 2) - h2_over_h1) / ing.h);
  for (std::ptrdiff_t j = 1; j <= nn - 2; ++j)
    row.push_back(-(s(j) - p.fk() * s(j - 1) - p.gk() * s(j - 2)) / ing.h);
  return row;
}

/// C_{n,g}(H)⁻¹ = C_n(H)⁻¹ · Q_gᵀ, since C_{n,g}(H) = Q_g · C_n(H).
inline Matrix inv_gcirc_closed(const HoradamParams& p, std::size_t n, std::size_t g) {
  detail::require_inverse(inverse_gcirc_preconditions(p, n, g));
  auto row = inv_circ_closed(p, n);
  return matmul(circulant(row), transpose(q_matrix(n, g)));
}

/// The normalization constant in its published form:
///   −H(2)·H(n)/H(1) + H(1) + Σ_{i=1}^{n−1} (H(i+2) − H(2)·H(i+1)/H(1))·(M/N)^{n−i−1}.
/// It disagrees with the true normalization (see inverse_ingredients); kept
/// for the audit.
inline Rational printed_hn(const HoradamParams& p, std::size_t n) {
  detail::require_inverse(inverse_preconditions(p, n));
  auto d = det_ingredients(p, n);
  auto h = terms(p, 0, n + 1);
  const Rational ratio = h[2] / h[1];
  const Rational mn = d.m / d.n;
  Rational out = -ratio * h[n] + h[1];
  for (std::size_t i = 1; i < n; ++i)
    out += (h[i + 2] - ratio * h[i + 1]) * rat_pow(mn, static_cast<std::int64_t>(n - i - 1));
  return out;
}

}  // namespace hcirc
