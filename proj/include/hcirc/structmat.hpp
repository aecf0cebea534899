#pragma once

// Dense exact matrices, the g-circulant family, and the brute-force oracles
// (Bareiss determinant, Gauss-Jordan inverse, power-iteration spectral norm)
// that the closed forms are checked against.

#include "hcirc/errors.hpp"
#include "hcirc/numeric.hpp"
#include "hcirc/sequence.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace hcirc {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds from row-major nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Sequence, order n and shift g of a g-circulant built from H(1..n).
struct GCircSpec {
  HoradamParams params;
  std::size_t n;
  std::size_t g;
};

namespace detail {

/// (c − r·g) mod n, normalized to [0, n).
inline std::size_t shifted_index(std::size_t r, std::size_t c, std::size_t g, std::size_t n) {
  std::size_t back = (r % n) * (g % n) % n;
  return (c % n + n - back) % n;
}

inline Matrix g_circulant_of(std::span<const Rational> first_row, std::size_t g) {
  if (first_row.empty()) throw std::invalid_argument("circulant: empty first row");
  std::size_t n = first_row.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = first_row[shifted_index(r, c, g, n)];
  return m;
}

}  // namespace detail

/// Entry (r, c) = H(((c − r·g) mod n) + 1); each row is the previous one
/// shifted right by g.
inline Matrix g_circulant(const GCircSpec& spec) {
  if (spec.n == 0) throw std::invalid_argument("g_circulant: n must be >= 1");
  auto row = terms(spec.params, 1, spec.n);
  return detail::g_circulant_of(row, spec.g);
}

inline Matrix circulant(std::span<const Rational> first_row) {
  return detail::g_circulant_of(first_row, 1);
}

/// The g-circulant with first row e1: entry (r, c) = 1 iff c ≡ r·g (mod n).
inline Matrix q_matrix(std::size_t n, std::size_t g) {
  if (n == 0) throw std::invalid_argument("q_matrix: n must be >= 1");
  std::vector<Rational> e1(n);
  e1[0] = 1;
  return detail::g_circulant_of(e1, g);
}

/// det Q_g, the sign of r ↦ r·g mod n. Requires gcd(n, g) = 1.
inline Rational permutation_parity(std::size_t n, std::size_t g) {
  if (n == 0) throw std::invalid_argument("permutation_parity: n must be >= 1");
  if (std::gcd(n, g) != 1) throw precondition_error(reason::gcd_not_one);
  std::vector<bool> seen(n, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t r = start; !seen[r]; r = r * (g % n) % n) seen[r] = true;
  }
  return (n - cycles) % 2 == 0 ? Rational(1) : Rational(-1);
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers so every intermediate value stays integral.
inline Rational det_bareiss(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("det_bareiss: matrix is not square");
  const std::size_t n = a.rows();

  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, a(r, c).denominator());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a(r, c).numerator() * (l / a(r, c).denominator());
  }

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  BigInt det = m[n - 1][n - 1];
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

/// Exact inverse by Gauss-Jordan, pivoting on the first nonzero entry.
inline Matrix inverse_exact(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse_exact: matrix is not square");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);

  auto swap_rows = [n](Matrix& m, std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(x, c), m(y, c));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && work(p, k).is_zero()) ++p;
    if (p == n) throw singular_matrix_error();
    if (p != k) {
      swap_rows(work, p, k);
      swap_rows(inv, p, k);
    }
    Rational pivot = work(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      work(k, c) /= pivot;
      inv(k, c) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || work(i, k).is_zero()) continue;
      Rational factor = work(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        work(i, c) -= factor * work(k, c);
        inv(i, c) -= factor * inv(k, c);
      }
    }
  }
  return inv;
}

struct PowerIterationOptions {
  double tol = 1e-12;
  std::size_t max_iterations = 100000;
};

/// Largest singular value by power iteration on AᵀA in double precision.
/// Starts from the all-ones vector and restarts once from (1, 2, ..., n) if
/// that start is annihilated.
inline double spectral_norm_float(const Matrix& a, PowerIterationOptions opts = {}) {
  if (!(opts.tol > 0)) throw std::invalid_argument("spectral_norm_float: tol must be positive");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::vector<double> af(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) af[r * cols + c] = a(r, c).to_double();

  std::vector<double> gram(cols * cols, 0.0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += af[r * cols + i] * af[r * cols + j];
      gram[i * cols + j] = s;
    }

  auto apply = [&](const std::vector<double>& x) {
    std::vector<double> y(cols, 0.0);
    for (std::size_t i = 0; i < cols; ++i)
      for (std::size_t j = 0; j < cols; ++j) y[i] += gram[i * cols + j] * x[j];
    return y;
  };
  auto norm2 = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };

  // Returns the dominant eigenvalue of AᵀA, or a negative value when the
  // iterate collapses to zero.
  auto iterate = [&](std::vector<double> x) -> double {
    double nx = norm2(x);
    for (double& v : x) v /= nx;
    double lambda = 0.0;
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
      auto y = apply(x);
      double ny = norm2(y);
      if (ny == 0.0) return -1.0;
      double rq = 0.0;
      for (std::size_t i = 0; i < cols; ++i) rq += x[i] * y[i];
      for (std::size_t i = 0; i < cols; ++i) x[i] = y[i] / ny;
      if (it > 0 && std::abs(rq - lambda) < opts.tol * std::abs(rq)) return rq;
      lambda = rq;
    }
    throw numeric_error("spectral_norm_float: power iteration did not converge");
  };

  std::vector<double> start(cols, 1.0);
  double lambda = iterate(start);
  if (lambda < 0.0) {
    for (std::size_t i = 0; i < cols; ++i) start[i] = static_cast<double>(i + 1);
    lambda = iterate(start);
  }
  if (lambda < 0.0) {
    bool zero = true;
    for (double v : af) zero = zero && v == 0.0;
    if (zero) return 0.0;
    throw numeric_error("spectral_norm_float: both start vectors lie in the null space");
  }
  return std::sqrt(std::max(lambda, 0.0));
}

}  // namespace hcirc
