#include "igm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "igm/error.hpp"

namespace igm {

Matrix LUFactors::lower() const {
  const std::size_t n = order();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
    l(i, i) = 1.0;
  }
  return l;
}

Matrix LUFactors::upper() const {
  const std::size_t n = order();
  Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) u(i, j) = lu(i, j);
  return u;
}

double LUFactors::determinant() const {
  double det = sign;
  for (std::size_t i = 0; i < order(); ++i) det *= lu(i, i);
  return det;
}

LUFactors lu_factor(const Matrix& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, "LU factorization needs a square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::TooSmall, "empty matrix");
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
  }

  LUFactors f;
  f.lu = m;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});

  const double scale = max_abs(m);
  const double threshold = kSingularPivotRatio * scale;
  double min_pivot = scale;
  Matrix& a = f.lu;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    }
    if (scale == 0.0 || best < threshold) {
      throw Error(ErrorCode::SingularMatrix,
                  "pivot " + std::to_string(k + 1) + " of " + std::to_string(n) +
                      " is below the singularity threshold");
    }
    if (p != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(p).begin());
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    min_pivot = std::min(min_pivot, best);
    const double pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = a(i, k) / pivot;
      a(i, k) = factor;
      if (factor == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }

  double max_u = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) max_u = std::max(max_u, std::abs(a(i, j)));
  f.min_pivot_ratio = min_pivot / scale;
  f.reciprocal_pivot_growth = scale / max_u;
  return f;
}

std::vector<double> lu_solve(const LUFactors& f, std::span<const double> rhs) {
  const std::size_t n = f.order();
  if (rhs.size() != n) {
    throw Error(ErrorCode::DimensionMismatch,
                "right-hand side has " + std::to_string(rhs.size()) + " entries, expected " +
                    std::to_string(n));
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
  // Forward substitution with unit-diagonal L.
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s / f.lu(i, i);
  }
  return x;
}

Matrix lu_inverse(const LUFactors& f) {
  const std::size_t n = f.order();
  Matrix inv(n, n);
  std::vector<double> e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const auto col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

Matrix invert(const Matrix& m) { return lu_inverse(lu_factor(m)); }

std::vector<double> solve(const Matrix& m, std::span<const double> rhs) {
  if (m.is_square() && rhs.size() != m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match matrix order");
  }
  return lu_solve(lu_factor(m), rhs);
}

EigenPair principal_eigen(const Matrix& m, double tol, std::size_t max_iter) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "eigenvalue of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw Error(ErrorCode::TooSmall, "empty matrix");
  for (double v : m.data()) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "power iteration needs a nonnegative finite matrix");
    }
  }

  // With x summing to one, sum(Mx) is the Perron root estimate.
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  double previous = 0.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    auto y = multiply(m, x);
    const double lambda = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(lambda > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "power iteration collapsed to the zero vector");
    }
    for (double& v : y) v /= lambda;
    x = std::move(y);
    if (it > 1 && std::abs(lambda - previous) < tol) {
      return {lambda, std::move(x), it};
    }
    previous = lambda;
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iter) + " iterations");
}

}  // namespace igm
