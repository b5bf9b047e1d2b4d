#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "igm/matrix.hpp"

namespace igm {

/// Pivots smaller than this fraction of the largest input entry are treated
/// as zero.
inline constexpr double kSingularPivotRatio = 1e-12;

/// Partial-pivoting LU factors of a square matrix, stored combined: the strict
/// lower triangle holds L (unit diagonal implied), the upper triangle holds U.
/// Row i of P*A is row perm[i] of A.
struct LUFactors {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  /// min |u_kk| / max |a_ij|; small values signal near-singularity.
  double min_pivot_ratio = 0.0;
  /// max |a_ij| / max |u_ij|, the reciprocal pivot growth factor.
  double reciprocal_pivot_growth = 0.0;

  std::size_t order() const noexcept { return lu.rows(); }
  Matrix lower() const;
  Matrix upper() const;
  double determinant() const;
};

/// Throws Error(SingularMatrix) when a pivot falls below
/// kSingularPivotRatio * max |entry|, Error(NonSquare) or
/// Error(InvalidArgument) for non-finite input.
LUFactors lu_factor(const Matrix& m);

std::vector<double> lu_solve(const LUFactors& f, std::span<const double> rhs);

/// Inverse from one factorization, one solve per identity column.
Matrix lu_inverse(const LUFactors& f);

Matrix invert(const Matrix& m);
std::vector<double> solve(const Matrix& m, std::span<const double> rhs);

struct EigenPair {
  double value = 0.0;
  /// Normalized to sum to one.
  std::vector<double> vector;
  std::size_t iterations = 0;
};

/// Power iteration from the uniform vector for a nonnegative matrix with a
/// dominant Perron root. Stops when successive eigenvalue estimates differ by
/// less than `tol`; throws Error(NoConvergence) after `max_iter` iterations.
EigenPair principal_eigen(const Matrix& m, double tol = 1e-10, std::size_t max_iter = 10000);

}  // namespace igm
