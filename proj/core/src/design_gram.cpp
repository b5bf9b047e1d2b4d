#include "igm/design_gram.hpp"

#include <cmath>
#include <string>

#include "igm/error.hpp"

namespace igm {

DesignMatrix::DesignMatrix(Matrix rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.cols();
  if (n < 2 || rows_.rows() != n * (n - 1) + 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "design matrix must have n(n-1)+1 rows for n columns");
  }
}

Matrix DesignMatrix::reduced() const {
  const std::size_t n = criteria();
  Matrix d(reduced_rows(), n);
  for (std::size_t k = 0; k < reduced_rows(); ++k)
    for (std::size_t j = 0; j < n; ++j) d(k, j) = rows_(k, j);
  return d;
}

DesignMatrix build_design_matrix(const PairwiseReciprocalMatrix& prm) {
  const std::size_t n = prm.order();
  Matrix d(n * (n - 1) + 1, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d(k, i) = 1.0;
      d(k, j) = -prm(i, j);
      ++k;
      d(k, i) = -prm(j, i);
      d(k, j) = 1.0;
      ++k;
    }
  }
  for (std::size_t j = 0; j < n; ++j) d(k, j) = 1.0;
  return DesignMatrix(std::move(d));
}

GramMatrix gram_from_design(const DesignMatrix& d, bool include_unity_row) {
  const Matrix& rows = d.full();
  const std::size_t n = d.criteria();
  const std::size_t used = include_unity_row ? rows.rows() : d.reduced_rows();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < used; ++k) s += rows(k, i) * rows(k, j);
      g(i, j) = s;
      g(j, i) = s;
    }
  }
  return include_unity_row ? GramMatrix(GramFlavor::Full, std::move(g), 1.0)
                           : GramMatrix(GramFlavor::Reduced, std::move(g), 0.0);
}

namespace {

// sum over k of a_kj^2, optionally skipping the diagonal term.
double column_square_sum(const PairwiseReciprocalMatrix& prm, std::size_t j, bool skip_diagonal) {
  double s = 0.0;
  for (std::size_t k = 0; k < prm.order(); ++k) {
    if (skip_diagonal && k == j) continue;
    s += prm(k, j) * prm(k, j);
  }
  return s;
}

Matrix reduced_entries(const PairwiseReciprocalMatrix& prm) {
  const std::size_t n = prm.order();
  const double base = static_cast<double>(n - 1);
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    g(j, j) = base + column_square_sum(prm, j, true);
    for (std::size_t i = j + 1; i < n; ++i) {
      const double off = -prm(i, j) - prm(j, i);
      g(i, j) = off;
      g(j, i) = off;
    }
  }
  return g;
}

}  // namespace

GramMatrix gram_elementwise(const PairwiseReciprocalMatrix& prm) {
  const std::size_t n = prm.order();
  const double base = static_cast<double>(n - 1);
  Matrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    g(j, j) = base + column_square_sum(prm, j, false);
    for (std::size_t i = j + 1; i < n; ++i) {
      const double off = 1.0 - prm(i, j) - prm(j, i);
      g(i, j) = off;
      g(j, i) = off;
    }
  }
  return GramMatrix(GramFlavor::Full, std::move(g), 1.0);
}

GramMatrix reduced_gram(const PairwiseReciprocalMatrix& prm) {
  return GramMatrix(GramFlavor::Reduced, reduced_entries(prm), 0.0);
}

GramMatrix shifted_gram(const PairwiseReciprocalMatrix& prm, double r) {
  if (r == 0.0) {
    throw Error(ErrorCode::ZeroShift, "shift must be nonzero; use reduced_gram for r = 0");
  }
  if (!std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "non-finite shift");
  return GramMatrix(GramFlavor::Shifted, add_scalar(reduced_entries(prm), r), r);
}

GramMatrix lagrangian_gram(const PairwiseReciprocalMatrix& prm, double r_tilde) {
  if (!std::isfinite(r_tilde)) throw Error(ErrorCode::InvalidArgument, "non-finite shift");
  const std::size_t n = prm.order();
  const Matrix block = reduced_entries(prm);
  Matrix g(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = block(i, j) + r_tilde;
    g(i, n) = 1.0;
    g(n, i) = 1.0;
  }
  g(n, n) = 0.0;
  return GramMatrix(GramFlavor::Bordered, std::move(g), r_tilde);
}

}  // namespace igm
