#pragma once

#include <cstddef>

#include "igm/matrix.hpp"
#include "igm/prm.hpp"

namespace igm {

/// Coefficient matrix of the stacked equations w_i - a_ij w_j = 0 (one row
/// per ordered pair i != j) followed by the unity row sum(w) = 1.
class DesignMatrix {
 public:
  explicit DesignMatrix(Matrix rows);

  std::size_t criteria() const noexcept { return rows_.cols(); }
  /// n(n-1): the rows excluding the unity row.
  std::size_t reduced_rows() const noexcept { return rows_.rows() - 1; }
  /// All n(n-1)+1 rows.
  const Matrix& full() const noexcept { return rows_; }
  /// Copy of the first n(n-1) rows.
  Matrix reduced() const;

 private:
  Matrix rows_;
};

enum class GramFlavor {
  Full,      // D^T D
  Reduced,   // D_bar^T D_bar; the legacy C matrix
  Shifted,   // Reduced + r in every entry
  Bordered,  // [[Reduced + r, e^T], [e, 0]], order n+1
};

class GramMatrix {
 public:
  GramMatrix(GramFlavor flavor, Matrix entries, double shift = 0.0)
      : flavor_(flavor), entries_(std::move(entries)), shift_(shift) {}

  GramFlavor flavor() const noexcept { return flavor_; }
  const Matrix& entries() const noexcept { return entries_; }
  std::size_t order() const noexcept { return entries_.rows(); }
  /// r for Shifted, r~ for Bordered, 1 for Full, 0 for Reduced.
  double shift() const noexcept { return shift_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

 private:
  GramFlavor flavor_;
  Matrix entries_;
  double shift_;
};

/// Rows in loop order: for i < j, first (+1 at i, -a_ij at j), then
/// (-a_ji at i, +1 at j); unity row last.
DesignMatrix build_design_matrix(const PairwiseReciprocalMatrix& prm);

/// D^T D over all rows (Full) or over the first n(n-1) rows (Reduced).
GramMatrix gram_from_design(const DesignMatrix& d, bool include_unity_row);

/// Full flavor from the element form: g_jj = (n-1) + sum_k a_kj^2,
/// g_ij = 1 - a_ij - a_ji.
GramMatrix gram_elementwise(const PairwiseReciprocalMatrix& prm);

/// Reduced flavor from the element form: diagonal (n-1) + sum_{k != j} a_kj^2,
/// off-diagonal -a_ij - a_ji.
GramMatrix reduced_gram(const PairwiseReciprocalMatrix& prm);

/// Reduced + r. Throws ZeroShift for r == 0; use reduced_gram for that.
GramMatrix shifted_gram(const PairwiseReciprocalMatrix& prm, double r);

/// Order n+1 bordered matrix with top-left block Reduced + r_tilde, a border of
/// ones and a zero corner.
GramMatrix lagrangian_gram(const PairwiseReciprocalMatrix& prm, double r_tilde = 0.0);

}  // namespace igm
