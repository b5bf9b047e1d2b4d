#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igm/matrix.hpp"

namespace igm {

/// Relative tolerance on a_ij * a_ji = 1 for externally supplied matrices.
inline constexpr double kReciprocityTolerance = 1e-12;
/// Absolute tolerance on sum(w) = 1.
inline constexpr double kWeightSumTolerance = 1e-10;

/// Positive square matrix of ratio judgments with a_ij * a_ji = 1 and a unit
/// diagonal. Instances only come out of validate_prm, ideal_prm and
/// random_prm, so holding one means the invariants hold.
class PairwiseReciprocalMatrix {
 public:
  std::size_t order() const noexcept { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Matrix& entries() const noexcept { return entries_; }

  friend bool operator==(const PairwiseReciprocalMatrix&, const PairwiseReciprocalMatrix&) = default;

 private:
  explicit PairwiseReciprocalMatrix(Matrix entries) : entries_(std::move(entries)) {}

  friend class PrmBuilder;

  Matrix entries_;
};

/// Nonnegative-by-convention weights summing to one, plus the Lagrange
/// multiplier when the producing method has one.
class PriorityVector {
 public:
  /// Throws NotNormalized unless the weights sum to one within
  /// kWeightSumTolerance; InvalidArgument for empty or non-finite input.
  explicit PriorityVector(std::vector<double> weights,
                          std::optional<double> multiplier = std::nullopt);

  /// Scales `raw` to unit sum.
  static PriorityVector normalize(std::vector<double> raw);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }
  const std::optional<double>& multiplier() const noexcept { return multiplier_; }

 private:
  std::vector<double> weights_;
  std::optional<double> multiplier_;
};

/// Admissible judgment values, sorted ascending and closed under reciprocal.
class JudgmentScale {
 public:
  /// The z-point scale {1/z, ..., 1/2, 1, 2, ..., z}; reciprocals of the
  /// integer points are stored as the defining ratios 1.0 / k.
  static JudgmentScale saaty(int z = 9);

  /// Throws InvalidArgument unless `points` is positive, contains 1 and is
  /// closed under reciprocal (relative tolerance kReciprocityTolerance).
  explicit JudgmentScale(std::vector<double> points);

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// Index of 1 / points()[i].
  std::size_t reciprocal_index(std::size_t i) const noexcept { return points_.size() - 1 - i; }
  /// z for a saaty() scale, 0 for custom scales.
  int z() const noexcept { return z_; }

 private:
  std::vector<double> points_;
  int z_ = 0;
};

struct ConsistencyReport {
  double lambda_max = 0.0;
  double ci = 0.0;
  /// Present for orders covered by the random-index table (3..15).
  std::optional<double> cr;

  /// Throws UnsupportedOrder when cr is absent.
  double ratio() const;
};

/// Throws NonSquare, TooSmall, NonPositiveEntry, BadDiagonal or
/// ReciprocityViolation (located at the lower-triangle cell).
PairwiseReciprocalMatrix validate_prm(const Matrix& raw);

/// a_ij = w_i / w_j. Throws ZeroWeight if some w_i <= 0.
PairwiseReciprocalMatrix ideal_prm(const PriorityVector& w);

/// Upper-triangle cells drawn uniformly from scale points; the lower triangle
/// takes the matching reciprocal point.
PairwiseReciprocalMatrix random_prm(std::size_t n, const JudgmentScale& scale, std::uint64_t seed);

/// sum_ij (w_i - a_ij w_j)^2. Throws DimensionMismatch.
double wls_objective(const PairwiseReciprocalMatrix& prm, std::span<const double> w);
double wls_objective(const PairwiseReciprocalMatrix& prm, const PriorityVector& w);

/// Saaty random index RI(n) for 3 <= n <= 15; throws UnsupportedOrder.
double random_index(std::size_t n);

ConsistencyReport consistency(const PairwiseReciprocalMatrix& prm, double tol = 1e-10,
                              std::size_t max_iter = 10000);

/// Same PRM with rows and columns reordered: result(i,j) = prm(p[i], p[j]).
PairwiseReciprocalMatrix permute(const PairwiseReciprocalMatrix& prm,
                                 std::span<const std::size_t> p);

/// True when a_ij * a_jk = a_ik within `rel_tol` for all triples.
bool is_consistent(const PairwiseReciprocalMatrix& prm, double rel_tol = 1e-12);

/// FNV-1a over the IEEE bit patterns of the entries, as 16 hex digits.
std::string digest(const PairwiseReciprocalMatrix& prm);

}  // namespace igm
