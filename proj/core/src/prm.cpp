#include "igm/prm.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "igm/error.hpp"
#include "igm/linalg.hpp"
#include "igm/rng.hpp"

namespace igm {

class PrmBuilder {
 public:
  static PairwiseReciprocalMatrix make(Matrix m) { return PairwiseReciprocalMatrix(std::move(m)); }
};

PriorityVector::PriorityVector(std::vector<double> weights, std::optional<double> multiplier)
    : weights_(std::move(weights)), multiplier_(multiplier) {
  if (weights_.empty()) throw Error(ErrorCode::InvalidArgument, "empty weight vector");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "non-finite weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "weights sum to %.17g", sum);
    throw Error(ErrorCode::NotNormalized, buf);
  }
  if (multiplier_ && !std::isfinite(*multiplier_)) {
    throw Error(ErrorCode::InvalidArgument, "non-finite multiplier");
  }
}

PriorityVector PriorityVector::normalize(std::vector<double> raw) {
  const double sum = std::accumulate(raw.begin(), raw.end(), 0.0);
  if (!std::isfinite(sum) || sum == 0.0) {
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a vector with zero or non-finite sum");
  }
  for (double& v : raw) v /= sum;
  return PriorityVector(std::move(raw));
}

JudgmentScale JudgmentScale::saaty(int z) {
  if (z < 1) throw Error(ErrorCode::InvalidArgument, "scale size must be at least 1");
  std::vector<double> pts;
  pts.reserve(2 * static_cast<std::size_t>(z) - 1);
  for (int k = z; k >= 2; --k) pts.push_back(1.0 / k);
  for (int k = 1; k <= z; ++k) pts.push_back(static_cast<double>(k));
  JudgmentScale s(std::move(pts));
  s.z_ = z;
  return s;
}

JudgmentScale::JudgmentScale(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "empty judgment scale");
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  bool has_one = false;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double p = points_[i];
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw Error(ErrorCode::InvalidArgument, "judgment scale points must be positive and finite");
    }
    has_one = has_one || p == 1.0;
    const double mirror = points_[reciprocal_index(i)];
    if (std::abs(p * mirror - 1.0) > kReciprocityTolerance) {
      throw Error(ErrorCode::InvalidArgument, "judgment scale is not closed under reciprocal");
    }
  }
  if (!has_one) throw Error(ErrorCode::InvalidArgument, "judgment scale must contain 1");
}

double ConsistencyReport::ratio() const {
  if (!cr) throw Error(ErrorCode::UnsupportedOrder, "no random index for this order");
  return *cr;
}

PairwiseReciprocalMatrix validate_prm(const Matrix& raw) {
  if (!raw.is_square()) {
    throw Error(ErrorCode::NonSquare, "matrix is " + std::to_string(raw.rows()) + "x" +
                                          std::to_string(raw.cols()));
  }
  const std::size_t n = raw.rows();
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least 2 criteria");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double a = raw(i, j);
      if (!std::isfinite(a) || a <= 0.0) {
        throw Error(ErrorCode::NonPositiveEntry, "entries must be positive and finite",
                    CellLocation{i + 1, j + 1});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (raw(i, i) != 1.0) {
      throw Error(ErrorCode::BadDiagonal, "diagonal entries must equal 1", CellLocation{i + 1, i + 1});
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double product = raw(i, j) * raw(j, i);
      if (std::abs(product - 1.0) > kReciprocityTolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "a_%zu%zu * a_%zu%zu = %.17g, expected 1", i + 1, j + 1,
                      j + 1, i + 1, product);
        throw Error(ErrorCode::ReciprocityViolation, buf, CellLocation{i + 1, j + 1});
      }
    }
  }
  return PrmBuilder::make(raw);
}

PairwiseReciprocalMatrix ideal_prm(const PriorityVector& w) {
  const std::size_t n = w.size();
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least 2 weights");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > 0.0)) throw Error(ErrorCode::ZeroWeight, "weight " + std::to_string(i + 1) + " is not positive");
  }
  Matrix m(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = w[i] / w[j];
      m(j, i) = w[j] / w[i];
    }
  }
  return PrmBuilder::make(std::move(m));
}

PairwiseReciprocalMatrix random_prm(std::size_t n, const JudgmentScale& scale, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least 2 criteria");
  Engine eng(seed);
  Matrix m(n, n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto k = static_cast<std::size_t>(uniform_index(eng, scale.size()));
      m(i, j) = scale.points()[k];
      m(j, i) = scale.points()[scale.reciprocal_index(k)];
    }
  }
  return PrmBuilder::make(std::move(m));
}

double wls_objective(const PairwiseReciprocalMatrix& prm, std::span<const double> w) {
  const std::size_t n = prm.order();
  if (w.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector has " + std::to_string(w.size()) +
                                                  " entries for a matrix of order " + std::to_string(n));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double r = w[i] - prm(i, j) * w[j];
      total += r * r;
    }
  }
  return total;
}

double wls_objective(const PairwiseReciprocalMatrix& prm, const PriorityVector& w) {
  return wls_objective(prm, w.weights());
}

double random_index(std::size_t n) {
  static constexpr std::array<double, 13> kTable = {0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45,
                                                    1.49, 1.51, 1.48, 1.56, 1.57, 1.59};
  if (n < 3 || n > 15) {
    throw Error(ErrorCode::UnsupportedOrder,
                "random index is tabulated for orders 3..15, got " + std::to_string(n));
  }
  return kTable[n - 3];
}

ConsistencyReport consistency(const PairwiseReciprocalMatrix& prm, double tol, std::size_t max_iter) {
  const std::size_t n = prm.order();
  const auto eig = principal_eigen(prm.entries(), tol, max_iter);
  ConsistencyReport rep;
  rep.lambda_max = eig.value;
  rep.ci = (eig.value - static_cast<double>(n)) / static_cast<double>(n - 1);
  if (n >= 3 && n <= 15) rep.cr = rep.ci / random_index(n);
  return rep;
}

PairwiseReciprocalMatrix permute(const PairwiseReciprocalMatrix& prm, std::span<const std::size_t> p) {
  const std::size_t n = prm.order();
  if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "permutation length mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = prm(p[i], p[j]);
  return PrmBuilder::make(std::move(m));
}

bool is_consistent(const PairwiseReciprocalMatrix& prm, double rel_tol) {
  const std::size_t n = prm.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double lhs = prm(i, j) * prm(j, k);
        if (std::abs(lhs - prm(i, k)) > rel_tol * prm(i, k)) return false;
      }
  return true;
}

std::string digest(const PairwiseReciprocalMatrix& prm) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(prm.order());
  for (double v : prm.entries().data()) mix(std::bit_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace igm
