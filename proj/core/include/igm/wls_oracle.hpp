#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "igm/prm.hpp"

namespace igm {

/// Lower bound kept on every weight during the search (open-set constraint
/// w_i > 0).
inline constexpr double kWeightFloor = 1e-9;

struct OptimizerConfig {
  std::size_t max_evaluations = 500000;
  /// Fractional decrease of the objective over one full direction cycle
  /// below which the search is considered converged.
  double tolerance = 1e-6;
  /// Largest weight change over a cycle that still counts as converged.
  double step_tolerance = 1e-7;
  /// Selects the order of the initial direction set.
  std::uint64_t seed = 0;
  /// Starting weights; uniform when absent.
  std::optional<PriorityVector> initial_point;
};

struct OptimizerResult {
  PriorityVector weights;
  double objective = 0.0;
  std::size_t evaluations = 0;
  std::size_t cycles = 0;
  /// Set when max_evaluations ran out before convergence; `weights` is the
  /// best point found.
  bool budget_exhausted = false;
};

/// Minimizes sum_ij (w_i - a_ij w_j)^2 over the open simplex using only
/// objective evaluations (Powell's conjugate-direction method with Brent line
/// searches). The unity constraint is removed by substituting
/// w_n = 1 - sum_{i<n} w_i; each line search is clipped to the segment where
/// every weight stays >= kWeightFloor, so iterates are always feasible.
OptimizerResult optimize_wls(const PairwiseReciprocalMatrix& prm, const OptimizerConfig& cfg = {});

struct KKTResidual {
  /// ((n-1) + sum_{i != k} a_ik^2) w_k + sum_{i != k} (-a_ik - a_ki) w_i + lambda
  std::vector<double> stationarity;
  /// sum(w) - 1
  double feasibility = 0.0;

  double max_stationarity() const;
};

/// Stationarity and feasibility of the WLS Lagrange system at (w, lambda).
/// `lambda` is the halved multiplier: stationarity is half the raw gradient of
/// the Lagrangian taken with multiplier 2 * lambda.
KKTResidual kkt_residual(const PairwiseReciprocalMatrix& prm, std::span<const double> w, double lambda);

/// y(w, mu) = sum_ij (w_i - a_ij w_j)^2 + mu (sum(w) - 1).
double lagrangian(const PairwiseReciprocalMatrix& prm, std::span<const double> w, double mu);

/// Central differences (f(x + h e_k) - f(x - h e_k)) / 2h for every k.
std::vector<double> central_difference(const std::function<double(std::span<const double>)>& f,
                                       std::span<const double> x, double h);

/// Central-difference gradient of the Lagrangian with multiplier mu = 2 * lambda,
/// so the result approximates 2 * kkt_residual(prm, w, lambda).stationarity.
std::vector<double> finite_diff_gradient(const PairwiseReciprocalMatrix& prm, std::span<const double> w,
                                         double lambda, double h = 1e-6);

}  // namespace igm
