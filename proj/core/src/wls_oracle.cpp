#include "igm/wls_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "igm/error.hpp"
#include "igm/rng.hpp"

namespace igm {

namespace {

using Vec = std::vector<double>;

constexpr double kNoiseFloor = 1e-15;

// Objective over the reduced coordinates y (the first n-1 weights).
class ReducedProblem {
 public:
  ReducedProblem(const PairwiseReciprocalMatrix& prm, std::size_t budget)
      : prm_(prm), budget_(budget), w_(prm.order()) {}

  std::size_t dims() const { return prm_.order() - 1; }
  std::size_t evaluations() const { return evaluations_; }
  bool exhausted() const { return evaluations_ >= budget_; }

  void expand(std::span<const double> y, Vec& w) const {
    double tail = 1.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      w[i] = y[i];
      tail -= y[i];
    }
    w[y.size()] = tail;
  }

  // Past the budget every call returns +inf without evaluating, so a line
  // search in progress can no longer move the iterate.
  double operator()(std::span<const double> y) {
    if (exhausted()) return std::numeric_limits<double>::infinity();
    ++evaluations_;
    expand(y, w_);
    return wls_objective(prm_, w_);
  }

  // Interval [lo, hi] of t for which y + t d keeps every weight >= floor.
  std::pair<double, double> feasible_segment(std::span<const double> y, std::span<const double> d) const {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    double tail = 1.0;
    double tail_dir = 0.0;
    auto clip = [&](double value, double slope) {
      if (slope > 0.0) {
        lo = std::max(lo, (kWeightFloor - value) / slope);
      } else if (slope < 0.0) {
        hi = std::min(hi, (kWeightFloor - value) / slope);
      }
    };
    for (std::size_t i = 0; i < y.size(); ++i) {
      clip(y[i], d[i]);
      tail -= y[i];
      tail_dir -= d[i];
    }
    clip(tail, tail_dir);
    return {std::min(lo, 0.0), std::max(hi, 0.0)};
  }

 private:
  const PairwiseReciprocalMatrix& prm_;
  std::size_t budget_;
  std::size_t evaluations_ = 0;
  Vec w_;
};

// Minimizes along d from y within the feasible segment. Updates y and f and
// returns the step taken.
double line_minimize(ReducedProblem& problem, Vec& y, const Vec& d, double& f) {
  const auto [lo, hi] = problem.feasible_segment(y, d);
  if (!(hi > lo)) return 0.0;
  Vec trial(y.size());
  auto along = [&](double t) {
    for (std::size_t i = 0; i < y.size(); ++i) trial[i] = y[i] + t * d[i];
    return problem(trial);
  };
  boost::uintmax_t max_iter = 200;
  const auto [t, ft] = boost::math::tools::brent_find_minima(
      along, lo, hi, std::numeric_limits<double>::digits / 2, max_iter);
  // Ignore moves that only exploit rounding noise in the objective.
  if (f - ft > kNoiseFloor * std::abs(f)) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * d[i];
    f = ft;
    return t;
  }
  return 0.0;
}

Vec starting_point(const PairwiseReciprocalMatrix& prm, const OptimizerConfig& cfg) {
  const std::size_t n = prm.order();
  Vec w(n, 1.0 / static_cast<double>(n));
  if (cfg.initial_point) {
    if (cfg.initial_point->size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "initial point has the wrong length");
    }
    // Project onto the floored simplex.
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = std::max((*cfg.initial_point)[i], 2.0 * kWeightFloor);
      sum += w[i];
    }
    for (double& v : w) v /= sum;
  }
  return w;
}

}  // namespace

OptimizerResult optimize_wls(const PairwiseReciprocalMatrix& prm, const OptimizerConfig& cfg) {
  if (cfg.max_evaluations < 1) throw Error(ErrorCode::InvalidArgument, "max_evaluations must be >= 1");
  if (!(cfg.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  ReducedProblem problem(prm, cfg.max_evaluations);
  const std::size_t dims = problem.dims();
  const Vec w0 = starting_point(prm, cfg);
  Vec y(w0.begin(), w0.end() - 1);
  double f = problem(y);
  if (!std::isfinite(f)) throw Error(ErrorCode::Infeasible, "objective is not finite at the start point");

  // Coordinate directions in a seed-dependent order.
  std::vector<std::size_t> order(dims);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Engine eng(cfg.seed);
  for (std::size_t i = dims; i > 1; --i) {
    std::swap(order[i - 1], order[static_cast<std::size_t>(uniform_index(eng, i))]);
  }
  auto basis = [&] {
    std::vector<Vec> dirs(dims, Vec(dims, 0.0));
    for (std::size_t k = 0; k < dims; ++k) dirs[k][order[k]] = 1.0;
    return dirs;
  };
  std::vector<Vec> dirs = basis();

  constexpr double kTiny = 1e-30;
  std::size_t cycles = 0;
  bool confirming = false;
  bool converged = false;
  Vec start = y;
  while (!problem.exhausted()) {
    ++cycles;
    const double f_start = f;
    start = y;
    double biggest_drop = 0.0;
    std::size_t biggest = 0;
    for (std::size_t k = 0; k < dims && !problem.exhausted(); ++k) {
      const double before = f;
      line_minimize(problem, y, dirs[k], f);
      if (before - f > biggest_drop) {
        biggest_drop = before - f;
        biggest = k;
      }
    }

    double step = 0.0;
    for (std::size_t i = 0; i < dims; ++i) step = std::max(step, std::abs(y[i] - start[i]));
    const bool small_drop = 2.0 * (f_start - f) <= cfg.tolerance * (std::abs(f_start) + std::abs(f)) + kTiny;
    // Quadratic termination needs at least `dims` conjugate cycles.
    if (small_drop && step <= cfg.step_tolerance && cycles > dims) {
      if (confirming) {
        converged = true;
        break;
      }
      // Confirm from a fresh coordinate basis before stopping.
      confirming = true;
      dirs = basis();
      continue;
    }
    confirming = false;

    // Powell's direction replacement with the extrapolation test.
    Vec shift(dims);
    Vec extrapolated(dims);
    for (std::size_t i = 0; i < dims; ++i) {
      shift[i] = y[i] - start[i];
      extrapolated[i] = y[i] + shift[i];
    }
    if (step == 0.0 || problem.exhausted()) continue;
    if (problem.feasible_segment(y, shift).second < 1.0) continue;
    const double f_ext = problem(extrapolated);
    if (f_ext < f_start) {
      const double a = f_start - f - biggest_drop;
      const double b = f_start - f_ext;
      const double test = 2.0 * (f_start - 2.0 * f + f_ext) * a * a - biggest_drop * b * b;
      if (test < 0.0) {
        line_minimize(problem, y, shift, f);
        dirs[biggest] = dirs.back();
        dirs.back() = shift;
      }
    }
  }

  Vec w(prm.order());
  problem.expand(y, w);
  return OptimizerResult{PriorityVector::normalize(std::move(w)), f, problem.evaluations(), cycles, !converged};
}

double KKTResidual::max_stationarity() const {
  double best = 0.0;
  for (double s : stationarity) best = std::max(best, std::abs(s));
  return best;
}

KKTResidual kkt_residual(const PairwiseReciprocalMatrix& prm, std::span<const double> w, double lambda) {
  const std::size_t n = prm.order();
  if (w.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "weight vector has " + std::to_string(w.size()) +
                                                  " entries for a matrix of order " + std::to_string(n));
  }
  KKTResidual res;
  res.stationarity.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double diag = static_cast<double>(n - 1);
    double cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      diag += prm(i, k) * prm(i, k);
      cross += (-prm(i, k) - prm(k, i)) * w[i];
    }
    res.stationarity[k] = diag * w[k] + cross + lambda;
  }
  res.feasibility = std::accumulate(w.begin(), w.end(), 0.0) - 1.0;
  return res;
}

double lagrangian(const PairwiseReciprocalMatrix& prm, std::span<const double> w, double mu) {
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  return wls_objective(prm, w) + mu * (sum - 1.0);
}

std::vector<double> central_difference(const std::function<double(std::span<const double>)>& f,
                                       std::span<const double> x, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "step h must be positive");
  std::vector<double> point(x.begin(), x.end());
  std::vector<double> grad(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    point[k] = x[k] + h;
    const double up = f(point);
    point[k] = x[k] - h;
    const double down = f(point);
    point[k] = x[k];
    grad[k] = (up - down) / (2.0 * h);
  }
  return grad;
}

std::vector<double> finite_diff_gradient(const PairwiseReciprocalMatrix& prm, std::span<const double> w,
                                         double lambda, double h) {
  if (w.size() != prm.order()) throw Error(ErrorCode::DimensionMismatch, "weight vector length mismatch");
  // kkt_residual absorbs a factor 2 into the multiplier; undo it here.
  const double mu = 2.0 * lambda;
  return central_difference([&](std::span<const double> p) { return lagrangian(prm, p, mu); }, w, h);
}

}  // namespace igm
