#include "igm/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

#include "igm/error.hpp"
#include "igm/methods.hpp"
#include "igm/rng.hpp"

namespace igm {

std::string_view to_string(VerificationMode m) noexcept {
  return m == VerificationMode::IgmEquivalence ? "igm-equivalence" : "wls-oracle";
}

std::string_view to_string(WlsStart s) noexcept {
  return s == WlsStart::ClosedForm ? "closed-form" : "uniform";
}

std::string_view to_string(TrialStatus s) noexcept {
  switch (s) {
    case TrialStatus::Ok: return "ok";
    case TrialStatus::Discrepancy: return "discrepancy";
    case TrialStatus::MethodError: return "method-error";
  }
  return "?";
}

VerificationConfig VerificationConfig::igm_equivalence(std::size_t samples, std::uint64_t seed) {
  VerificationConfig cfg;
  cfg.samples = samples;
  cfg.master_seed = seed;
  cfg.mode = VerificationMode::IgmEquivalence;
  cfg.epsilon = 8;
  return cfg;
}

VerificationConfig VerificationConfig::wls_oracle(std::size_t samples, std::uint64_t seed) {
  VerificationConfig cfg;
  cfg.samples = samples;
  cfg.master_seed = seed;
  cfg.mode = VerificationMode::WlsOracle;
  cfg.epsilon = 4;
  return cfg;
}

void VerificationConfig::validate() const {
  auto fail = [](const char* what) { throw Error(ErrorCode::InvalidArgument, what); };
  if (samples < 1) fail("sample count must be at least 1");
  if (n_max < 3) fail("n_max must be at least 3");
  if (scale_z < 1) fail("scale must have at least one point");
  if (epsilon < 1) fail("epsilon must be at least 1");
  if (!(r_min < r_max) || !std::isfinite(r_min) || !std::isfinite(r_max)) fail("r range is empty");
  if (!(r_guard >= 0.0)) fail("r guard must be nonnegative");
  if (std::max(std::abs(r_min), std::abs(r_max)) <= r_guard) fail("r range lies inside the zero guard");
  if (workers < 1) fail("worker count must be at least 1");
  if (optimizer.max_evaluations < 1) fail("optimizer budget must be at least 1");
  if (!(optimizer.tolerance > 0.0)) fail("optimizer tolerance must be positive");
}

double round_to(double x, int places) {
  const double scale = std::pow(10.0, places);
  // std::round rounds halfway cases away from zero.
  return std::round(x * scale) / scale;
}

double rounded_discrepancy(std::span<const double> reference,
                           const std::vector<std::vector<double>>& others, int epsilon) {
  if (epsilon < 1) throw Error(ErrorCode::InvalidArgument, "epsilon must be at least 1");
  double total = 0.0;
  for (const auto& other : others) {
    if (other.size() != reference.size()) {
      throw Error(ErrorCode::DimensionMismatch, "compared weight vectors differ in length");
    }
    for (std::size_t i = 0; i < reference.size(); ++i) {
      total += std::abs(round_to(reference[i], epsilon) - round_to(other[i], epsilon));
    }
  }
  return round_to(total, epsilon - 1);
}

double rounded_discrepancy(const PriorityVector& reference, const std::vector<PriorityVector>& others,
                           int epsilon) {
  std::vector<std::vector<double>> raw;
  raw.reserve(others.size());
  for (const auto& o : others) raw.emplace_back(o.weights().begin(), o.weights().end());
  return rounded_discrepancy(reference.weights(), raw, epsilon);
}

MethodSuite MethodSuite::library() {
  MethodSuite s;
  s.pigm = [](const PairwiseReciprocalMatrix& a) { return igm::pigm(a).weights; };
  s.nigm = [](const PairwiseReciprocalMatrix& a, double r) { return igm::nigm(a, r).weights; };
  s.ligm = [](const PairwiseReciprocalMatrix& a, double r) { return igm::ligm(a, r).weights; };
  return s;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index) {
  return derive_seed(master_seed, index);
}

namespace {

std::vector<double> copy_weights(const PriorityVector& w) { return {w.weights().begin(), w.weights().end()}; }

std::string shift_label(const char* name, double r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(%.6g)", name, r);
  return buf;
}

TrialRecord execute_trial(const VerificationConfig& cfg, const JudgmentScale& scale, std::size_t index,
                          const MethodSuite& suite) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(cfg.master_seed, index);
  Engine eng(rec.seed);
  rec.n = 3 + static_cast<std::size_t>(uniform_index(eng, cfg.n_max - 2));
  do {
    rec.r = uniform_real(eng, cfg.r_min, cfg.r_max);
    if (std::abs(rec.r) < cfg.r_guard || rec.r == 0.0) {
      ++rec.r_redraws;
      continue;
    }
    break;
  } while (true);
  const std::uint64_t prm_seed = eng();
  const std::uint64_t optimizer_seed = eng();
  const auto prm = random_prm(rec.n, scale, prm_seed);
  rec.prm_digest = digest(prm);

  const auto started = std::chrono::steady_clock::now();
  try {
    if (cfg.mode == VerificationMode::IgmEquivalence) {
      const auto p = suite.pigm(prm);
      const auto nr = suite.nigm(prm, rec.r);
      const auto l0 = suite.ligm(prm, 0.0);
      const auto lr = suite.ligm(prm, rec.r);
      rec.methods = {{"PIGM", copy_weights(p)},
                     {shift_label("NIGM", rec.r), copy_weights(nr)},
                     {"LIGM(0)", copy_weights(l0)},
                     {shift_label("LIGM", rec.r), copy_weights(lr)}};
      rec.discrepancy = rounded_discrepancy(p, {nr, l0, lr}, cfg.epsilon);
    } else {
      const auto closed = suite.pigm(prm);
      OptimizerConfig opt = cfg.optimizer;
      opt.seed = optimizer_seed;
      if (cfg.wls_start == WlsStart::ClosedForm) opt.initial_point = closed;
      const auto found = optimize_wls(prm, opt);
      rec.methods = {{"WLS", copy_weights(found.weights)}, {"PIGM", copy_weights(closed)}};
      rec.objective_closed_form = wls_objective(prm, closed);
      rec.objective_wls = found.objective;
      rec.evaluations = found.evaluations;
      rec.budget_exhausted = found.budget_exhausted;
      rec.discrepancy = rounded_discrepancy(found.weights, {closed}, cfg.epsilon);
    }
    rec.status = rec.discrepancy == 0.0 ? TrialStatus::Ok : TrialStatus::Discrepancy;
  } catch (const Error& e) {
    rec.status = TrialStatus::MethodError;
    rec.discrepancy = std::numeric_limits<double>::infinity();
    rec.message = e.what();
  }
  rec.elapsed = std::chrono::steady_clock::now() - started;
  return rec;
}

SimulationReport run_loop(const VerificationConfig& cfg, const MethodSuite& suite) {
  cfg.validate();
  const auto scale = JudgmentScale::saaty(cfg.scale_z);
  const std::size_t total = cfg.samples;
  const auto started = std::chrono::steady_clock::now();

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{total};
  std::mutex merge_mutex;
  std::vector<TrialRecord> all;

  auto worker = [&] {
    std::vector<TrialRecord> local;
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total || i > stop_at.load()) break;
      auto rec = execute_trial(cfg, scale, i, suite);
      if (rec.discrepancy != 0.0) {
        std::size_t seen = stop_at.load();
        while (i < seen && !stop_at.compare_exchange_weak(seen, i)) {
        }
      }
      local.push_back(std::move(rec));
    }
    std::lock_guard lock(merge_mutex);
    for (auto& r : local) all.push_back(std::move(r));
  };

  if (cfg.workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < cfg.workers; ++w) pool.emplace_back(worker);
  }

  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  const std::size_t last = stop_at.load();
  std::erase_if(all, [last](const TrialRecord& r) { return r.index > last; });

  SimulationReport report;
  report.config = cfg;
  report.trials = std::move(all);
  for (const auto& t : report.trials) {
    report.r_redraws += t.r_redraws;
    if (t.budget_exhausted) ++report.budget_exhausted_trials;
    if (t.discrepancy != 0.0 && !report.first_failure) report.first_failure = t;
  }
  report.error_detected = report.first_failure.has_value();
  report.total_elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

}  // namespace

TrialRecord run_trial(const VerificationConfig& cfg, std::size_t index, const MethodSuite& suite) {
  cfg.validate();
  return execute_trial(cfg, JudgmentScale::saaty(cfg.scale_z), index, suite);
}

SimulationReport run_igm_equivalence(const VerificationConfig& cfg, const MethodSuite& suite) {
  if (cfg.mode != VerificationMode::IgmEquivalence) {
    throw Error(ErrorCode::InvalidArgument, "configuration is not in igm-equivalence mode");
  }
  return run_loop(cfg, suite);
}

SimulationReport run_wls_verification(const VerificationConfig& cfg) {
  if (cfg.mode != VerificationMode::WlsOracle) {
    throw Error(ErrorCode::InvalidArgument, "configuration is not in wls-oracle mode");
  }
  return run_loop(cfg, MethodSuite::library());
}

SimulationReport run_verification(const VerificationConfig& cfg) {
  return cfg.mode == VerificationMode::IgmEquivalence ? run_igm_equivalence(cfg)
                                                      : run_wls_verification(cfg);
}

}  // namespace igm
