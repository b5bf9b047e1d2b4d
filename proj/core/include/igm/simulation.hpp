#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "igm/prm.hpp"
#include "igm/wls_oracle.hpp"

namespace igm {

enum class VerificationMode { IgmEquivalence, WlsOracle };

/// Where the WLS optimizer starts in WlsOracle mode.
enum class WlsStart {
  ClosedForm,  // PIGM weights
  Uniform,
};

std::string_view to_string(VerificationMode m) noexcept;
std::string_view to_string(WlsStart s) noexcept;

struct VerificationConfig {
  std::size_t samples = 1;
  std::size_t n_max = 15;
  int scale_z = 9;
  VerificationMode mode = VerificationMode::IgmEquivalence;
  /// Decimal places for the rounded comparison.
  int epsilon = 8;
  std::uint64_t master_seed = 0;
  double r_min = -1000.0;
  double r_max = 1000.0;
  /// Draws with |r| below this are redrawn.
  double r_guard = 1e-6;
  std::size_t workers = 1;
  OptimizerConfig optimizer{};
  WlsStart wls_start = WlsStart::ClosedForm;

  static VerificationConfig igm_equivalence(std::size_t samples, std::uint64_t seed);
  static VerificationConfig wls_oracle(std::size_t samples, std::uint64_t seed);

  /// Throws InvalidArgument on out-of-range fields.
  void validate() const;
};

enum class TrialStatus { Ok, Discrepancy, MethodError };

std::string_view to_string(TrialStatus s) noexcept;

struct MethodWeights {
  std::string label;
  std::vector<double> weights;
};

struct TrialRecord {
  std::size_t index = 0;
  std::size_t n = 0;
  double r = 0.0;
  std::uint64_t seed = 0;
  std::size_t r_redraws = 0;
  std::string prm_digest;
  std::vector<MethodWeights> methods;
  /// Rounded discrepancy; +inf when a method threw.
  double discrepancy = 0.0;
  TrialStatus status = TrialStatus::Ok;
  std::string message;
  // WlsOracle mode only.
  std::optional<double> objective_closed_form;
  std::optional<double> objective_wls;
  std::size_t evaluations = 0;
  bool budget_exhausted = false;
  std::chrono::duration<double, std::milli> elapsed{0};
};

struct SimulationReport {
  VerificationConfig config;
  std::vector<TrialRecord> trials;
  bool error_detected = false;
  std::optional<TrialRecord> first_failure;
  std::size_t budget_exhausted_trials = 0;
  std::size_t r_redraws = 0;
  std::chrono::duration<double, std::milli> total_elapsed{0};
};

/// Rounds every component to `epsilon` places (half away from zero), sums the
/// absolute componentwise differences of each vector in `others` against
/// `reference`, and rounds the total to `epsilon - 1` places.
double rounded_discrepancy(std::span<const double> reference,
                           const std::vector<std::vector<double>>& others, int epsilon);
double rounded_discrepancy(const PriorityVector& reference, const std::vector<PriorityVector>& others,
                           int epsilon);

/// Decimal rounding, half away from zero.
double round_to(double x, int places);

/// The prioritization routines the equivalence run compares. Tests swap in
/// faulty doubles to check the harness catches them.
struct MethodSuite {
  std::function<PriorityVector(const PairwiseReciprocalMatrix&)> pigm;
  std::function<PriorityVector(const PairwiseReciprocalMatrix&, double)> nigm;
  std::function<PriorityVector(const PairwiseReciprocalMatrix&, double)> ligm;

  static MethodSuite library();
};

/// Per-trial stream seed: derive_seed(master_seed, index). Within a trial the
/// engine seeded with it draws, in order: n, r (with redraws), the PRM seed,
/// and the optimizer seed.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index);

/// Runs the single trial `index` of `cfg` (replay entry point).
TrialRecord run_trial(const VerificationConfig& cfg, std::size_t index,
                      const MethodSuite& suite = MethodSuite::library());

/// PIGM vs NIGM(r) vs LIGM(0) vs LIGM(r) on random PRMs; stops at the first
/// nonzero discrepancy or after cfg.samples trials.
SimulationReport run_igm_equivalence(const VerificationConfig& cfg,
                                     const MethodSuite& suite = MethodSuite::library());

/// Independent WLS optimizer vs PIGM on random PRMs, same stop rule.
SimulationReport run_wls_verification(const VerificationConfig& cfg);

/// Dispatches on cfg.mode.
SimulationReport run_verification(const VerificationConfig& cfg);

// Report files. The trials CSV is deterministic unless `with_timing` adds the
// elapsed_ms column.
void write_trials_csv(std::ostream& out, const SimulationReport& report, bool with_timing = false);
std::string trials_csv(const SimulationReport& report, bool with_timing = false);
/// Summary document; `with_timing` adds total_elapsed_ms.
std::string summary_json(const SimulationReport& report, bool with_timing = true);
/// One-line description of a trial sufficient to replay it.
std::string reproduction_line(const VerificationConfig& cfg, const TrialRecord& trial);

}  // namespace igm
