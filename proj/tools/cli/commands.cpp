#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "igm/methods.hpp"
#include "igm/simulation.hpp"
#include "igm/wls_oracle.hpp"

namespace igm::cli {

namespace {

std::string fixed(double v, int places) {
  // Avoid printing "-0.000".
  if (std::fabs(v) < 0.5 * std::pow(10.0, -places)) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

double rounded(double v, int places) { return std::stod(fixed(v, places)); }

SolveOutput from_method(const PairwiseReciprocalMatrix& prm, const MethodResult& res) {
  SolveOutput out;
  out.label = res.label();
  out.weights.assign(res.weights.weights().begin(), res.weights.weights().end());
  out.lambda = res.multiplier();
  out.wls_objective = wls_objective(prm, res.weights);
  for (const auto d : res.diagnostics) out.warnings.emplace_back(to_string(d));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

struct SimulateOptions {
  std::string mode = "igm-equivalence";
  std::size_t samples = 1;
  std::size_t n_max = 15;
  int scale = 9;
  std::optional<int> epsilon;
  std::uint64_t seed = 0;
  double r_min = -1000.0;
  double r_max = 1000.0;
  std::optional<std::filesystem::path> out_dir;
  std::size_t workers = 1;
  bool timings = false;
  std::optional<std::size_t> trial;
  std::string wls_start = "closed-form";
};

VerificationConfig make_config(const SimulateOptions& o) {
  auto cfg = o.mode == "wls-oracle" ? VerificationConfig::wls_oracle(o.samples, o.seed)
                                    : VerificationConfig::igm_equivalence(o.samples, o.seed);
  cfg.n_max = o.n_max;
  cfg.scale_z = o.scale;
  if (o.epsilon) cfg.epsilon = *o.epsilon;
  cfg.r_min = o.r_min;
  cfg.r_max = o.r_max;
  cfg.workers = o.workers;
  cfg.wls_start = o.wls_start == "uniform" ? WlsStart::Uniform : WlsStart::ClosedForm;
  cfg.validate();
  return cfg;
}

int run_simulate(const SimulateOptions& o, std::ostream& out, std::ostream& err) {
  const auto cfg = make_config(o);

  if (o.trial) {
    SimulationReport single;
    single.config = cfg;
    single.trials.push_back(run_trial(cfg, *o.trial));
    const auto& t = single.trials.front();
    out << trials_csv(single, o.timings);
    if (t.status == TrialStatus::Ok) return kExitOk;
    err << "discrepancy: " << reproduction_line(cfg, t) << '\n';
    return kExitDiscrepancy;
  }

  const auto report = run_verification(cfg);

  if (o.out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*o.out_dir, ec);
    if (ec) throw IoError("cannot create '" + o.out_dir->string() + "': " + ec.message());
    write_file(*o.out_dir / "trials.csv", trials_csv(report, o.timings));
    write_file(*o.out_dir / "summary.json", summary_json(report) + "\n");
  }

  out << to_string(cfg.mode) << ": " << report.trials.size() << " of " << cfg.samples << " trials, "
      << (report.error_detected ? "discrepancy found" : "no discrepancy");
  if (report.budget_exhausted_trials > 0) out << ", " << report.budget_exhausted_trials << " budget-exhausted";
  out << '\n';
  if (report.first_failure) {
    err << "first failure: " << reproduction_line(cfg, *report.first_failure) << '\n';
    return kExitDiscrepancy;
  }
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix:
    case ErrorCode::ZeroShiftOnConsistent:
    case ErrorCode::NoConvergence:
    case ErrorCode::Infeasible:
      return kExitNumerical;
    case ErrorCode::NonSquare:
    case ErrorCode::TooSmall:
    case ErrorCode::NonPositiveEntry:
    case ErrorCode::ReciprocityViolation:
    case ErrorCode::BadDiagonal:
    case ErrorCode::ZeroWeight:
    case ErrorCode::NotNormalized:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::UnsupportedOrder:
    case ErrorCode::ZeroShift:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
  }
  return kExitUnexpected;
}

SolveOutput run_solve(const PairwiseReciprocalMatrix& prm, const SolveOptions& opts) {
  SolveOutput out;
  const auto& m = opts.method;
  if (m == "pigm") {
    out = from_method(prm, pigm(prm));
  } else if (m == "nigm") {
    out = from_method(prm, nigm(prm, opts.r.value_or(1.0)));
  } else if (m == "ligm") {
    out = from_method(prm, ligm(prm, opts.r.value_or(0.0)));
  } else if (m == "blankmeyer") {
    out = from_method(prm, blankmeyer(prm));
  } else if (m == "wls") {
    OptimizerConfig oc;
    oc.seed = opts.seed;
    const auto res = optimize_wls(prm, oc);
    out.label = "WLS";
    out.weights.assign(res.weights.weights().begin(), res.weights.weights().end());
    out.wls_objective = res.objective;
    if (res.budget_exhausted) out.warnings.emplace_back("BudgetExhausted");
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + m + "'");
  }
  out.consistency = consistency(prm);
  return out;
}

SolveOutput run_solve(const SolveOptions& opts) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(opts.input, ec)) {
    throw IoError("cannot read '" + opts.input.string() + "'");
  }
  return run_solve(parse_matrix(opts.input, opts.format).prm, opts);
}

std::string render_table(const SolveOutput& out) {
  std::ostringstream os;
  os << "method      " << out.label << '\n';
  for (std::size_t i = 0; i < out.weights.size(); ++i) {
    os << "w" << i + 1 << std::string(i + 1 < 10 ? 10 : 9, ' ') << fixed(out.weights[i], 3) << '\n';
  }
  if (out.lambda) os << "lambda      " << fixed(*out.lambda, 3) << '\n';
  os << "objective   " << fixed(out.wls_objective, 3) << '\n';
  os << "lambda_max  " << fixed(out.consistency.lambda_max, 3) << '\n';
  os << "CI          " << fixed(out.consistency.ci, 3) << '\n';
  os << "CR          " << (out.consistency.cr ? fixed(*out.consistency.cr, 3) : std::string("n/a")) << '\n';
  for (const auto& w : out.warnings) os << "warning     " << w << '\n';
  return os.str();
}

nlohmann::ordered_json to_json(const SolveOutput& out) {
  nlohmann::ordered_json j;
  j["method"] = out.label;
  auto& w = j["weights"] = nlohmann::ordered_json::array();
  for (double v : out.weights) w.push_back(rounded(v, 12));
  j["lambda"] = out.lambda ? nlohmann::ordered_json(rounded(*out.lambda, 12)) : nlohmann::ordered_json(nullptr);
  j["wls_objective"] = rounded(out.wls_objective, 12);
  j["consistency"] = {
      {"lambda_max", rounded(out.consistency.lambda_max, 12)},
      {"ci", rounded(out.consistency.ci, 12)},
      {"cr", out.consistency.cr ? nlohmann::ordered_json(rounded(*out.consistency.cr, 12))
                                : nlohmann::ordered_json(nullptr)},
  };
  j["warnings"] = out.warnings;
  return j;
}

std::string render_json(const SolveOutput& out) { return to_json(out).dump(2) + "\n"; }

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Priority weights for pairwise reciprocal matrices via inverse Gram matrices", "igm"};
  app.require_subcommand(1);

  SolveOptions solve;
  std::string format;
  bool as_json = false;
  auto* solve_cmd = app.add_subcommand("solve", "Derive weights from a comparison matrix file");
  solve_cmd->add_option("--input", solve.input, "Matrix file (CSV or JSON)")->required();
  solve_cmd->add_option("--format", format, "Input format; guessed from the extension when omitted")
      ->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_option("--method", solve.method, "Prioritization method")
      ->check(CLI::IsMember({"pigm", "nigm", "ligm", "blankmeyer", "wls"}))
      ->capture_default_str();
  solve_cmd->add_option("--r", solve.r, "Shift for nigm (default 1) or ligm (default 0)");
  solve_cmd->add_option("--seed", solve.seed, "Optimizer seed for wls")->capture_default_str();
  solve_cmd->add_flag("--json", as_json, "Machine-readable output");

  SimulateOptions sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run a randomized verification");
  sim_cmd->add_option("--mode", sim.mode, "Verification kind")
      ->check(CLI::IsMember({"igm-equivalence", "wls-oracle"}))
      ->capture_default_str();
  sim_cmd->add_option("--samples", sim.samples, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_option("--nmax", sim.n_max, "Largest matrix order")->capture_default_str();
  sim_cmd->add_option("--scale", sim.scale, "Judgment scale size z")->capture_default_str();
  sim_cmd->add_option("--epsilon", sim.epsilon, "Decimal places compared (default 8, or 4 for wls-oracle)");
  sim_cmd->add_option("--seed", sim.seed, "Master seed")->capture_default_str();
  sim_cmd->add_option("--r-min", sim.r_min, "Lower end of the shift range")->capture_default_str();
  sim_cmd->add_option("--r-max", sim.r_max, "Upper end of the shift range")->capture_default_str();
  sim_cmd->add_option("--out", sim.out_dir, "Directory for trials.csv and summary.json");
  sim_cmd->add_option("--workers", sim.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sim_cmd->add_flag("--timings", sim.timings, "Add elapsed_ms to the trials CSV");
  sim_cmd->add_option("--trial", sim.trial, "Replay one trial by index and print its CSV row");
  sim_cmd->add_option("--wls-start", sim.wls_start, "Optimizer start in wls-oracle mode")
      ->check(CLI::IsMember({"closed-form", "uniform"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      if (!format.empty()) solve.format = format == "json" ? MatrixFormat::Json : MatrixFormat::Csv;
      const auto result = run_solve(solve);
      out << (as_json ? render_json(result) : render_table(result));
      return kExitOk;
    }
    return run_simulate(sim, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const IoError& e) {
    err << "error: IoError: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: unexpected: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

}  // namespace igm::cli
