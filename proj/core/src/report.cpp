#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "igm/simulation.hpp"

namespace igm {

namespace {

std::string fmt_g17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_weight(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string fmt_seed(std::uint64_t s) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016" PRIx64, s);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json number_or_string(double v) {
  if (std::isfinite(v)) return v;
  return fmt_g17(v);
}

}  // namespace

void write_trials_csv(std::ostream& out, const SimulationReport& report, bool with_timing) {
  out << "index,n,r,seed,prm_digest,methods,weights,discrepancy,status,"
         "objective_closed_form,objective_wls,evaluations,budget_exhausted,message";
  if (with_timing) out << ",elapsed_ms";
  out << '\n';
  for (const auto& t : report.trials) {
    std::string labels;
    std::string weights;
    for (std::size_t m = 0; m < t.methods.size(); ++m) {
      if (m > 0) {
        labels += '|';
        weights += '|';
      }
      labels += t.methods[m].label;
      for (std::size_t i = 0; i < t.methods[m].weights.size(); ++i) {
        if (i > 0) weights += ';';
        weights += fmt_weight(t.methods[m].weights[i]);
      }
    }
    out << t.index << ',' << t.n << ',' << fmt_g17(t.r) << ',' << fmt_seed(t.seed) << ','
        << t.prm_digest << ',' << csv_quote(labels) << ',' << weights << ','
        << fmt_g17(t.discrepancy) << ',' << to_string(t.status) << ','
        << (t.objective_closed_form ? fmt_g17(*t.objective_closed_form) : "") << ','
        << (t.objective_wls ? fmt_g17(*t.objective_wls) : "") << ',' << t.evaluations << ','
        << (t.budget_exhausted ? "true" : "false") << ',' << csv_quote(t.message);
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", t.elapsed.count());
      out << ',' << buf;
    }
    out << '\n';
  }
}

std::string trials_csv(const SimulationReport& report, bool with_timing) {
  std::ostringstream os;
  write_trials_csv(os, report, with_timing);
  return os.str();
}

std::string reproduction_line(const VerificationConfig& cfg, const TrialRecord& t) {
  std::ostringstream os;
  os << "trial " << t.index << ": n=" << t.n << " r=" << fmt_g17(t.r) << " seed=" << fmt_seed(t.seed)
     << " digest=" << t.prm_digest << " discrepancy=" << fmt_g17(t.discrepancy) << " status="
     << to_string(t.status);
  if (!t.message.empty()) os << " (" << t.message << ")";
  os << "; replay: igm simulate --mode " << to_string(cfg.mode) << " --seed " << cfg.master_seed
     << " --nmax " << cfg.n_max << " --scale " << cfg.scale_z << " --epsilon " << cfg.epsilon
     << " --r-min " << fmt_g17(cfg.r_min) << " --r-max " << fmt_g17(cfg.r_max);
  if (cfg.mode == VerificationMode::WlsOracle) os << " --wls-start " << to_string(cfg.wls_start);
  os << " --trial " << t.index;
  return os.str();
}

std::string summary_json(const SimulationReport& report, bool with_timing) {
  using json = nlohmann::ordered_json;
  const auto& c = report.config;
  json doc;
  doc["config"] = {
      {"mode", std::string(to_string(c.mode))},
      {"samples", c.samples},
      {"n_max", c.n_max},
      {"scale_z", c.scale_z},
      {"epsilon", c.epsilon},
      {"master_seed", c.master_seed},
      {"r_min", c.r_min},
      {"r_max", c.r_max},
      {"r_guard", c.r_guard},
      {"workers", c.workers},
      {"wls_start", std::string(to_string(c.wls_start))},
      {"optimizer",
       {{"max_evaluations", c.optimizer.max_evaluations},
        {"tolerance", c.optimizer.tolerance},
        {"step_tolerance", c.optimizer.step_tolerance}}},
  };
  doc["error_detected"] = report.error_detected;

  std::size_t ok = 0, discrepancies = 0, errors = 0;
  for (const auto& t : report.trials) {
    switch (t.status) {
      case TrialStatus::Ok: ++ok; break;
      case TrialStatus::Discrepancy: ++discrepancies; break;
      case TrialStatus::MethodError: ++errors; break;
    }
  }
  doc["counts"] = {{"trials", report.trials.size()},
                   {"ok", ok},
                   {"discrepancies", discrepancies},
                   {"method_errors", errors},
                   {"budget_exhausted", report.budget_exhausted_trials},
                   {"r_redraws", report.r_redraws}};

  if (report.first_failure) {
    const auto& f = *report.first_failure;
    doc["first_failure"] = {{"index", f.index},
                            {"n", f.n},
                            {"r", f.r},
                            {"seed", fmt_seed(f.seed)},
                            {"prm_digest", f.prm_digest},
                            {"discrepancy", number_or_string(f.discrepancy)},
                            {"status", std::string(to_string(f.status))},
                            {"message", f.message},
                            {"reproduction", reproduction_line(c, f)}};
  } else {
    doc["first_failure"] = nullptr;
  }
  if (with_timing) doc["total_elapsed_ms"] = report.total_elapsed.count();
  return doc.dump(2) + "\n";
}

}  // namespace igm
