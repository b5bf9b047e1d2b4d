#include <benchmark/benchmark.h>

#include "igm/igm.hpp"

namespace {

igm::PairwiseReciprocalMatrix sample(std::int64_t n) {
  return igm::random_prm(static_cast<std::size_t>(n), igm::JudgmentScale::saaty(9), 1234);
}

void BM_Pigm(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igm::pigm(prm));
}
BENCHMARK(BM_Pigm)->DenseRange(3, 15, 4);

void BM_Nigm(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igm::nigm(prm, 37.5));
}
BENCHMARK(BM_Nigm)->DenseRange(3, 15, 4);

void BM_Ligm(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igm::ligm(prm, 0.0));
}
BENCHMARK(BM_Ligm)->DenseRange(3, 15, 4);

void BM_GramFromDesign(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igm::gram_from_design(igm::build_design_matrix(prm), true));
}
BENCHMARK(BM_GramFromDesign)->DenseRange(3, 15, 4);

void BM_GramElementwise(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(igm::gram_elementwise(prm));
}
BENCHMARK(BM_GramElementwise)->DenseRange(3, 15, 4);

void BM_OptimizeWlsUniformStart(benchmark::State& state) {
  const auto prm = sample(state.range(0));
  std::size_t evals = 0;
  for (auto _ : state) {
    const auto res = igm::optimize_wls(prm);
    evals = res.evaluations;
    benchmark::DoNotOptimize(res);
  }
  state.counters["evaluations"] = static_cast<double>(evals);
}
BENCHMARK(BM_OptimizeWlsUniformStart)->DenseRange(3, 15, 4)->Unit(benchmark::kMicrosecond);

void BM_IgmEquivalenceTrial(benchmark::State& state) {
  const auto cfg = igm::VerificationConfig::igm_equivalence(1, 7);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(igm::run_trial(cfg, i++));
}
BENCHMARK(BM_IgmEquivalenceTrial);

}  // namespace

BENCHMARK_MAIN();
