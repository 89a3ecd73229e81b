#include <benchmark/benchmark.h>

#include "gaussia/analysis.hpp"
#include "gaussia/closed_forms.hpp"
#include "gaussia/measurement.hpp"
#include "gaussia/renyi.hpp"
#include "gaussia/tripartite.hpp"
#include "gaussia/unruh.hpp"
#include "gaussia/validation.hpp"

using namespace gaussia;

namespace {

const double kS = 0.828727;

ModePartition pair() { return ModePartition::bipartite({0}, {1}); }

void BM_ClosedForms(benchmark::State& state) {
  double r = 0.0;
  for (auto _ : state) {
    r = r > 3.0 ? 0.0 : r + 0.01;
    benchmark::DoNotOptimize(closed::i2(kS, 2 * r, r) + closed::e2(kS, 2 * r, r) +
                             closed::j2_R_given_A(kS, r) + closed::q2_tripartite(kS, r));
  }
}
BENCHMARK(BM_ClosedForms);

void BM_ObservedPair(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(observed_pair(FrameScenario::setting_b(kS, 1.0, 0.5)));
}
BENCHMARK(BM_ObservedPair);

void BM_MutualInformation(benchmark::State& state) {
  const auto sigma = observed_pair(FrameScenario::setting_b(kS, 1.0, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(mutual_information(sigma, pair()));
}
BENCHMARK(BM_MutualInformation);

void BM_ClassicalCorrelations(benchmark::State& state) {
  const auto sigma = observed_pair(FrameScenario::setting_b(kS, 1.0, 0.5));
  const Side side = state.range(0) ? Side::A : Side::B;
  for (auto _ : state) benchmark::DoNotOptimize(classical_correlations(sigma, pair(), side));
}
BENCHMARK(BM_ClassicalCorrelations)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_EntanglementEstimate(benchmark::State& state) {
  const auto sigma = observed_pair(FrameScenario::setting_b(kS, 0.5 * state.range(0), 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_estimate(sigma, pair()));
}
BENCHMARK(BM_EntanglementEstimate)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TripartiteReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tripartite_report(kS, 1.0));
}
BENCHMARK(BM_TripartiteReport)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analyze(FrameScenario::setting_a(kS, 1.0)));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_ValidationCriterion(benchmark::State& state) {
  const int criterion = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_criterion(criterion));
}
BENCHMARK(BM_ValidationCriterion)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
