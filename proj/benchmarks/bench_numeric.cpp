#include <benchmark/benchmark.h>

#include "cohen/numeric.hpp"
#include "cohen/parser.hpp"

using namespace cohen;

static void BM_Ambiguity(benchmark::State& state) {
  const GridState psi = GridState::oscillator(GridAxis::centered(state.range(0), 8.0), 1.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ambiguity(psi));
}
BENCHMARK(BM_Ambiguity)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_CohenDistribution(benchmark::State& state) {
  const GridState psi = GridState::gaussian(GridAxis::centered(state.range(0), 8.0), 1.0, 1.0);
  const KernelSpec kernel = KernelSpec::born_jordan_sinc();
  for (auto _ : state) benchmark::DoNotOptimize(cohen_distribution(psi, kernel));
}
BENCHMARK(BM_CohenDistribution)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

static void BM_TraceExpectation(benchmark::State& state) {
  const GridState psi = GridState::gaussian(GridAxis::centered(state.range(0), 8.0), 1.0, 1.0);
  const OperatorPoly op = parse_operator("qh^2*ph^2");
  for (auto _ : state) benchmark::DoNotOptimize(trace_expectation(psi, op));
}
BENCHMARK(BM_TraceExpectation)->RangeMultiplier(2)->Range(128, 512);
