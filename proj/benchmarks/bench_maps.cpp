#include <benchmark/benchmark.h>

#include "cohen/kernels.hpp"
#include "cohen/transforms.hpp"

using namespace cohen;

static void BM_ObservableForward(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const KernelSpec kernel = KernelSpec::born_jordan_sinc();
  const OperatorPoly op = OperatorPoly::monomial(degree, degree);
  for (auto _ : state) benchmark::DoNotOptimize(map(op, kernel, MapDirection::observable_forward()));
}
BENCHMARK(BM_ObservableForward)->DenseRange(1, 6);

static void BM_ObservableRoundTrip(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const KernelSpec kernel = KernelSpec::rivier_cos();
  const OperatorPoly op = OperatorPoly::monomial(degree, degree);
  for (auto _ : state) {
    const PhasePoly g = map(op, kernel, MapDirection::observable_forward());
    benchmark::DoNotOptimize(map(g, kernel, MapDirection::observable_inverse()));
  }
}
BENCHMARK(BM_ObservableRoundTrip)->DenseRange(1, 6);

static void BM_TaylorSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const KernelSpec kernel = KernelSpec::sudarshan_p(Rational(3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(invert_series(taylor(kernel, order)));
}
BENCHMARK(BM_TaylorSeries)->RangeMultiplier(2)->Range(4, 16);

static void BM_DeterminantRoute(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const KernelSeries s = taylor(KernelSpec::born_jordan_sinc(), 16);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_tau_derivative(s, k));
}
BENCHMARK(BM_DeterminantRoute)->DenseRange(2, 8, 2);
