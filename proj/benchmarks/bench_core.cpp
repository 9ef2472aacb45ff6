#include <benchmark/benchmark.h>

#include <cmath>

#include "qhe/bounds.hpp"
#include "qhe/bridge.hpp"
#include "qhe/numerics.hpp"
#include "qhe/stirling.hpp"

using namespace qhe;

static void BM_Erfc(benchmark::State& state) {
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(numerics::erfc(x));
    x = x > 6.0 ? 0.01 : x + 0.37;
  }
}
BENCHMARK(BM_Erfc);

static void BM_PartitionExact(benchmark::State& state) {
  const WellGeometry g(1.0, 1.0, kReducedUnits);
  const auto env = ThermalEnvironment::with_alpha_beta(g, std::pow(10.0, -double(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_function(g, env, PartitionMode::exact_series));
  }
}
BENCHMARK(BM_PartitionExact)->DenseRange(1, 5);

static void BM_Quadrature(benchmark::State& state) {
  const WellGeometry g(1.0, 1.0, kReducedUnits);
  const long n = state.range(0);
  auto f = [&](double x) {
    return wavefunction_value(g, QuantumLevel(1), x) * x * wavefunction_value(g, QuantumLevel(n), x);
  };
  for (auto _ : state) benchmark::DoNotOptimize(numerics::integrate(f, 0.0, 2.0, 1e-12));
}
BENCHMARK(BM_Quadrature)->Arg(2)->Arg(10)->Arg(40);

static void BM_MpLowerBound(benchmark::State& state) {
  const WellGeometry g(1.0, 1.0, kReducedUnits);
  const auto dim = state.range(0);
  const auto x = position_operator(g, dim);
  const auto p = momentum_operator(g, dim);
  const auto psi = StateVector::basis(dim, 0);
  for (auto _ : state) benchmark::DoNotOptimize(mp_lower_bound(psi, x, p));
}
BENCHMARK(BM_MpLowerBound)->RangeMultiplier(2)->Range(4, 64);

static void BM_EigenstateSeriesBound(benchmark::State& state) {
  const WellGeometry g(1.0, 1.0, kReducedUnits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenstate_mp_lower_bound(g, QuantumLevel(state.range(0))));
  }
}
BENCHMARK(BM_EigenstateSeriesBound)->Arg(1)->Arg(10);

static void BM_ThermalBounds(benchmark::State& state) {
  const WellGeometry g(state.range(0) * 1e-9);
  const ThermalEnvironment env(g, 320.0);
  const auto dim = minimum_thermal_dimension(env);
  for (auto _ : state) benchmark::DoNotOptimize(thermal_sum_variance_bounds(g, env, dim));
}
BENCHMARK(BM_ThermalBounds)->Arg(1)->Arg(5)->Arg(20);

static void BM_EvaluateCycle(benchmark::State& state) {
  CycleConfig c;
  c.geom = WellGeometry(state.range(0) * 1e-9);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_cycle(c));
}
BENCHMARK(BM_EvaluateCycle)->Arg(5)->Arg(20);

static void BM_EfficiencyBoundsCurve(benchmark::State& state) {
  CycleConfig c;
  std::vector<double> lengths;
  for (int i = 0; i < 10; ++i) lengths.push_back((12.0 + 4.0 * i) * 1e-9);
  for (auto _ : state) benchmark::DoNotOptimize(efficiency_bounds_curve(c, lengths));
}
BENCHMARK(BM_EfficiencyBoundsCurve)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
