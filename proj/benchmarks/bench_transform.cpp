#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "csusy/pipeline.hpp"
#include "csusy/quadrature.hpp"
#include "csusy/spectral.hpp"

using namespace csusy;

namespace {

const Grid& bench_grid() {
  static const Grid g = Grid::default_domain();
  return g;
}

const JordanChain& bench_chain() {
  static const auto chain =
      pt_closed_form_chain(PTParams(1.0 / std::sqrt(2.0)), 3, bench_grid());
  return chain;
}

void BM_CumulativeIntegral(benchmark::State& state) {
  const auto f = SampledFunction::sample(bench_grid(), [](double x) { return std::exp(-x * x); });
  for (auto _ : state) benchmark::DoNotOptimize(cumulative_integral(f, 0.0));
}
BENCHMARK(BM_CumulativeIntegral);

void BM_DeterminantWronskian(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(direct_wronskian(bench_chain(), 3));
}
BENCHMARK(BM_DeterminantWronskian);

void BM_TowerRecursion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tower_matched(bench_chain(), 3));
}
BENCHMARK(BM_TowerRecursion);

void BM_InitialValueSweep(benchmark::State& state) {
  PoschlTellerPotential v;
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_ivp(v, -1.0, bench_grid(), 1e-6, 1e-6));
}
BENCHMARK(BM_InitialValueSweep);

void BM_EigenvalueBisection(benchmark::State& state) {
  TransformSpec spec;
  spec.lambda = -0.5;
  spec.order = 4;
  spec.top_constant = 50.0;
  const auto res = run_transform(spec);
  const auto h = discretize_hamiltonian(res.v_n);
  for (auto _ : state) benchmark::DoNotOptimize(lowest_eigenvalues(h, 2));
}
BENCHMARK(BM_EigenvalueBisection);

void BM_FullTransform(benchmark::State& state) {
  TransformSpec spec;
  spec.lambda = -0.5;
  spec.order = 4;
  spec.top_constant = 50.0;
  for (auto _ : state) benchmark::DoNotOptimize(run_transform(spec));
}
BENCHMARK(BM_FullTransform);

}  // namespace

BENCHMARK_MAIN();
