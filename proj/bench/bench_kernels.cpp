// Serial reference vs OpenMP grid evaluation of an Adomian partial sum.
#include <benchmark/benchmark.h>

#include "fadm/kernels.hpp"
#include "fadm/solver.hpp"

namespace {

fadm::FracSeries partial_sum(int iterations) {
  fadm::ProblemSpec p;
  p.n = 2;
  p.nonlinearity = fadm::PolyNonlinearity::parse("y^2");
  p.forcing = fadm::FracSeries::constant(fadm::GammaCoefficient(1));
  p.init = {fadm::Rational(0), fadm::Rational(1)};
  return fadm::adm_iterate(p, iterations).partial;
}

const fadm::FracSeries& series() {
  static const auto s = partial_sum(3);
  return s;
}

void BM_EvaluateGridSerial(benchmark::State& state) {
  const auto ts = fadm::kernels::linspace(0.0, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fadm::kernels::evaluate_grid_serial(series(), 0.9, ts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvaluateGridParallel(benchmark::State& state) {
  const auto ts = fadm::kernels::linspace(0.0, 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fadm::kernels::evaluate_grid(series(), 0.9, ts));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto ts = fadm::kernels::linspace(0.0, 1.0, static_cast<int>(state.range(0)));
  const std::vector<double> alphas{0.5, 0.7, 0.9, 0.99, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(fadm::kernels::sweep_serial(series(), alphas, ts));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto ts = fadm::kernels::linspace(0.0, 1.0, static_cast<int>(state.range(0)));
  const std::vector<double> alphas{0.5, 0.7, 0.9, 0.99, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(fadm::kernels::sweep(series(), alphas, ts));
}

void BM_AdmIterate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partial_sum(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EvaluateGridSerial)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_EvaluateGridParallel)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_SweepSerial)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_SweepParallel)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_AdmIterate)->DenseRange(1, 4);

BENCHMARK_MAIN();
