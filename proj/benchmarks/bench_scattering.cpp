#include "gaw/scattering.hpp"
#include "gaw/sweep.hpp"
#include "gaw/transfer_matrix.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_general_scatter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gaw::AtomArray array = gaw::build_separate_array(n, 2, 0.35 * gaw::pi, 1.0);
  const gaw::SystemMatrices sys = gaw::build_system_matrices(array);
  double delta = 0.137;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaw::scatter(sys, delta).R);
    delta += 1e-6;
  }
}
BENCHMARK(BM_general_scatter)->Arg(3)->Arg(10)->Arg(24);

void BM_cascade_scatter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gaw::AtomArray array = gaw::build_separate_array(n, 2, 0.35 * gaw::pi, 1.0);
  double delta = 0.137;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaw::cascade_scatter(array, delta).first);
    delta += 1e-6;
  }
}
BENCHMARK(BM_cascade_scatter)->Arg(3)->Arg(10)->Arg(24);

void BM_closed_form_scatter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double delta = 0.137;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaw::closed_form_scatter(n, 2, 0.35 * gaw::pi, 1.0, delta).first);
    delta += 1e-6;
  }
}
BENCHMARK(BM_closed_form_scatter)->Arg(3)->Arg(10)->Arg(24);

void BM_collective_modes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gaw::AtomArray array = gaw::build_separate_array(n, 2, 0.25 * gaw::pi, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(gaw::collective_modes(array).size());
}
BENCHMARK(BM_collective_modes)->Arg(6)->Arg(16);

void BM_sweep_parallel(benchmark::State& state) {
  const gaw::AtomArray array = gaw::build_separate_array(6, 2, 0.35 * gaw::pi, 1.0);
  gaw::SweepGrid grid;
  grid.min = -10.0;
  grid.max = 10.0;
  grid.count = 4001;
  gaw::SweepOptions options;
  options.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gaw::sweep_spectrum(array, grid, options).size());
}
BENCHMARK(BM_sweep_parallel)->Arg(1)->Arg(2)->Arg(4);

void BM_chebyshev(benchmark::State& state) {
  double y = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gaw::chebyshev_u(23, y));
    y += 1e-9;
  }
}
BENCHMARK(BM_chebyshev);

}  // namespace

BENCHMARK_MAIN();
