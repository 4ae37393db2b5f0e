// Serial reference loops against the OpenMP loops on the same inputs.

#include <benchmark/benchmark.h>

#include "dini/builtins.hpp"
#include "dini/example_map.hpp"
#include "dini/inverse_solver.hpp"
#include "dini/kernels.hpp"
#include "dini/sampling.hpp"

namespace {

using dini::kernels::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "omp" : "serial"); }

void BM_SampleMinors(benchmark::State& state) {
  const auto f = dini::as_map(dini::example_map());
  const auto pts = dini::sampling::halton_points(f.domain, 20000);
  for (auto _ : state) benchmark::DoNotOptimize(dini::kernels::sample_minors(f, pts, exec_of(state)));
  label(state);
}

void BM_MixedTrials(benchmark::State& state) {
  const auto f = dini::coupled3_map();
  for (auto _ : state) {
    benchmark::DoNotOptimize(dini::kernels::mixed_trials(f, f.domain, 5000, 7, exec_of(state)));
  }
  label(state);
}

void BM_SolvePoints(benchmark::State& state) {
  const auto b = dini::builtin("coupled3");
  const auto p = dini::make_problem(*b.implicit, b.a, b.b);
  std::vector<dini::Vector> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(dini::Vector{-0.5 + i / 64.0});
  for (auto _ : state) benchmark::DoNotOptimize(dini::kernels::solve_points(p, xs, exec_of(state)));
  label(state);
}

void BM_RoundTrips(benchmark::State& state) {
  const auto p = dini::make_inverse_problem(dini::example_map(), dini::Vector{0.0, 0.0});
  const auto xs = dini::sampling::halton_disc(dini::Vector{0.0, 0.0}, 0.4, 100);
  for (auto _ : state) benchmark::DoNotOptimize(dini::kernels::round_trips(p, xs, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_SampleMinors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixedTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolvePoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundTrips)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
