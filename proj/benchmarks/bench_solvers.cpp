#include <benchmark/benchmark.h>

#include "osbop/exact.hpp"
#include "osbop/sls.hpp"

#include "bench_util.hpp"

namespace {

void BM_ExactObop(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = bench::random_matrix(n, 11);
  for (auto _ : state) benchmark::DoNotOptimize(osbop::exact_obop(c).optimum);
}
BENCHMARK(BM_ExactObop)->Arg(4)->Arg(5)->Arg(6);

void BM_ExactOsbopEqual(benchmark::State& state) {
  const auto c = bench::random_matrix(static_cast<int>(state.range(0)), 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(osbop::exact_osbop_equal(c, 2).optimum);
}
BENCHMARK(BM_ExactOsbopEqual)->Arg(3)->Arg(4);

/// One hundred outer iterations per run; report per-iteration time.
void BM_SlsOuterLoop(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const bool tuned = state.range(2) != 0;
  const auto c = bench::random_matrix(n, 13);

  osbop::SlsConfig config;
  config.b = b;
  config.equal_weights = !tuned;
  config.outer_iters = 100;
  config.tune_iters = 100;

  std::uint64_t seed = 0;
  for (auto _ : state) {
    config.seed = ++seed;
    benchmark::DoNotOptimize(osbop::sls_osbop(c, config).fitness);
  }
  state.SetItemsProcessed(state.iterations() * config.outer_iters);
}
BENCHMARK(BM_SlsOuterLoop)
    ->Args({10, 1, 0})
    ->Args({10, 2, 0})
    ->Args({10, 2, 1})
    ->Args({20, 2, 1})
    ->Args({20, 4, 1});

void BM_TuneWeights(benchmark::State& state) {
  const int n = 10;
  const int b = static_cast<int>(state.range(0));
  const auto c = bench::random_matrix(n, 14);
  osbop::Rng rng = osbop::make_rng(15);
  const auto ensemble = osbop::initial_solution(n, b, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(osbop::tune_weights(c, ensemble, 100, rng).fitness);
}
BENCHMARK(BM_TuneWeights)->Arg(2)->Arg(4)->Arg(8);

void BM_InitialSolution(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  osbop::Rng rng = osbop::make_rng(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(osbop::initial_solution(n, 2, rng).size());
}
BENCHMARK(BM_InitialSolution)->Arg(5)->Arg(10)->Arg(25);

}  // namespace
