#include <benchmark/benchmark.h>

#include "osbop/ensemble.hpp"
#include "osbop/objective.hpp"
#include "osbop/sls.hpp"

#include "bench_util.hpp"

namespace {

void BM_Distance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = bench::random_matrix(n, 1);
  const auto b = bench::random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(osbop::distance(a, b));
}
BENCHMARK(BM_Distance)->Arg(5)->Arg(10)->Arg(25);

void BM_Fitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const auto c = bench::random_matrix(n, 3);
  osbop::Rng rng = osbop::make_rng(4);
  const auto ensemble = osbop::initial_solution(n, b, rng);
  for (auto _ : state) benchmark::DoNotOptimize(osbop::fitness(ensemble, c));
}
BENCHMARK(BM_Fitness)->Args({10, 1})->Args({10, 2})->Args({25, 2})->Args({25, 4});

void BM_Utopia(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto c = bench::random_matrix(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(osbop::utopia(c, 2).value);
}
BENCHMARK(BM_Utopia)->Arg(10)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
