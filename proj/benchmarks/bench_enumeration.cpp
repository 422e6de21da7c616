#include <benchmark/benchmark.h>

#include "osbop/enumeration.hpp"

namespace {

void BM_EnumerateBucketOrders(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    osbop::for_each_bucket_order(n, [&](const osbop::BucketOrder& order) {
      benchmark::DoNotOptimize(order.bucket_count());
      ++count;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateBucketOrders)->DenseRange(4, 7);

void BM_Fubini(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(osbop::fubini(n));
}
BENCHMARK(BM_Fubini)->Arg(10)->Arg(25)->Arg(100);

void BM_SpaceSize(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(osbop::space_size(10, 4).count);
}
BENCHMARK(BM_SpaceSize);

}  // namespace
