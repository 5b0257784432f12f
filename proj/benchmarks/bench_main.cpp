#include "nekrasov/darcais.hpp"
#include "nekrasov/partitions.hpp"
#include "nekrasov/power_chain.hpp"
#include "nekrasov/series.hpp"

#include <benchmark/benchmark.h>

using namespace nekrasov;

static void BM_SeriesMultiply(benchmark::State& state) {
  const auto f = f_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_multiply(f, f));
}
BENCHMARK(BM_SeriesMultiply)->Arg(100)->Arg(400);

static void BM_DoubleChain(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const std::size_t n = std::size_t{2} << k;
  const auto f = f_series(n);
  for (auto _ : state) {
    DoubleIntervalPowerChain chain(f, k, n + 1);
    chain.extend_to(n);
    benchmark::DoNotOptimize(chain.enclosure(n));
  }
}
BENCHMARK(BM_DoubleChain)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_ExactChain(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const std::size_t n = std::size_t{2} << k;
  const auto f = f_series(n);
  for (auto _ : state) {
    ExactPowerChain chain(f, k, n + 1);
    chain.extend_to(n);
  }
}
BENCHMARK(BM_ExactChain)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DarcaisTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(DarcaisTable(static_cast<std::uint32_t>(state.range(0))).row(0));
}
BENCHMARK(BM_DarcaisTable)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_PartitionStream(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& p : Partitions(static_cast<std::uint32_t>(state.range(0)))) count += p.length();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PartitionStream)->Arg(20)->Arg(30);

static void BM_HookMethod(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(q_via_trivial_hooks(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_HookMethod)->Arg(15)->Arg(22)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
