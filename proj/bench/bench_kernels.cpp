// Serial reference vs OpenMP kernels over a few stride patterns.

#include <benchmark/benchmark.h>

#include "gsbench/kernels.hpp"
#include "gsbench/planner.hpp"

namespace {

using namespace gsbench;

constexpr std::uint64_t kLength = 16;
constexpr std::uint64_t kCount = 1 << 16;

struct Fixture {
  BufferArena arena;
  kernels::KernelShape shape;

  Fixture(std::uint64_t stride, unsigned threads)
      : arena(ArenaPlan{kLength * stride * kCount, kLength, threads}),
        shape{kLength, kLength * stride, kCount} {
    for (unsigned t = 0; t < threads; ++t)
      for (std::uint64_t j = 0; j < kLength; ++j)
        arena.indices(t)[j] = j * stride;
  }
};

void set_counters(benchmark::State &state) {
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * 8 * kLength * kCount));
}

void BM_GatherSerial(benchmark::State &state) {
  Fixture f(static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state)
    kernels::gather_serial(f.arena, f.shape);
  set_counters(state);
}

void BM_GatherParallel(benchmark::State &state) {
  const auto threads = static_cast<unsigned>(state.range(1));
  Fixture f(static_cast<std::uint64_t>(state.range(0)), threads);
  for (auto _ : state)
    kernels::gather_parallel(f.arena, f.shape, threads);
  set_counters(state);
}

void BM_ScatterSerial(benchmark::State &state) {
  Fixture f(static_cast<std::uint64_t>(state.range(0)), 1);
  for (auto _ : state)
    kernels::scatter_serial(f.arena, f.shape);
  set_counters(state);
}

void BM_ScatterParallel(benchmark::State &state) {
  const auto threads = static_cast<unsigned>(state.range(1));
  Fixture f(static_cast<std::uint64_t>(state.range(0)), threads);
  for (auto _ : state)
    kernels::scatter_parallel(f.arena, f.shape, threads);
  set_counters(state);
}

} // namespace

BENCHMARK(BM_GatherSerial)->Arg(1)->Arg(8)->Arg(64);
BENCHMARK(BM_GatherParallel)->ArgsProduct({{1, 8, 64}, {1, 2, 4}})->UseRealTime();
BENCHMARK(BM_ScatterSerial)->Arg(1)->Arg(8)->Arg(64);
BENCHMARK(BM_ScatterParallel)->ArgsProduct({{1, 8, 64}, {1, 2, 4}})->UseRealTime();

BENCHMARK_MAIN();
