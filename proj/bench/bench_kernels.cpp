#include <benchmark/benchmark.h>

#include "cpmonoid/kernels.hpp"

namespace {

using namespace cpm;

struct SearchInputs {
  std::vector<Tree> targets = enumerate_trees(2, 2, true);
  std::vector<Tree> candidates = enumerate_trees(3, 3, true);
};

const SearchInputs& inputs() {
  static const SearchInputs in;
  return in;
}

void BM_FindInversesSerial(benchmark::State& state) {
  const auto& in = inputs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::find_inverses(in.targets, in.candidates, InverseSide::Left));
  }
}

void BM_FindInversesParallel(benchmark::State& state) {
  const auto& in = inputs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::find_inverses(in.targets, in.candidates, InverseSide::Left));
  }
  state.counters["threads"] = kernels::thread_count();
}

void BM_PermImagesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::perm_images(static_cast<std::size_t>(state.range(0))));
}

void BM_PermImagesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::perm_images(static_cast<std::size_t>(state.range(0))));
  state.counters["threads"] = kernels::thread_count();
}

}  // namespace

BENCHMARK(BM_FindInversesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindInversesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermImagesSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PermImagesParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
