#include <benchmark/benchmark.h>

#include "hexaframe/frame.hpp"
#include "hexaframe/matching.hpp"
#include "hexaframe/random.hpp"

using namespace hexaframe;

static void BM_Canonicalize(benchmark::State& state) {
  Rng rng(1);
  std::vector<OrientedCube> cubes;
  for (int i = 0; i < 256; ++i) {
    const auto v = Variety(static_cast<int>(rng.below(30)));
    const auto& r = rotation_group()[rng.below(24)];
    cubes.push_back(r.apply(v.canonical()));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(cubes[i++ & 255]));
}
BENCHMARK(BM_Canonicalize);

static void BM_KernelTenVarieties(benchmark::State& state) {
  Rng rng(2);
  std::vector<corner_kernel::PackedCounts> sets;
  for (int i = 0; i < 256; ++i) sets.push_back(corner_kernel::pack(random_clustered_multiset(10, 10, rng)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(corner_kernel::first_model(sets[i++ & 255]));
}
BENCHMARK(BM_KernelTenVarieties);

static void BM_FlowCornerSolution(benchmark::State& state) {
  Rng rng(3);
  std::vector<CubeMultiset> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(random_multiset(24, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_corner_solution(sets[i++ & 63]));
}
BENCHMARK(BM_FlowCornerSolution);

static void BM_BuildFrame(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<CubeMultiset> sets;
  for (int i = 0; i < 64; ++i) sets.push_back(random_multiset(guaranteed_size(n), rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_frame(sets[i++ & 63], n));
}
BENCHMARK(BM_BuildFrame)->Arg(3)->Arg(6)->Arg(10);

BENCHMARK_MAIN();
