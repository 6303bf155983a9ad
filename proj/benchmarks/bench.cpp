#include <benchmark/benchmark.h>

#include "rigidify/category.hpp"
#include "rigidify/fixtures.hpp"
#include "rigidify/homology.hpp"
#include "rigidify/nerve.hpp"

using namespace rigidify;

static void BM_MappingSpaceSimplex(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  auto const s = standard_ordered("simplex", {n});
  for (auto _ : state) {
    auto space = mapping_space(s, 0, static_cast<VertexId>(n));
    benchmark::DoNotOptimize(space.simplices.size());
  }
}
BENCHMARK(BM_MappingSpaceSimplex)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_MappingSpaceProduct(benchmark::State& state) {
  auto const d1 = standard_ordered("simplex", {1});
  auto const d2 = standard_ordered("simplex", {2});
  auto const prism = product(d2, d1);
  for (auto _ : state) {
    auto space = mapping_space(prism, 0, 5);
    benchmark::DoNotOptimize(space.simplices.size());
  }
}
BENCHMARK(BM_MappingSpaceProduct)->Unit(benchmark::kMillisecond);

static void BM_HomologyCube(benchmark::State& state) {
  int const n = static_cast<int>(state.range(0));
  auto const space = mapping_space(standard_ordered("simplex", {n}), 0, static_cast<VertexId>(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(homology(space.complex).groups.size());
  }
}
BENCHMARK(BM_HomologyCube)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Categorify(benchmark::State& state) {
  auto const s = state.range(0) == 0 ? standard_ordered("two_triangles")
                                      : standard_ordered("boundary", {3});
  for (auto _ : state) {
    auto cat = categorify(s);
    benchmark::DoNotOptimize(cat.object_count());
  }
}
BENCHMARK(BM_Categorify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CoherentNerve(benchmark::State& state) {
  auto const cat = categorify(standard_ordered("simplex", {2}));
  for (auto _ : state) {
    auto nerve = coherent_nerve_truncated(cat, 3);
    benchmark::DoNotOptimize(nerve.levels.size());
  }
}
BENCHMARK(BM_CoherentNerve)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
