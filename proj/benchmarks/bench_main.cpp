#include <benchmark/benchmark.h>

#include <random>

#include "maninlab/enumerate.hpp"
#include "maninlab/orbit_finiteness.hpp"
#include "maninlab/smith.hpp"

using namespace maninlab;

static IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto m = random_matrix(n, 17);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Catalog(benchmark::State& state) {
  auto cat = builtin_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(catalog_verdicts(cat, 1));
}
BENCHMARK(BM_Catalog)->Unit(benchmark::kMillisecond);

static void BM_CensusBoxScan(benchmark::State& state) {
  auto spec = builtin_variety("sl2");
  const double t = static_cast<double>(state.range(0)) + 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(tally_points(spec, t, {Norm::max}, {Engine::box_scan, 1}));
  state.counters["vectors"] = box_scan_cost(spec, t);
}
BENCHMARK(BM_CensusBoxScan)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_CensusPruned(benchmark::State& state) {
  auto spec = builtin_variety(state.range(1) ? "skew4" : "sl2");
  const double t = static_cast<double>(state.range(0)) + 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(tally_points(spec, t, {Norm::max}, {Engine::pruned, 1}));
}
BENCHMARK(BM_CensusPruned)->Args({16, 0})->Args({32, 0})->Args({16, 1})->Args({32, 1})->Unit(benchmark::kMillisecond);

static void BM_ProjectiveClosedForm(benchmark::State& state) {
  auto spec = projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tally_points(spec, 1000.5, {Norm::max}));
}
BENCHMARK(BM_ProjectiveClosedForm)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
