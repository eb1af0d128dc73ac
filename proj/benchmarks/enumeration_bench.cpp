#include <benchmark/benchmark.h>

#include "oddfactor/factors.hpp"
#include "oddfactor/generators.hpp"
#include "oddfactor/parameters.hpp"
#include "oddfactor/structure.hpp"

using namespace oddfactor;

static void BM_ComponentCounts(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  std::uint64_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel::component_counts(adj, all & ~s));
    s = (s + 0x9e3779b97f4a7c15ULL) & all;
  }
}
BENCHMARK(BM_ComponentCounts)->Arg(12)->Arg(20)->Arg(26);

static void BM_TriangularCacti(benchmark::State& state) {
  const Graph g = hm_graph(static_cast<int>(state.range(0)));
  const auto& adj = g.adjacency();
  const std::uint64_t all = g.vertices().bits();
  std::uint64_t s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel::triangular_cacti(adj, all & ~s));
    s = (s + 0x9e3779b97f4a7c15ULL) & all;
  }
}
BENCHMARK(BM_TriangularCacti)->Arg(3)->Arg(5);

static void BM_Parameter(benchmark::State& state) {
  const auto param = static_cast<Parameter>(state.range(0));
  const Graph g = hm_graph(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_parameter(param, g).value);
  state.SetLabel(std::string(parameter_name(param)));
}
BENCHMARK(BM_Parameter)->ArgsProduct({{0, 1, 2, 3}, {3, 4, 5}})->Unit(benchmark::kMillisecond);

static void BM_Toughness(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
  EnumerationOptions options;
  options.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(toughness(g, options).value);
}
BENCHMARK(BM_Toughness)->ArgsProduct({{16, 20, 24}, {1, 4}})->Unit(benchmark::kMillisecond);

static void BM_CpCriterion(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cp_criterion(g).exists);
}
BENCHMARK(BM_CpCriterion)->Arg(9)->Arg(14)->Arg(18)->Unit(benchmark::kMicrosecond);

static void BM_FindFactor(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.35, 5);
  for (auto _ : state) benchmark::DoNotOptimize(find_factor(g, 5).has_value());
}
BENCHMARK(BM_FindFactor)->Arg(9)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
