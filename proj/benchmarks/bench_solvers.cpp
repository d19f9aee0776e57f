#include <benchmark/benchmark.h>

#include "gso/io.hpp"
#include "gso/solvers.hpp"

namespace {

void BM_CmpComplete(benchmark::State& state) {
  const gso::RootedGraph rg(gso::complete_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gso::cmp_value(rg).value);
}
BENCHMARK(BM_CmpComplete)->DenseRange(4, 8);

void BM_CmpCycle(benchmark::State& state) {
  const gso::RootedGraph rg(gso::cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gso::cmp_value(rg).value);
}
BENCHMARK(BM_CmpCycle)->RangeMultiplier(2)->Range(8, 64);

void BM_MpComplete(benchmark::State& state) {
  const gso::Graph g = gso::complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso::mp_value(g).value);
}
BENCHMARK(BM_MpComplete)->DenseRange(4, 8);

void BM_CmmsGame(benchmark::State& state) {
  const gso::Graph g = gso::complete_bipartite(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso::cmms_value(g).value);
}
BENCHMARK(BM_CmmsGame)->DenseRange(3, 6);

void BM_CmsGame(benchmark::State& state) {
  const gso::Graph g = gso::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso::cms_value(g).value);
}
BENCHMARK(BM_CmsGame)->DenseRange(4, 10, 2);

}  // namespace
