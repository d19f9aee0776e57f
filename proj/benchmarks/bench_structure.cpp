#include <benchmark/benchmark.h>

#include "gso/canonical.hpp"
#include "gso/contraction.hpp"
#include "gso/obstruction.hpp"
#include "gso/recognizer.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gso::enumerate_connected_graphs(n).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const gso::Graph g = gso::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso::canonical_form(g).certificate);
}
BENCHMARK(BM_CanonicalForm)->RangeMultiplier(2)->Range(8, 64);

void BM_ContractionTest(benchmark::State& state) {
  const gso::Graph h = gso::complete_graph(4);
  const gso::Graph g = gso::cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gso::is_contraction(h, g).has_value());
}
BENCHMARK(BM_ContractionTest)->DenseRange(6, 12, 3);

void BM_Recognizer(benchmark::State& state) {
  const auto graphs = gso::enumerate_connected_graphs(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const gso::Graph& g : graphs) benchmark::DoNotOptimize(gso::decide_cmms_le_2(g).answer);
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * graphs.size()));
}
BENCHMARK(BM_Recognizer)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_MineCmpK1(benchmark::State& state) {
  gso::MineOptions opts;
  opts.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gso::mine_obstructions(opts).obstructions.size());
}
BENCHMARK(BM_MineCmpK1)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace
