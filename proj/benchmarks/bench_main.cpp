#include <benchmark/benchmark.h>

#include <map>

#include "bva/bva.hpp"

using namespace bva;

namespace {

const PlantedNetwork& planted(std::size_t part_size) {
  static std::map<std::size_t, PlantedNetwork> cache;
  auto it = cache.find(part_size);
  if (it == cache.end()) it = cache.emplace(part_size, planted_erdos_renyi(3, part_size, 6.0 / part_size, 26, 1)).first;
  return it->second;
}

void BM_Brandes(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(betweenness_brandes(g));
  state.counters["nodes"] = static_cast<double>(g.num_nodes());
}
BENCHMARK(BM_Brandes)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Louvain(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(detect_communities(g, 1));
  state.counters["nodes"] = static_cast<double>(g.num_nodes());
}
BENCHMARK(BM_Louvain)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BoundaryVicinity(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  const auto labeling = detect_communities(g, 1);
  const auto b = boundary_edges(g, labeling);
  WalkConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(boundary_vicinity_scores(g, labeling, b, cfg));
  state.counters["boundary_nodes"] = static_cast<double>(b.nodes.size());
}
BENCHMARK(BM_BoundaryVicinity)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const Graph& g = planted(static_cast<std::size_t>(state.range(0))).graph;
  PipelineConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(g, cfg));
}
BENCHMARK(BM_Pipeline)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
