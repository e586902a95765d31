#include <benchmark/benchmark.h>

#include <string>

#include "orbitscope/graph.hpp"
#include "orbitscope/io.hpp"
#include "orbitscope/iso.hpp"
#include "orbitscope/orbit_engine.hpp"
#include "orbitscope/refinement.hpp"

namespace {

using namespace orbitscope;

Graph load(const std::string& name) {
  return io::parse_graph(io::read_file(std::string(ORBITSCOPE_BENCH_DATA) + "/" + name));
}

void BM_RefineCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  const RefinementConfig cfg{.k = static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(refine(g, cfg));
}
BENCHMARK(BM_RefineCycle)->ArgsProduct({{16, 64, 128}, {1, 2}})->Unit(benchmark::kMicrosecond);

void BM_RefineCompleteFixed(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  const VertexId fixes[] = {0};
  for (auto _ : state) benchmark::DoNotOptimize(refine_with_fixes(g, fixes, {}));
}
BENCHMARK(BM_RefineCompleteFixed)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_OrbitsComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto sys = compute_orbits(g);
    state.counters["refine_calls"] = static_cast<double>(sys.stats.refine_calls);
  }
}
BENCHMARK(BM_OrbitsComplete)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

void BM_OrbitsShrikhande(benchmark::State& state) {
  const Graph g = load("shrikhande.dimacs");
  for (auto _ : state) benchmark::DoNotOptimize(compute_orbits(g));
}
BENCHMARK(BM_OrbitsShrikhande)->Unit(benchmark::kMillisecond);

void BM_IsoRookShrikhande(benchmark::State& state) {
  const Graph rook = load("rook4x4.dimacs");
  const Graph shrikhande = load("shrikhande.dimacs");
  EngineConfig cfg;
  cfg.refinement.k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iso_test(rook, shrikhande, cfg));
}
BENCHMARK(BM_IsoRookShrikhande)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
