#include <benchmark/benchmark.h>

#include "matchstick/canonical.hpp"
#include "matchstick/certificates.hpp"
#include "matchstick/constructions.hpp"
#include "matchstick/enumerate.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/planar_code.hpp"
#include "matchstick/realization.hpp"
#include "matchstick/realizer.hpp"

using namespace matchstick;

namespace {

EnumSpec cubic_girth4(int n) {
  EnumSpec s;
  s.n_max = n;
  s.n_values = {n};
  s.girth_min = 4;
  s.tau_set = {0};
  s.connectivity_min = 3;
  s.complete_only = true;
  return s;
}

void BM_CanonicalKey(benchmark::State& state) {
  const auto g = construct_complete_girth4(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(20)->Arg(30);

void BM_EnumerateCubicGirth4(benchmark::State& state) {
  const auto s = cubic_girth4(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long count = 0;
    enumerate_graphs(s, [&](const EmbeddedGraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateCubicGirth4)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_EnumerateSmallSweep(benchmark::State& state) {
  EnumSpec s;
  s.n_max = 10;
  s.girth_min = 4;
  s.tau_set = {1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(s).size());
}
BENCHMARK(BM_EnumerateSmallSweep)->Unit(benchmark::kMillisecond);

void BM_PlanarCodeRoundTrip(benchmark::State& state) {
  const auto bytes = write_planar_code(enumerate_all(cubic_girth4(18)));
  for (auto _ : state) benchmark::DoNotOptimize(write_planar_code(read_planar_code(bytes)));
}
BENCHMARK(BM_PlanarCodeRoundTrip)->Unit(benchmark::kMicrosecond);

void BM_FilterPipeline(benchmark::State& state) {
  const auto graphs = enumerate_all(cubic_girth4(18));
  const auto db = build_survivors_db();
  PipelineConfig cfg;
  cfg.survivors = &db;
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(assess_graph(g, cfg));
}
BENCHMARK(BM_FilterPipeline)->Unit(benchmark::kMillisecond);

void BM_VerifyRealization(benchmark::State& state) {
  const auto re = construct_complete_girth4(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_realization(re));
}
BENCHMARK(BM_VerifyRealization)->Arg(20)->Arg(30);

void BM_RealizeFig1G4(benchmark::State& state) {
  RealizeConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  const auto g = fixture("FIG1_G4").graph;
  for (auto _ : state) benchmark::DoNotOptimize(realize_unit_distance(g, cfg).best_residual);
}
BENCHMARK(BM_RealizeFig1G4)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
