#include <benchmark/benchmark.h>

#include "thermal_sense/simulator.hpp"

namespace {

using namespace thermal_sense;

void BM_RenderPersonFrame(benchmark::State& state) {
  sim::SimulatorParams params;
  params.supersample = static_cast<int>(state.range(0));
  sim::SceneConfig cfg;
  cfg.person = sim::PersonConfig{};
  cfg.heat_sources.push_back({});
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(sim::render(cfg, params));
  }
}
BENCHMARK(BM_RenderPersonFrame)->Arg(1)->Arg(4)->Arg(8);

void BM_GenerateMain(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim::generate_main(240, 5));
  }
}
BENCHMARK(BM_GenerateMain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
