#include <benchmark/benchmark.h>

#include <random>

#include "aradon/exact_reference.hpp"
#include "aradon/pipeline_sim.hpp"
#include "aradon/radon_core.hpp"

namespace {

aradon::Image random_image(std::size_t n) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<std::uint8_t> px(n * n);
  for (auto& p : px) p = static_cast<std::uint8_t>(dist(rng));
  return aradon::Image(n, std::move(px));
}

void BM_ShearOctant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = random_image(n);
  for (auto _ : state) {
    auto sino = aradon::approx_octant(img, aradon::Octant::Deg0to45);
    benchmark::DoNotOptimize(sino.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(BM_ShearOctant)->RangeMultiplier(2)->Range(16, 256);

void BM_DiscreteLineOctant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = random_image(n);
  const aradon::ShiftTable table(n);
  for (auto _ : state) {
    for (std::size_t k = 0; k < n; ++k) {
      auto bins = aradon::discrete_line_project(img, table, k);
      benchmark::DoNotOptimize(bins.data());
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}
BENCHMARK(BM_DiscreteLineOctant)->RangeMultiplier(2)->Range(16, 256);

void BM_PipelineSim(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = random_image(n);
  for (auto _ : state) {
    auto sim = aradon::sim_run(img);
    benchmark::DoNotOptimize(sim.total_cycles);
  }
  state.counters["clocks"] = static_cast<double>(2 * n);
}
BENCHMARK(BM_PipelineSim)->RangeMultiplier(2)->Range(16, 128);

void BM_ExactRadon(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto img = random_image(n);
  const auto angles = aradon::angle_range(0.0, 1.0, 180.0);
  for (auto _ : state) {
    auto sino = aradon::exact_radon(img, angles);
    benchmark::DoNotOptimize(sino.values.data());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(aradon::op_count_estimate(n, angles.size())));
}
BENCHMARK(BM_ExactRadon)->RangeMultiplier(2)->Range(16, 128);

}  // namespace

BENCHMARK_MAIN();
