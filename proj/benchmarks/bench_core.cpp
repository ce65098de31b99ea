#include <benchmark/benchmark.h>

#include <random>

#include "speedrobust/bricks.hpp"
#include "speedrobust/partitions.hpp"
#include "speedrobust/pebbles.hpp"
#include "speedrobust/sand.hpp"
#include "speedrobust/second_stage.hpp"

namespace speedrobust {
namespace {

// Exact rational size check used by the success-range sweep, one m column.
void BM_BricksSweepColumnExact(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    std::int64_t failures = 0;
    for (std::int64_t n = 1; n <= 60 * m; ++n) {
      failures += solution_size(bricks_alt(n, m, m), bricks_rho()) < Rational(n);
    }
    benchmark::DoNotOptimize(failures);
  }
  state.SetItemsProcessed(state.iterations() * 60 * m);
}
BENCHMARK(BM_BricksSweepColumnExact)->Arg(9)->Arg(72)->Arg(144);

// Same column through the integer-only path.
void BM_BricksSweepColumnInt(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    std::int64_t failures = 0;
    for (std::int64_t n = 1; n <= 60 * m; ++n) {
      failures += bricks_alt_size(n, m, m, bricks_rho()) < n;
    }
    benchmark::DoNotOptimize(failures);
  }
  state.SetItemsProcessed(state.iterations() * 60 * m);
}
BENCHMARK(BM_BricksSweepColumnInt)->Arg(9)->Arg(72)->Arg(144);

void BM_SurplusBreakpoints(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(surplus_breakpoints(Rational(state.range(0))));
}
BENCHMARK(BM_SurplusBreakpoints)->Arg(60);

void BM_OptimalSecondStage(benchmark::State& state) {
  const auto bag_count = static_cast<std::size_t>(state.range(0));
  const auto machine_count = static_cast<std::size_t>(state.range(1));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> draw(1, 40);
  std::vector<Rational> bags(bag_count), speeds(machine_count);
  for (auto& b : bags) b = Rational(draw(rng));
  for (auto& s : speeds) s = Rational(draw(rng), 3);
  std::sort(bags.begin(), bags.end(), std::greater<>());
  std::sort(speeds.begin(), speeds.end(), std::greater<>());
  for (auto _ : state) benchmark::DoNotOptimize(optimal_second_stage(bags, speeds).makespan);
}
BENCHMARK(BM_OptimalSecondStage)->Args({6, 3})->Args({10, 4})->Args({12, 6});

void BM_SandProbe(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const std::int64_t b = state.range(1);
  const SandSequence seq = SandSequence::make(m, b);
  const BagProfile bags = sand_bags(m, b, Rational(seq.upper));
  for (auto _ : state) benchmark::DoNotOptimize(lower_bound_probe(m, b, bags));
}
BENCHMARK(BM_SandProbe)->Args({3, 6})->Args({6, 12});

void BM_PebblesBags(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const Instance inst = Instance::bricks(61 * m, m, m);
  const Rational rho = rho_bar(m, m) + Rational(1, 61);
  for (auto _ : state) benchmark::DoNotOptimize(pebbles_bags(inst, rho).packed_all);
}
BENCHMARK(BM_PebblesBags)->Arg(10)->Arg(100);

void BM_IntegralAssignmentAllProfiles(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const std::int64_t m = state.range(1);
  const BrickSolution sol = trim_to_n(bricks_bags(n, m, m, bricks_rho()), n);
  for (auto _ : state) {
    PartitionGenerator profiles(n, m);
    std::vector<std::int64_t> speeds;
    std::int64_t ok = 0;
    while (profiles.next(speeds)) ok += integral_assignment(sol.bag_sizes, speeds, bricks_rho()).success;
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_IntegralAssignmentAllProfiles)->Args({40, 8});

}  // namespace
}  // namespace speedrobust

BENCHMARK_MAIN();
