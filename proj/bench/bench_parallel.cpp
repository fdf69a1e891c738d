// Serial reference vs OpenMP kernels.

#include "cutchoose/election.hpp"
#include "cutchoose/simulate.hpp"
#include "cutchoose/solver.hpp"

#include <benchmark/benchmark.h>

using namespace cutchoose;

static void BM_MinimaxSerial(benchmark::State& state) {
  const auto D = state.range(0);
  const auto n = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimax_serial(D, n, D * n / 2));
  }
}

static void BM_MinimaxParallel(benchmark::State& state) {
  const auto D = state.range(0);
  const auto n = state.range(1);
  const SolverOptions options{.jobs = static_cast<int>(state.range(2))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimax(D, n, D * n / 2, {}, options));
  }
}

BENCHMARK(BM_MinimaxSerial)->Args({4, 8})->Args({6, 10})->Args({8, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimaxParallel)
    ->ArgsProduct({{6}, {10}, {1, 2, 4}})
    ->ArgsProduct({{8}, {12}, {1, 2, 4}})
    ->Args({4, 8, 1})
    ->Unit(benchmark::kMillisecond);

static const std::vector<DistrictStatus> kStatuses = {
    DistrictStatus::Randomized, DistrictStatus::Randomized, DistrictStatus::ChooserWin,
    DistrictStatus::Randomized, DistrictStatus::CutterWin,  DistrictStatus::Randomized,
    DistrictStatus::Randomized, DistrictStatus::CutterWin};

static void BM_SimulateSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_seats_serial(kStatuses, AllocationMode::IndependentCoinFlips, 0, static_cast<std::uint64_t>(state.range(0))));
  }
}

static void BM_SimulateParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_seats(kStatuses, AllocationMode::IndependentCoinFlips, 0,
                                            static_cast<std::uint64_t>(state.range(0)),
                                            static_cast<int>(state.range(1))));
  }
}

BENCHMARK(BM_SimulateSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->ArgsProduct({{100000}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
