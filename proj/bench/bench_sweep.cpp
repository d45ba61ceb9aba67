// Serial reference sweep vs the OpenMP sweep, plus the per-block eigensolver.
#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "jcxy/sweep.hpp"

namespace {

using namespace jcxy;

const SectorSolver& solver_for(int n) {
  static std::vector<std::unique_ptr<SectorSolver>> cache(kMaxSites + 1);
  if (!cache[n]) cache[n] = std::make_unique<SectorSolver>(make_generators(n, Topology::OpenNN, 1));
  return *cache[n];
}

void BM_SweepSerial(benchmark::State& state) {
  const auto& solver = solver_for(static_cast<int>(state.range(0)));
  const PhiGrid grid = PhiGrid::uniform(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(solver, grid));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto& solver = solver_for(static_cast<int>(state.range(0)));
  const PhiGrid grid = PhiGrid::uniform(static_cast<int>(state.range(1)));
  const int workers = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(solver, grid, workers));
}

void BM_LargestBlockEigvals(benchmark::State& state) {
  const auto& solver = solver_for(static_cast<int>(state.range(0)));
  const std::size_t middle = solver.sectors().size() / 2;
  const DenseMatrix block = solver.block(middle, 0.6, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(eigvals_symmetric(block));
  state.SetLabel("dim " + std::to_string(block.size()));
}

BENCHMARK(BM_SweepSerial)->Args({8, 61})->Args({10, 25})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->Args({8, 61, 1})
    ->Args({8, 61, 2})
    ->Args({8, 61, 4})
    ->Args({10, 25, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_LargestBlockEigvals)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
