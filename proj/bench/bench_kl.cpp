// Serial against OpenMP-parallel construction of the KL tables.

#include <benchmark/benchmark.h>

#include "bcell/kl_store.hpp"

namespace {

void build(benchmark::State& state, bcell::BuildMode mode, bcell::OrderSpec spec) {
  const auto group = std::make_shared<const bcell::Group>(bcell::Rank(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto store = bcell::KLStore::build(group, spec, mode);
    benchmark::DoNotOptimize(store.pstar_count());
  }
  state.counters["elements"] = static_cast<double>(group->size());
}

void BM_Serial(benchmark::State& state) { build(state, bcell::BuildMode::serial, bcell::OrderSpec::asymptotic()); }
void BM_Parallel(benchmark::State& state) { build(state, bcell::BuildMode::parallel, bcell::OrderSpec::asymptotic()); }
void BM_SerialWeighted(benchmark::State& state) {
  build(state, bcell::BuildMode::serial, bcell::OrderSpec::weighted(1, 2));
}
void BM_ParallelWeighted(benchmark::State& state) {
  build(state, bcell::BuildMode::parallel, bcell::OrderSpec::weighted(1, 2));
}

void BM_LeftCells(benchmark::State& state) {
  const auto group = std::make_shared<const bcell::Group>(bcell::Rank(static_cast<int>(state.range(0))));
  const auto store = bcell::KLStore::build(group, bcell::OrderSpec::asymptotic());
  for (auto _ : state) benchmark::DoNotOptimize(bcell::left_cells(store).size());
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerialWeighted)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParallelWeighted)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LeftCells)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
