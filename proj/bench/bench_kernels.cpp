#include <random>

#include <benchmark/benchmark.h>

#include "mcan/harness.hpp"
#include "mcan/kernels.hpp"

namespace {

// Two sets over overlapping domains {x,y} and {y,z}, with values drawn from
// a pool sized so that roughly a third of the probes find a partner.
mcan::MappingSet randomSet(std::size_t n, const char* first, const char* second, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mcan::SolutionMapping> out;
  out.reserve(n);
  auto pool = n / 3 + 1;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(mcan::SolutionMapping{
        {first, mcan::Term::individual("a" + std::to_string(rng() % pool))},
        {second, mcan::Term::individual("a" + std::to_string(rng() % pool))}});
  }
  return mcan::MappingSet::fromUnsorted(std::move(out));
}

void BM_JoinReference(benchmark::State& state) {
  auto left = randomSet(state.range(0), "x", "y", 1);
  auto right = randomSet(state.range(0), "y", "z", 2);
  for (auto _ : state) benchmark::DoNotOptimize(mcan::kernels::reference::join(left, right));
}

void BM_JoinParallel(benchmark::State& state) {
  auto left = randomSet(state.range(0), "x", "y", 1);
  auto right = randomSet(state.range(0), "y", "z", 2);
  for (auto _ : state) benchmark::DoNotOptimize(mcan::kernels::parallelJoin(left, right));
}

void BM_DiffReference(benchmark::State& state) {
  auto left = randomSet(state.range(0), "x", "y", 1);
  auto right = randomSet(state.range(0), "y", "z", 2);
  for (auto _ : state) benchmark::DoNotOptimize(mcan::kernels::reference::diff(left, right));
}

void BM_DiffParallel(benchmark::State& state) {
  auto left = randomSet(state.range(0), "x", "y", 1);
  auto right = randomSet(state.range(0), "y", "z", 2);
  for (auto _ : state) benchmark::DoNotOptimize(mcan::kernels::parallelDiff(left, right));
}

void BM_RequirementSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mcan::runRequirementSuite(7, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_JoinReference)->Range(64, 2048);
BENCHMARK(BM_JoinParallel)->Range(64, 16384);
BENCHMARK(BM_DiffReference)->Range(64, 2048);
BENCHMARK(BM_DiffParallel)->Range(64, 16384);
BENCHMARK(BM_RequirementSuite)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
