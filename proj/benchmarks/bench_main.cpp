#include <benchmark/benchmark.h>

#include "fairdiv/fairdiv.hpp"

namespace {

using namespace fairdiv;

Instance make(std::int64_t agents, Kind kind, CostDist dist) {
  GenParams p;
  p.agents = static_cast<std::size_t>(agents);
  p.items = static_cast<std::size_t>(2 * agents);
  p.kind = kind;
  p.costs = dist;
  p.denominator = 24;
  p.seed = 11;
  return gen_random_instance(p);
}

void BM_BidAndTake(benchmark::State& state) {
  const Instance inst = reduce_to_ido(make(state.range(0), Kind::chores, CostDist::ido)).instance;
  for (auto _ : state) benchmark::DoNotOptimize(run_fbta(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BidAndTake)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_PipelineChores(benchmark::State& state) {
  const Instance inst = make(state.range(0), Kind::chores, CostDist::uniform);
  for (auto _ : state) benchmark::DoNotOptimize(allocate_with_subsidy(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PipelineChores)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_PipelineGoods(benchmark::State& state) {
  const Instance inst = make(state.range(0), Kind::goods, CostDist::uniform);
  for (auto _ : state) benchmark::DoNotOptimize(allocate_with_subsidy(inst));
}
BENCHMARK(BM_PipelineGoods)->RangeMultiplier(2)->Range(4, 64);

void BM_Baseline(benchmark::State& state) {
  const Instance inst = make(state.range(0), Kind::chores, CostDist::uniform);
  const PipelineOptions opts{true};
  for (auto _ : state) benchmark::DoNotOptimize(allocate_with_subsidy(inst, opts));
}
BENCHMARK(BM_Baseline)->RangeMultiplier(2)->Range(4, 64);

void BM_Oracle(benchmark::State& state) {
  const Instance inst = reduce_to_ido(make(state.range(0), Kind::chores, CostDist::ido)).instance;
  const FractionalAllocation x = run_fbta(inst).allocation;
  OracleOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_rounding(inst, x, opts));
  state.counters["roundings"] = static_cast<double>(rounding_count(x));
}
BENCHMARK(BM_Oracle)->DenseRange(2, 10, 2);

}  // namespace

BENCHMARK_MAIN();
