#include <benchmark/benchmark.h>

#include "prefalloc/exact.hpp"
#include "prefalloc/junction.hpp"
#include "prefalloc/kernels/assignment.hpp"
#include "prefalloc/poly/directed_matchings.hpp"
#include "prefalloc/poly/paths.hpp"
#include "prefalloc/poly/star_forests.hpp"
#include "prefalloc/poly/two_matchings.hpp"
#include "prefalloc/random.hpp"

namespace {

using namespace prefalloc;

Instance make(gen::RandomClass cls, std::size_t items, std::size_t agents, std::size_t max_gamma = 4) {
  gen::Rng rng(items * 131 + agents);
  gen::RandomOptions options;
  options.items = items;
  options.agents = agents;
  options.max_gamma = max_gamma;
  return gen::random_instance(cls, options, rng);
}

void BM_Lsap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(n);
  kernels::CostMatrix m(n, std::vector<std::int64_t>(n));
  for (auto& row : m) {
    for (auto& c : row) c = static_cast<std::int64_t>(rng.below(1000));
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lsap(m).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lsap)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_Lbap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(n + 1);
  kernels::CostMatrix m(n, std::vector<std::int64_t>(n));
  for (auto& row : m) {
    for (auto& c : row) c = static_cast<std::int64_t>(rng.below(1000));
  }
  for (auto _ : state) benchmark::DoNotOptimize(kernels::lbap(m).value);
}
BENCHMARK(BM_Lbap)->RangeMultiplier(2)->Range(8, 256);

void BM_Oracle(benchmark::State& state) {
  const Instance inst = make(gen::RandomClass::Dag, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact::brute_force(inst, Objective::Sum).value);
  state.counters["assignments"] = static_cast<double>(enumeration_size(inst));
}
BENCHMARK(BM_Oracle)->DenseRange(4, 10, 2);

void BM_JunctionFpt(benchmark::State& state) {
  const auto gamma = static_cast<std::size_t>(state.range(0));
  const Instance inst = make(gen::RandomClass::BoundedGamma, 40, 4, gamma);
  for (auto _ : state) benchmark::DoNotOptimize(junction::minsum_junction_fpt(inst).value);
}
BENCHMARK(BM_JunctionFpt)->DenseRange(0, 4);

void BM_MinSumMatchings(benchmark::State& state) {
  const Instance inst = make(gen::RandomClass::Matching, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(poly::minsum_directed_matchings(inst).value);
}
BENCHMARK(BM_MinSumMatchings)->RangeMultiplier(4)->Range(16, 1024);

void BM_Paths(benchmark::State& state) {
  const Instance inst = make(gen::RandomClass::Path, static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly::minsum_paths(inst).value);
    benchmark::DoNotOptimize(poly::minmax_paths(inst).value);
  }
}
BENCHMARK(BM_Paths)->RangeMultiplier(4)->Range(16, 256);

void BM_TwoMatchings(benchmark::State& state) {
  const Instance inst = make(gen::RandomClass::Matching, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly::minmax_two_matchings(inst).value);
}
BENCHMARK(BM_TwoMatchings)->RangeMultiplier(2)->Range(16, 128);

void BM_TwoStarForests(benchmark::State& state) {
  const Instance inst = make(gen::RandomClass::StarForest, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly::minsum_two_star_forests(inst).value);
}
BENCHMARK(BM_TwoStarForests)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace

BENCHMARK_MAIN();
