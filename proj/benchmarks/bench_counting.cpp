#include <benchmark/benchmark.h>

#include "fbetti/lattice.hpp"

namespace {

void BM_PairsSumGe(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  for (auto _ : state) {
    for (std::int64_t k = 0; k < q; ++k) benchmark::DoNotOptimize(fbetti::count_pairs_sum_ge(q, k));
  }
}
BENCHMARK(BM_PairsSumGe)->Arg(31)->Arg(1024);

void BM_HalfboxClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fbetti::count_halfbox3(state.range(0)));
}
BENCHMARK(BM_HalfboxClosedForm)->Arg(27)->Arg(1 << 20);

void BM_HalfboxEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fbetti::enumerate_halfbox3(state.range(0)));
}
BENCHMARK(BM_HalfboxEnumeration)->Arg(27)->Arg(81);

void BM_CongruenceBox(benchmark::State& state) {
  const std::int64_t q = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(fbetti::count_congruence_box({0, q}, {0, q}, 7, 3));
}
BENCHMARK(BM_CongruenceBox)->Arg(1 << 10)->Arg(1 << 20);

}  // namespace
