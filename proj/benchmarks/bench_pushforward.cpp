#include <benchmark/benchmark.h>

#include "fbetti/oracle.hpp"
#include "fbetti/pushforward.hpp"

namespace {

fbetti::RingFamily family_of(std::int64_t id) {
  switch (id) {
    case 0: return fbetti::RingFamily::scroll(3);
    case 1: return fbetti::RingFamily::scroll21();
    default: return fbetti::RingFamily::veronese2();
  }
}

void BM_DecomposeClasses(benchmark::State& state) {
  const auto family = family_of(state.range(0));
  const auto ctx = fbetti::FrobeniusContext::from_q(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fbetti::decompose(family, ctx, fbetti::Route::ResidueClasses));
  }
}
BENCHMARK(BM_DecomposeClasses)->ArgsProduct({{0, 1, 2}, {5, 25}})->Unit(benchmark::kMillisecond);

void BM_DecomposeIndexSets(benchmark::State& state) {
  const auto family = family_of(state.range(0));
  const auto ctx = fbetti::FrobeniusContext::from_q(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fbetti::decompose(family, ctx, fbetti::Route::PaperIndexSets));
  }
}
BENCHMARK(BM_DecomposeIndexSets)->ArgsProduct({{0, 1, 2}, {25, 625}})->Unit(benchmark::kMicrosecond);

void BM_Colength(benchmark::State& state) {
  const auto family = family_of(state.range(0));
  const auto ctx = fbetti::FrobeniusContext::from_q(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fbetti::oracle::lambda_frobenius_quotient(family, ctx));
}
BENCHMARK(BM_Colength)->ArgsProduct({{0, 1, 2}, {5, 25}})->Unit(benchmark::kMillisecond);

void BM_MinGensOracle(benchmark::State& state) {
  const auto family = family_of(state.range(0));
  const auto ctx = fbetti::FrobeniusContext::from_q(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(fbetti::oracle::min_gens_pushforward(family, ctx));
}
BENCHMARK(BM_MinGensOracle)->ArgsProduct({{1, 2}, {5, 9}})->Unit(benchmark::kMillisecond);

}  // namespace
