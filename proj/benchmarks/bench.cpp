#include <benchmark/benchmark.h>

#include "invstar/verify.hpp"

namespace {

using namespace invstar;

void BM_PairingComponent(benchmark::State& state) {
  const auto alg = builtin::virasoro(1, 1, 8);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Shapovalov s(alg);
    benchmark::DoNotOptimize(s.component(n));
  }
}
BENCHMARK(BM_PairingComponent)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CanonicalElementVirasoro(benchmark::State& state) {
  const auto alg = builtin::virasoro(1, 1, 8);
  const int n = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(Shapovalov(alg).canonical_element(n, threads));
}
BENCHMARK(BM_CanonicalElementVirasoro)->ArgsProduct({{4, 6}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_CanonicalElementSl2(benchmark::State& state) {
  const auto alg = builtin::sl2(1);
  for (auto _ : state) benchmark::DoNotOptimize(Shapovalov(alg).canonical_element(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CanonicalElementSl2)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
  const auto alg = builtin::virasoro(1, 1, 4);
  const int d = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  const CanonicalElement f = Shapovalov(alg).canonical_element(d);
  for (auto _ : state) benchmark::DoNotOptimize(check_associativity(f, d, threads));
}
BENCHMARK(BM_Associativity)->ArgsProduct({{3, 4}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_StarSeries(benchmark::State& state) {
  const auto alg = builtin::sl2(2);
  const int n = static_cast<int>(state.range(0));
  const CanonicalElement f = Shapovalov(alg).canonical_element(n);
  for (auto _ : state) benchmark::DoNotOptimize(star_series(f, n));
}
BENCHMARK(BM_StarSeries)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
