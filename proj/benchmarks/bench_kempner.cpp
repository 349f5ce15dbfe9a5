#include <benchmark/benchmark.h>

#include "kempner/asymptotics.hpp"
#include "kempner/kempner.hpp"
#include "kempner/moments.hpp"
#include "kempner/oracle.hpp"
#include "kempner/ratfun.hpp"

namespace {

void BM_ComputeMoments(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kempner::compute_moments(10, M));
}
BENCHMARK(BM_ComputeMoments)->Arg(20)->Arg(40)->Arg(80);

void BM_KempnerSum(benchmark::State& state) {
  const long b = state.range(0);
  const int P = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kempner::kempner_sum(b, P));
}
BENCHMARK(BM_KempnerSum)->Args({10, 9})->Args({10, 30})->Args({100, 9})->Args({1000, 12})->Unit(benchmark::kMillisecond);

void BM_Zeta(benchmark::State& state) {
  const int P = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kempner::zeta_int(3, P));
}
BENCHMARK(BM_Zeta)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Taylor(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kempner::taylor(m, 3));
}
BENCHMARK(BM_Taylor)->Arg(10)->Arg(40);

void BM_EnumerateLevels(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kempner::enumerate_levels(10, L));
}
BENCHMARK(BM_EnumerateLevels)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
