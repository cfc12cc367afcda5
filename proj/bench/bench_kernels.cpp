// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "chowkit/classify.hpp"
#include "chowkit/resultant.hpp"
#include "chowkit/slopes.hpp"

using namespace chowkit;

namespace {

PolyMatrix slope_sylvester() {
  const auto sys = build_slope_system(builtin_base("Q5"), 3, 5);
  return sylvester_matrix(sys.polys[0], sys.polys[1], "tau").entries;
}

void BM_BareissSerial(benchmark::State& state) {
  const auto m = slope_sylvester();
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant_serial(m));
}

void BM_BareissParallel(benchmark::State& state) {
  const auto m = slope_sylvester();
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_determinant(m));
}

void BM_DiophantineSerial(benchmark::State& state) {
  const auto kg2 = builtin_base("KG2");
  for (auto _ : state) benchmark::DoNotOptimize(solve_diophantine_serial(*kg2, state.range(0)));
}

void BM_DiophantineParallel(benchmark::State& state) {
  const auto kg2 = builtin_base("KG2");
  for (auto _ : state) benchmark::DoNotOptimize(solve_diophantine(*kg2, state.range(0)));
}

}  // namespace

BENCHMARK(BM_BareissSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiophantineSerial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiophantineParallel)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
