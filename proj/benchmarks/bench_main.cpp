#include <benchmark/benchmark.h>

#include "casselman/casselman.hpp"
#include "casselman/klpoly.hpp"
#include "casselman/modular.hpp"
#include "casselman/scans.hpp"
#include "casselman/weyl.hpp"

using namespace casselman;

namespace {

const char* kTypes[] = {"A", "B", "D"};

void BM_GroupConstruction(benchmark::State& state) {
  for (auto _ : state) {
    WeylGroup W(build_root_system("A", static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(W.comparable_pair_count());
  }
}
BENCHMARK(BM_GroupConstruction)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_KLTable(benchmark::State& state) {
  WeylGroup W(build_root_system(kTypes[state.range(0)], static_cast<int>(state.range(1))));
  for (auto _ : state) {
    KLTable kl(W);
    for (ElementIndex u = 0; u < W.size(); ++u) benchmark::DoNotOptimize(kl.Q(u, W.longest()));
  }
}
BENCHMARK(BM_KLTable)->Args({0, 4})->Args({1, 3})->Args({2, 4})->Unit(benchmark::kMillisecond);

void BM_SymbolicTable(benchmark::State& state) {
  WeylGroup W(build_root_system("A", static_cast<int>(state.range(0))));
  for (auto _ : state) {
    CassTable<SymbolicField> T(W, SymbolicField{});
    for (ElementIndex u = 0; u < W.size(); ++u) benchmark::DoNotOptimize(T.m(u, W.longest()));
  }
}
BENCHMARK(BM_SymbolicTable)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ModularTable(benchmark::State& state) {
  WeylGroup W(build_root_system("A", static_cast<int>(state.range(0))));
  ModCtx ctx = ModCtx::sample(W.roots(), kDefaultPrime, 1, 0);
  for (auto _ : state) {
    CassTable<ModularField> T(W, ModularField(ctx));
    for (ElementIndex u = 0; u < W.size(); ++u) benchmark::DoNotOptimize(T.m(u, W.longest()));
  }
}
BENCHMARK(BM_ModularTable)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_DescentScan(benchmark::State& state) {
  WeylGroup W(build_root_system("A", static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(descent_scan(W).failures.size());
}
BENCHMARK(BM_DescentScan)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
