#include <benchmark/benchmark.h>

#include "stlie/catalog.hpp"
#include "stlie/homology.hpp"

using namespace stlie;

namespace {

const KAlgebra<PrimeField>& builtin_fp(const char* name) {
  return std::get<KAlgebra<PrimeField>>(find_builtin(name)->algebra);
}

}  // namespace

static void BM_BuildSl31(benchmark::State& state) {
  const auto& A = builtin_fp("dual-F2");
  for (auto _ : state) {
    auto sl = build_sl(3, 1, A);
    benchmark::DoNotOptimize(sl.dim());
  }
}
BENCHMARK(BM_BuildSl31);

static void BM_SuperaxiomSweep(benchmark::State& state) {
  const auto& A = builtin_fp("dual-F2");
  auto sl = build_sl(2, 2, A);
  for (auto _ : state) {
    auto rep = verify_superaxioms(sl.lie);
    benchmark::DoNotOptimize(rep.failures);
  }
}
BENCHMARK(BM_SuperaxiomSweep);

static void BM_H2Sl31DualF2(benchmark::State& state) {
  const auto& A = builtin_fp("dual-F2");
  auto sl = build_sl(3, 1, A);
  for (auto _ : state) {
    auto h2 = h2_graded(sl.lie);
    benchmark::DoNotOptimize(h2.odd);
  }
}
BENCHMARK(BM_H2Sl31DualF2);

static void BM_H2Sl31Mat2F2(benchmark::State& state) {
  const auto& A = builtin_fp("mat2-F2");
  auto sl = build_sl(3, 1, A);
  for (auto _ : state) {
    auto h2 = h2_graded(sl.lie);
    benchmark::DoNotOptimize(h2.odd);
  }
}
BENCHMARK(BM_H2Sl31Mat2F2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
