#include <benchmark/benchmark.h>

#include <random>

#include "stlie/linalg.hpp"

using namespace stlie;

namespace {

Mat<PrimeField> random_fp_matrix(std::uint64_t p, std::size_t rows, std::size_t cols,
                                 std::uint32_t seed) {
  PrimeField K(p);
  Mat<PrimeField> m(K, rows, cols);
  std::mt19937 rng(seed);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng() % p;
  return m;
}

}  // namespace

static void BM_RrefGf2Packed(benchmark::State& state) {
  auto m = random_fp_matrix(2, static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(0)), 12345);
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RrefGf2Packed)->Arg(64)->Arg(256)->Arg(512);

static void BM_RrefGf2Generic(benchmark::State& state) {
  auto m = random_fp_matrix(2, static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(0)), 12345);
  for (auto _ : state) {
    auto rr = rref_generic(m);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RrefGf2Generic)->Arg(64)->Arg(256)->Arg(512);

static void BM_RrefF3(benchmark::State& state) {
  auto m = random_fp_matrix(3, static_cast<std::size_t>(state.range(0)),
                            static_cast<std::size_t>(state.range(0)), 999);
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RrefF3)->Arg(64)->Arg(256);

static void BM_Gf2AccumulatorSweep(benchmark::State& state) {
  std::size_t cols = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(7);
  std::vector<std::vector<std::uint32_t>> rows(4 * cols);
  for (auto& row : rows) {
    for (int t = 0; t < 24; ++t) row.push_back(rng() % cols);
  }
  for (auto _ : state) {
    gf2::Accumulator acc(cols);
    for (const auto& row : rows) acc.add_indices(row);
    benchmark::DoNotOptimize(acc.rank());
  }
}
BENCHMARK(BM_Gf2AccumulatorSweep)->Arg(512)->Arg(2048);

static void BM_RationalRref(benchmark::State& state) {
  RationalField Q;
  std::size_t nn = static_cast<std::size_t>(state.range(0));
  Mat<RationalField> m(Q, nn, nn);
  std::mt19937 rng(31);
  for (std::size_t r = 0; r < nn; ++r)
    for (std::size_t c = 0; c < nn; ++c)
      m.at(r, c) = Q.from_int(static_cast<long long>(rng() % 7) - 3);
  for (auto _ : state) {
    auto rr = rref(m);
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RationalRref)->Arg(32)->Arg(64);
