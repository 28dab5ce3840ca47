#include "petcoh/permfan.hpp"
#include "petcoh/petring.hpp"
#include "petcoh/quotient_oracle.hpp"
#include "petcoh/zlinalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace petcoh;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto size = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> dist(-20, 20);
  ZMatrix a(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) a(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

static void BM_MultiplicationTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto subsets = all_subsets(n);
  for (auto _ : state)
    for (const auto& j : subsets)
      for (const auto& k : subsets) benchmark::DoNotOptimize(mult_basis(j, k));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subsets.size() * subsets.size()));
}
BENCHMARK(BM_MultiplicationTable)->DenseRange(4, 8, 2);

static void BM_QuotientPiece(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_graded_piece(n, d));
}
BENCHMARK(BM_QuotientPiece)->Args({4, 2})->Args({5, 2})->Args({5, 3})->Args({6, 3})->Unit(benchmark::kMillisecond);

static void BM_TorusPiece(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(compute_torus_piece(n, d));
}
BENCHMARK(BM_TorusPiece)->Args({4, 2})->Args({5, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
