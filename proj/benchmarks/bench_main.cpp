#include <benchmark/benchmark.h>

#include <random>

#include "dncohom/cohomology.hpp"
#include "dncohom/pva.hpp"
#include "dncohom/sparse_matrix.hpp"
#include "dncohom/theta.hpp"
#include "dncohom/varcalc.hpp"

using namespace dncohom;

// Full rank computation per call; the memo in h_theta_dim is bypassed by
// going through image_matrix.
static void BM_ImageMatrixRank(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto m = image_matrix(D, 3, d);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
  state.counters["rows"] = static_cast<double>(m.rows());
}
BENCHMARK(BM_ImageMatrixRank)->Args({2, 12})->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_BlockRank(benchmark::State& state) {
  const int D = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(image_rank(D, 3, d));
}
BENCHMARK(BM_BlockRank)->Args({2, 12})->Args({3, 6})->Args({4, 5})->Unit(benchmark::kMillisecond);

static void BM_ExactRankRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> coeff(-5, 5), fill(0, 9);
  std::vector<SparseRow<Rational>> rows(n);
  for (auto& r : rows)
    for (std::size_t c = 0; c < n; ++c)
      if (fill(rng) < 2) r.emplace_back(c, coeff(rng));
  for (auto& r : rows) std::erase_if(r, [](const auto& e) { return e.second == 0; });
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(rows));
}
BENCHMARK(BM_ExactRankRandom)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_BruteCohomology(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(brute_cohomology(2, p, d, 2));
}
BENCHMARK(BM_BruteCohomology)->Args({1, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

static void BM_SolveH2(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_h2(2, d, 2));
}
BENCHMARK(BM_SolveH2)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
