#include <benchmark/benchmark.h>

#include "strata/matrix.hpp"
#include "strata/rng.hpp"

using namespace strata;

namespace {

Matrix<Rat> random_matrix(int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rat(rng.range(-4, 4));
  return m;
}

void BM_RankNullity(benchmark::State& st) {
  Matrix<Rat> m = random_matrix(int(st.range(0)), 42);
  for (auto _ : st) {
    auto rn = rank_nullity(m);
    benchmark::DoNotOptimize(rn.rank);
  }
}

void BM_Determinant(benchmark::State& st) {
  Matrix<Rat> m = random_matrix(int(st.range(0)), 7);
  for (auto _ : st) {
    Rat d = determinant(m);
    benchmark::DoNotOptimize(d);
  }
}

}  // namespace

BENCHMARK(BM_RankNullity)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16);
