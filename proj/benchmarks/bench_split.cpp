#include <benchmark/benchmark.h>

#include "strata/k0.hpp"
#include "strata/random_gen.hpp"

using namespace strata;

namespace {

void BM_VerifySplitting(benchmark::State& st) {
  Rng rng(11);
  FinPoset p = random_poset(rng, int(st.range(0)));
  StratDiagram<Rat> f = random_diagram<Rat>(rng, p, MonotoneMap::identity(p));
  for (auto _ : st) {
    SplitReport rep = verify_splitting(f);
    benchmark::DoNotOptimize(rep.k0_pass);
  }
}

}  // namespace

BENCHMARK(BM_VerifySplitting)->Arg(4)->Arg(5)->Arg(6);
