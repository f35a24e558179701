#include <benchmark/benchmark.h>

#include "strata/kan.hpp"
#include "strata/random_gen.hpp"
#include "strata/rhom.hpp"

using namespace strata;

namespace {

void BM_Hocolim(benchmark::State& st) {
  Rng rng(3);
  FinPoset p = random_poset(rng, int(st.range(0)), 50);
  StratDiagram<Rat> f = random_diagram<Rat>(rng, p, MonotoneMap::identity(p));
  for (auto _ : st) {
    KanTotal<Rat> t = hocolim(f);
    benchmark::DoNotOptimize(t.total.total_dim());
  }
}

void BM_Rhom(benchmark::State& st) {
  FinPoset c({"0", "1"}, {{"0", "1"}});
  GenProfile prof;
  prof.lo = -1;
  prof.hi = 1;
  prof.max_dim = int(st.range(0));
  Rng rng(5);
  StratDiagram<Rat> f = random_diagram<Rat>(rng, c, MonotoneMap::identity(c), prof);
  StratDiagram<Rat> g = random_diagram<Rat>(rng, c, MonotoneMap::identity(c), prof);
  for (auto _ : st) {
    RhomComplex<Rat> r = rhom(f, g);
    benchmark::DoNotOptimize(r.total.total_dim());
  }
}

}  // namespace

BENCHMARK(BM_Hocolim)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_Rhom)->Arg(2)->Arg(3);
