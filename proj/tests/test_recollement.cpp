#include <doctest.h>

#include "strata/checks.hpp"

using namespace strata;
using D = StratDiagram<Rat>;
using Ctx = RecollementCtx<Rat>;

namespace {

FinPoset interval() { return FinPoset({"0", "1"}, {{"0", "1"}}); }

Ctx interval_ctx() {
  FinPoset c = interval();
  return Ctx(c, MonotoneMap::identity(c), Subposet::of_ids(c, {"0"}));
}

D closed_q(const Ctx& ctx) {
  return D::constant(ctx.closed_poset(), restrict_map(ctx.strat(), ctx.closed_part()),
                     ChainComplex<Rat>::point(0));
}

D open_q(const Ctx& ctx) {
  return D::constant(ctx.open_poset(), restrict_map(ctx.strat(), ctx.open_part()),
                     ChainComplex<Rat>::point(0));
}

bool all_zero(const D& f) {
  for (int x = 0; x < f.shape().size(); ++x)
    if (!f.value(x).is_zero_complex()) return false;
  return true;
}

bool pointwise_same_homology(const D& a, const D& b, int shift_b = 0) {
  for (int x = 0; x < a.shape().size(); ++x)
    for (int n = -5; n <= 5; ++n)
      if (homology(a.value(x), n) != homology(b.value(x), n - shift_b)) return false;
  return true;
}

}  // namespace

TEST_CASE("context construction checks open/closed decomposition") {
  FinPoset c = interval();
  CHECK_THROWS_AS(Ctx(c, MonotoneMap::identity(c), Subposet::of_ids(c, {"1"})),
                  invalid_input);
  Ctx ok = interval_ctx();
  CHECK(ok.closed_part().members == std::vector<int>{0});
  CHECK(ok.open_part().members == std::vector<int>{1});
}

TEST_CASE("strata preimages: closed role through a nontrivial strat map") {
  // interval face-poset model: v0 < e > v1 over P = {0 < 1}
  FinPoset c({"v0", "v1", "e"}, {{"v0", "e"}, {"v1", "e"}});
  FinPoset p({"0", "1"}, {{"0", "1"}});
  MonotoneMap s(c, p, {0, 1, 1});
  RecollementCtx<Rat> ctx(c, s, Subposet::of_ids(p, {"0"}));
  CHECK(ctx.closed_part().members == std::vector<int>{0});
  CHECK(ctx.open_part().members == std::vector<int>{1, 2});
}

TEST_CASE("vanishing compositions hold on the nose") {
  Ctx ctx = interval_ctx();
  D a = closed_q(ctx);
  D b = open_q(ctx);
  CHECK(all_zero(ctx.pull_open(ctx.push_closed(a))));
  CHECK(all_zero(ctx.pull_closed(ctx.extend_open(b))));
}

TEST_CASE("i^!(j_# Q) = Q[-1] on the closed point") {
  Ctx ctx = interval_ctx();
  D jb = ctx.extend_open(open_q(ctx));
  D sh = ctx.shriek_closed(jb);
  CHECK(homology(sh.value(0), -1) == 1);
  for (int n = -4; n <= 4; ++n)
    if (n != -1) CHECK(homology(sh.value(0), n) == 0);
}

TEST_CASE("j_#^L of a constant diagram vanishes") {
  Ctx ctx = interval_ctx();
  D f = D::constant(ctx.shape(), ctx.strat(), ChainComplex<Rat>::point(0));
  D l = ctx.pull_open_left(f);
  for (int x = 0; x < l.shape().size(); ++x) CHECK(is_acyclic(l.value(x)));
}

TEST_CASE("j_#^L after j_# recovers the input") {
  Ctx ctx = interval_ctx();
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Rng r = rng.fork(t);
    D b = random_diagram<Rat>(r, ctx.open_poset(),
                              restrict_map(ctx.strat(), ctx.open_part()));
    D round = ctx.pull_open_left(ctx.extend_open(b));
    CHECK(pointwise_same_homology(round, b));
  }
}

TEST_CASE("j_#^L of a closed pushforward is the shifted open Kan restriction") {
  Ctx ctx = interval_ctx();
  Rng rng(5);
  for (int t = 0; t < 8; ++t) {
    Rng r = rng.fork(t);
    D a = random_diagram<Rat>(r, ctx.closed_poset(),
                              restrict_map(ctx.strat(), ctx.closed_part()));
    D lhs = ctx.pull_open_left(ctx.push_closed(a));
    D rhs = ctx.pull_open(ctx.lan_closed(a));
    // lhs ~ rhs[1]; chi bookkeeping [F] = [i_# i^* F] + [j_# j_#^L F]
    CHECK(pointwise_same_homology(lhs, rhs, 1));
    D ia = ctx.push_closed(a);
    K0Vector total = k0_class(ia);
    K0Vector viaT3 = k0_class(ctx.lan_closed(ctx.pull_closed(ia)));
    viaT3 += k0_class(ctx.extend_open(ctx.pull_open_left(ia)));
    CHECK(total == viaT3);
  }
}

TEST_CASE("six functor images on degenerate inputs") {
  Ctx ctx = interval_ctx();
  D a = closed_q(ctx);
  D ia = ctx.push_closed(a);
  SixFunctorImages<Rat> s = six_functors(ctx, ia);
  CHECK(all_zero(s.j_pull));
  CHECK(s.i_pull == a);
  // T1 degenerates to 0 -> F -> F and T2 to F -> F -> 0-ish
  auto tris = localization_triangles(ctx, ia);
  for (const auto& t : tris) CHECK(t.pass());
  D jb = ctx.extend_open(open_q(ctx));
  for (const auto& t : localization_triangles(ctx, jb)) CHECK(t.pass());
}

TEST_CASE("localization triangles are exact on random diagrams over chains and V") {
  std::vector<FinPoset> shapes;
  shapes.push_back(interval());
  shapes.push_back(FinPoset({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}));
  shapes.push_back(FinPoset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
  shapes.push_back(FinPoset({"a", "b", "c", "d", "e"},
                            {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"b", "e"}}));
  Rng rng(7);
  for (const auto& c : shapes) {
    Ctx ctx(c, MonotoneMap::identity(c), minimal_elements(c));
    for (int t = 0; t < 6; ++t) {
      Rng r = rng.fork(t);
      D f = random_diagram<Rat>(r, c, MonotoneMap::identity(c));
      for (const auto& rep : localization_triangles(ctx, f)) {
        CHECK(rep.pass());
      }
    }
  }
}

TEST_CASE("strict idempotence identities") {
  Ctx ctx = interval_ctx();
  Rng rng(11);
  D a = random_diagram<Rat>(rng, ctx.closed_poset(),
                            restrict_map(ctx.strat(), ctx.closed_part()));
  D b = random_diagram<Rat>(rng, ctx.open_poset(),
                            restrict_map(ctx.strat(), ctx.open_part()));
  CHECK(ctx.pull_closed(ctx.push_closed(a)) == a);  // i^* i_* = id strictly
  CHECK(ctx.pull_open(ctx.extend_open(b)) == b);    // j^* j_# = id strictly
}

TEST_CASE("unit/counit quasi-isomorphism identities") {
  Ctx ctx = interval_ctx();
  Rng rng(13);
  D a = random_diagram<Rat>(rng, ctx.closed_poset(),
                            restrict_map(ctx.strat(), ctx.closed_part()));
  D b = random_diagram<Rat>(rng, ctx.open_poset(),
                            restrict_map(ctx.strat(), ctx.open_part()));
  // i^* i_# A ~ A via the vertex inclusion
  KanExtension<Rat> lan = ctx.lan_closed_full(a);
  for (int i = 0; i < ctx.closed_part().size(); ++i)
    CHECK(is_quasi_iso(
        hocolim_vertex_inclusion(a, lan.totals[ctx.closed_part().members[i]], i)));
  // j^* j_* B ~ B via the vertex projection
  KanExtension<Rat> ran = ctx.push_open_full(b);
  for (int i = 0; i < ctx.open_part().size(); ++i)
    CHECK(is_quasi_iso(
        holim_vertex_projection(b, ran.totals[ctx.open_part().members[i]], i)));
}

TEST_CASE("the two constructions of i_# agree pointwise") {
  std::vector<FinPoset> shapes;
  shapes.push_back(interval());
  shapes.push_back(FinPoset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
  Rng rng(17);
  for (const auto& c : shapes) {
    Ctx ctx(c, MonotoneMap::identity(c), minimal_elements(c));
    for (int t = 0; t < 6; ++t) {
      Rng r = rng.fork(t);
      D a = random_diagram<Rat>(r, ctx.closed_poset(),
                                restrict_map(ctx.strat(), ctx.closed_part()));
      for (const auto& cmp : compare_lan_constructions(ctx, a)) CHECK(is_quasi_iso(cmp));
      // restricted to the closed part the fiber formula returns the input
      D w = ctx.lan_closed_via_fib(a);
      D wz = ctx.pull_closed(w);
      CHECK(wz == a);
    }
  }
}

TEST_CASE("axiom suite passes on seeded samples") {
  Ctx ctx = interval_ctx();
  SuiteReport rep = check_recollement_axioms(ctx, 6, 2024);
  CHECK(rep.pass());
  for (const auto& c : rep.checks) CHECK(c.samples >= 6);
}

TEST_CASE("axiom suite over a prime field") {
  FpScope scope(13);
  FinPoset c = interval();
  RecollementCtx<Fp> ctx(c, MonotoneMap::identity(c), Subposet::of_ids(c, {"0"}));
  SuiteReport rep = check_recollement_axioms<Fp>(ctx, 4, 99);
  CHECK(rep.pass());
}
