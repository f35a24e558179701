#include <doctest.h>

#include "strata/ingest.hpp"
#include "strata/json_io.hpp"
#include "strata/nerve.hpp"

using namespace strata;

namespace {

StratSimplicialComplex interval_model() {
  FinPoset p({"0", "1"}, {{"0", "1"}});
  return StratSimplicialComplex::build(p, {"v0", "v1"}, {0, 1}, {{0, 1}});
}

}  // namespace

TEST_CASE("interval model face poset") {
  FacePosetModel m = face_poset(interval_model());
  CHECK(m.shape.size() == 3);
  int v0 = m.shape.index_of("{v0}");
  int v1 = m.shape.index_of("{v1}");
  int e = m.shape.index_of("{v0,v1}");
  CHECK(m.shape.lt(v0, e));
  CHECK(m.shape.lt(v1, e));
  CHECK_FALSE(m.shape.lt(v0, v1));
  CHECK(m.strat.target().id(m.strat.apply(v0)) == "0");
  CHECK(m.strat.target().id(m.strat.apply(v1)) == "1");
  CHECK(m.strat.target().id(m.strat.apply(e)) == "1");

  FiberDiagnostics f1 = stratum_fiber(m, 1);
  CHECK(f1.fiber.size() == 2);
  CHECK(f1.nerve_euler == 1);
  CHECK(f1.components == 1);
  FiberDiagnostics f0 = stratum_fiber(m, 0);
  CHECK(f0.fiber.size() == 1);
}

TEST_CASE("trivially stratified complex has a constant strat map") {
  FinPoset p({"only"}, {});
  auto k = StratSimplicialComplex::build(p, {"a", "b", "c"}, {0, 0, 0},
                                         {{0, 1}, {1, 2}, {0, 2}});
  FacePosetModel m = face_poset(k);
  for (int c = 0; c < m.shape.size(); ++c) CHECK(m.strat.apply(c) == 0);
  FiberDiagnostics f = stratum_fiber(m, 0);
  CHECK(f.fiber.size() == m.shape.size());
  // boundary of a triangle: chi = 0
  CHECK(f.nerve_euler == 0);
}

TEST_CASE("incomparable labels on one simplex are rejected") {
  FinPoset p({"a", "b"}, {});
  auto k = StratSimplicialComplex::build(p, {"x", "y"}, {0, 1}, {{0, 1}});
  CHECK_THROWS_AS(face_poset(k), invalid_input);
}

TEST_CASE("face closure is computed on build") {
  FinPoset p({"0"}, {});
  auto k = StratSimplicialComplex::build(p, {"a", "b", "c"}, {0, 0, 0}, {{0, 1, 2}});
  CHECK(int(k.simplices.size()) == 7);  // 3 + 3 + 1
}

TEST_CASE("strat map is monotone and closed strata pull back closed") {
  FinPoset p({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  auto k = StratSimplicialComplex::build(
      p, {"a", "b", "c", "d"}, {0, 1, 1, 2},
      {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}});
  FacePosetModel m = face_poset(k);
  // monotonicity is enforced by the MonotoneMap constructor; check closure
  for (int q = 0; q < p.size(); ++q) {
    Subposet down;
    for (int x = 0; x < p.size(); ++x)
      if (p.leq(x, q)) down.members.push_back(x);
    Subposet pre = preimage(m.strat, down);
    CHECK(is_closed(m.shape, pre));
  }
}

TEST_CASE("nerve Euler characteristic equals the simplex count alternating sum") {
  FinPoset p({"0", "1"}, {{"0", "1"}});
  auto k = StratSimplicialComplex::build(p, {"a", "b", "c", "d"}, {0, 0, 1, 1},
                                         {{0, 1}, {1, 2}, {2, 3}, {1, 2, 3}});
  FacePosetModel m = face_poset(k);
  long long simplex_alt = 0;
  for (const auto& s : k.simplices) simplex_alt += (s.size() % 2 == 1) ? 1 : -1;
  ChainFamily fam = ChainFamily::enumerate(m.shape, Subposet::all(m.shape).members);
  long long nerve_chi = 0;
  for (const auto& ch : fam.chains) nerve_chi += (ch.size() % 2 == 1) ? 1 : -1;
  CHECK(nerve_chi == simplex_alt);
}

TEST_CASE("simplicial JSON loads") {
  json j = json::parse(R"({
    "strata_poset": {"elements": ["0", "1"], "leq": [["0", "1"]]},
    "vertices": [{"id": "v0", "stratum": "0"}, {"id": "v1", "stratum": "1"}],
    "simplices": [["v0", "v1"]]
  })");
  StratSimplicialComplex k = simplicial_from_json(j);
  CHECK(k.simplices.size() == 3);
  CHECK_THROWS_AS(simplicial_from_json(json::parse(R"({
    "strata_poset": {"elements": ["0"], "leq": []},
    "vertices": [{"id": "v0", "stratum": "0"}],
    "simplices": [["zz"]]
  })")), invalid_input);
}
