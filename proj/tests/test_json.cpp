#include <doctest.h>

#include "strata/json_io.hpp"
#include "strata/random_gen.hpp"

using namespace strata;
using D = StratDiagram<Rat>;

TEST_CASE("poset JSON: closure is computed, antisymmetry rejected") {
  json j = json::parse(R"({"elements": ["a","b","c"], "leq": [["a","b"],["b","c"]]})");
  FinPoset p = poset_from_json(j);
  CHECK(p.leq(p.index_of("a"), p.index_of("c")));  // transitive closure
  json bad = json::parse(R"({"elements": ["a","b"], "leq": [["a","b"],["b","a"]]})");
  CHECK_THROWS_AS(poset_from_json(bad), invalid_input);
  json round = poset_to_json(p);
  CHECK(poset_from_json(round) == p);
}

TEST_CASE("complex JSON round trip with rational entries") {
  json j = json::parse(R"({
    "lo": -1,
    "dims": [1, 2],
    "differentials": [[], [["1/2", "-3/1"]]]
  })");
  ChainComplex<Rat> x = complex_from_json<Rat>(j);
  CHECK(x.dim(-1) == 1);
  CHECK(x.dim(0) == 2);
  CHECK(x.d(0)(0, 0) == Rat::from_string("1/2"));
  json out = complex_to_json(x);
  CHECK(complex_from_json<Rat>(out) == x);
}

TEST_CASE("complex JSON rejects broken differentials") {
  json bad_shape = json::parse(R"({"lo": 0, "dims": [1, 1], "differentials": [[], [[1, 2]]]})");
  CHECK_THROWS_AS(complex_from_json<Rat>(bad_shape), invalid_input);
  json bad_dd = json::parse(R"({
    "lo": 0, "dims": [1, 1, 1],
    "differentials": [[], [[1]], [[1]]]
  })");
  CHECK_THROWS_AS(complex_from_json<Rat>(bad_dd), invalid_input);
  json bad_scalar = json::parse(R"({"lo": 0, "dims": [1, 1], "differentials": [[], [["x"]]]})");
  CHECK_THROWS_AS(complex_from_json<Rat>(bad_scalar), invalid_input);
}

TEST_CASE("diagram JSON round trip on random diagrams") {
  FinPoset v({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  Rng rng(21);
  for (int t = 0; t < 6; ++t) {
    Rng r = rng.fork(t);
    D f = random_diagram<Rat>(r, v, MonotoneMap::identity(v));
    json j = diagram_to_json(f);
    D g = diagram_from_json<Rat>(j);
    CHECK(f == g);
    CHECK(j.dump() == diagram_to_json(g).dump());
  }
}

TEST_CASE("diagram JSON with a nontrivial strat map") {
  json j = json::parse(R"({
    "poset": {"elements": ["v0","v1","e"], "leq": [["v0","e"],["v1","e"]]},
    "strat": {
      "poset": {"elements": ["0","1"], "leq": [["0","1"]]},
      "values": {"v0": "0", "v1": "1", "e": "1"}
    }
  })");
  D f = diagram_from_json<Rat>(j);
  CHECK(f.shape().size() == 3);
  CHECK(f.strat().target().size() == 2);
  for (int x = 0; x < 3; ++x) CHECK(f.value(x).is_zero_complex());
}

TEST_CASE("diagram JSON over a prime field") {
  FpScope scope(7);
  json j = json::parse(R"({
    "poset": {"elements": ["0","1"], "leq": [["0","1"]]},
    "complexes": {
      "0": {"lo": 0, "dims": [1], "differentials": [[]]},
      "1": {"lo": 0, "dims": [1], "differentials": [[]]}
    },
    "maps": [{"from": "0", "to": "1", "lo": 0, "components": [[[3]]]}]
  })");
  StratDiagram<Fp> f = diagram_from_json<Fp>(j);
  CHECK(f.structure_map(0, 1).comp(0)(0, 0) == Fp::bound(3, 7));
}

TEST_CASE("bad diagram JSON surfaces structured validation, not aborts") {
  // a stored map on an unrelated pair
  json j = json::parse(R"({
    "poset": {"elements": ["a","b"], "leq": []},
    "complexes": {
      "a": {"lo": 0, "dims": [1], "differentials": [[]]},
      "b": {"lo": 0, "dims": [1], "differentials": [[]]}
    },
    "maps": [{"from": "a", "to": "b", "lo": 0, "components": [[[1]]]}]
  })");
  CHECK_THROWS_AS(diagram_from_json<Rat>(j), invalid_input);
}
