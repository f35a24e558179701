#include <doctest.h>

#include "strata/checks.hpp"
#include "strata/json_io.hpp"

using namespace strata;
using D = StratDiagram<Rat>;

namespace {

FinPoset chain_n(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i <= n; ++i) ids.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) rel.emplace_back(ids[i], ids[i + 1]);
  return FinPoset(ids, rel);
}

// one-step-at-a-time chooser: a different valid closed/open split order
Subposet choose_single_minimal(const FinPoset& p) {
  Subposet z = minimal_elements(p);
  z.members.resize(1);
  return z;
}

}  // namespace

TEST_CASE("K0 classes of basic diagrams") {
  FinPoset c = chain_n(1);
  MonotoneMap id = MonotoneMap::identity(c);
  Subposet u = Subposet::of_ids(c, {"1"});
  D b = D::constant(induced_poset(c, u), restrict_map(id, u), ChainComplex<Rat>::point(0));
  D jb = extend_zero_open(c, id, u, b);
  CHECK(k0_class(jb).entries == std::vector<long long>{0, 1});
  D f = D::constant(c, id, ChainComplex<Rat>::point(0));
  CHECK(k0_class(f).entries == std::vector<long long>{1, 1});
}

TEST_CASE("K0 is additive on pointwise cones") {
  FinPoset v({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    Rng r = rng.fork(t);
    D f = random_diagram<Rat>(r, v, MonotoneMap::identity(v));
    D g = random_diagram<Rat>(r, v, MonotoneMap::identity(v));
    DiagramMap<Rat> phi = random_diagram_map(r, f, g);
    CHECK(k0_class(pointwise_cone(phi)) == k0_class(g) - k0_class(f));
  }
}

TEST_CASE("projective space cell model: K0 splits as Z^3 on the unit basis") {
  FinPoset p2 = chain_n(2);
  D f = D::constant(p2, MonotoneMap::identity(p2), ChainComplex<Rat>::point(0));
  SplitReport rep = verify_splitting(f);
  CHECK(rep.pass());
  CHECK(rep.depth == 3);
  REQUIRE(rep.generator_matrix.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(rep.generator_matrix[i][j] == (i == j ? 1 : 0));
  CHECK(rep.generator_det == 1);
}

TEST_CASE("constant diagram on the interval decomposes onto the bottom stratum") {
  FinPoset c = chain_n(1);
  D f = D::constant(c, MonotoneMap::identity(c), ChainComplex<Rat>::point(0));
  Decomposition<Rat> dec = split_decompose(f);
  CHECK(k0_class(dec.pieces[0]).entries == std::vector<long long>{1});
  CHECK(k0_class(dec.pieces[1]).entries == std::vector<long long>{0});
  CHECK(is_acyclic(dec.pieces[1].value(0)));  // j_#^L F ~ 0 for constant F
}

TEST_CASE("zero diagram decomposes trivially") {
  FinPoset v({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  D z = D::zero(v, MonotoneMap::identity(v));
  SplitReport rep = verify_splitting(z);
  CHECK(rep.pass());
  CHECK(rep.total_class.is_zero());
}

TEST_CASE("empty stratifying poset is the degenerate base case") {
  FinPoset empty({}, {});
  D z(empty, MonotoneMap::identity(empty), {}, {});
  SplitReport rep = verify_splitting(z);
  CHECK(rep.pass());
  CHECK(rep.depth == 0);
  CHECK(split_decompose(z).log.empty());
}

TEST_CASE("open extensions pass through the first recursion step") {
  FinPoset c = chain_n(1);
  MonotoneMap id = MonotoneMap::identity(c);
  Subposet u = Subposet::of_ids(c, {"1"});
  Rng rng(5);
  D b = random_diagram<Rat>(rng, induced_poset(c, u), restrict_map(id, u));
  D jb = extend_zero_open(c, id, u, b);
  Decomposition<Rat> dec = split_decompose(jb);
  CHECK(k0_class(dec.pieces[0]).is_zero());
  CHECK(k0_class(dec.pieces[1]) == k0_class(b));
}

TEST_CASE("splitting identity on random diagrams over assorted posets") {
  std::vector<FinPoset> shapes;
  shapes.push_back(chain_n(1));
  shapes.push_back(chain_n(2));
  shapes.push_back(FinPoset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
  shapes.push_back(FinPoset({"a", "b", "c", "d", "e", "f"},
                            {{"a", "c"}, {"b", "c"}, {"c", "e"}, {"d", "e"}, {"b", "f"}}));
  Rng rng(7);
  for (const auto& c : shapes) {
    for (int t = 0; t < 8; ++t) {
      Rng r = rng.fork(t);
      D f = random_diagram<Rat>(r, c, MonotoneMap::identity(c));
      SplitReport rep = verify_splitting(f);
      CHECK(rep.k0_pass);
      CHECK(rep.generator_pass);
      CHECK(rep.depth_pass);
    }
  }
}

TEST_CASE("recursion depth equals the Krull dimension plus one") {
  Rng rng(11);
  for (int t = 0; t < 15; ++t) {
    Rng r = rng.fork(t);
    FinPoset p = random_poset(r, r.range(1, 6));
    D f = random_diagram<Rat>(r, p, MonotoneMap::identity(p));
    Decomposition<Rat> dec = split_decompose(f);
    CHECK(dec.depth == krull_dim(p) + 1);
  }
}

TEST_CASE("K0 decomposition is independent of the split order") {
  FinPoset v({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  Rng rng(13);
  for (int t = 0; t < 8; ++t) {
    Rng r = rng.fork(t);
    D f = random_diagram<Rat>(r, v, MonotoneMap::identity(v));
    SplitReport by_minimal = verify_splitting(f);
    SplitReport by_single = verify_splitting(f, choose_single_minimal, false);
    CHECK(by_minimal.k0_pass);
    CHECK(by_single.k0_pass);
    for (size_t i = 0; i < by_minimal.piece_classes.size(); ++i)
      CHECK(by_minimal.piece_classes[i] == by_single.piece_classes[i]);
  }
}

TEST_CASE("splitting is stable under restriction to the image subposet") {
  // strat map into a larger poset with unused strata
  FinPoset c = chain_n(1);
  FinPoset big = chain_n(3);
  MonotoneMap s(c, big, {0, 2});
  Rng rng(17);
  for (int t = 0; t < 6; ++t) {
    Rng r = rng.fork(t);
    D f = random_diagram<Rat>(r, c, s);
    SplitReport over_big = verify_splitting(f);
    CHECK(over_big.k0_pass);
    CHECK(over_big.generator_pass);
    // restrict the target to the image {0, 2}
    Subposet img = Subposet::of_ids(big, {"0", "2"});
    D g(c, corestrict(s, img), f.values(), f.raw_maps());
    SplitReport over_img = verify_splitting(g);
    CHECK(over_img.k0_pass);
    // nonempty strata contribute the same classes; empty ones contribute zero
    CHECK(over_big.piece_classes[0] == over_img.piece_classes[0]);
    CHECK(over_big.piece_classes[2] == over_img.piece_classes[1]);
    CHECK(over_big.piece_classes[1].entries.empty());
    CHECK(over_big.piece_classes[3].entries.empty());
  }
}

namespace {

// Greedy witness of permutation-triangularity: repeatedly find a column with
// exactly one nonzero entry among the remaining rows, with value +-1, and
// strike out its row and column.
bool permutation_triangular_unit(const std::vector<std::vector<long long>>& m) {
  int n = int(m.size());
  std::vector<bool> row_used(n, false), col_used(n, false);
  for (int step = 0; step < n; ++step) {
    int pick_col = -1, pick_row = -1;
    for (int j = 0; j < n && pick_col < 0; ++j) {
      if (col_used[j]) continue;
      int nz = 0, at = -1;
      for (int i = 0; i < n; ++i) {
        if (row_used[i] || m[i][j] == 0) continue;
        ++nz;
        at = i;
      }
      if (nz == 1 && (m[at][j] == 1 || m[at][j] == -1)) {
        pick_col = j;
        pick_row = at;
      }
    }
    if (pick_col < 0) return false;
    col_used[pick_col] = true;
    row_used[pick_row] = true;
  }
  return true;
}

}  // namespace

TEST_CASE("generator matrix is permutation-triangular with unit diagonal") {
  Rng rng(19);
  for (int t = 0; t < 12; ++t) {
    Rng r = rng.fork(t);
    FinPoset p = random_poset(r, r.range(1, 5));
    D f = D::zero(p, MonotoneMap::identity(p));
    SplitReport rep = verify_splitting(f);
    CHECK(rep.generator_pass);
    CHECK(permutation_triangular_unit(rep.generator_matrix));
  }
}

TEST_CASE("generator matrix is triangular with unit diagonal on chains") {
  for (int n = 1; n <= 3; ++n) {
    FinPoset c = chain_n(n);
    D f = D::constant(c, MonotoneMap::identity(c), ChainComplex<Rat>::point(0));
    SplitReport rep = verify_splitting(f);
    CHECK(rep.generator_pass);
    for (size_t i = 0; i < rep.generator_matrix.size(); ++i) {
      CHECK(rep.generator_matrix[i][i] == 1);
      for (size_t j = 0; j < i; ++j) CHECK(rep.generator_matrix[i][j] == 0);
    }
  }
}

TEST_CASE("split report serializes deterministically") {
  FinPoset p2 = chain_n(2);
  D f = D::constant(p2, MonotoneMap::identity(p2), ChainComplex<Rat>::point(0));
  std::string a = split_report_to_json(verify_splitting(f)).dump(2);
  std::string b = split_report_to_json(verify_splitting(f)).dump(2);
  CHECK(a == b);
}
