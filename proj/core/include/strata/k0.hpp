#pragma once

// Grothendieck classes and the recursive strata decomposition.
//
// Over a field, K_0 of perfect complexes is Z via the Euler characteristic,
// so the class of a diagram is the integer vector of pointwise Euler
// characteristics: a Z-valued constructible function on C.  The splitting
// recursion peels off the minimal elements Z of P, keeps i^* there, and
// recurses on j_#^L over the open complement; the K_0 identity
//
//   [F] = sum_p [ i_{p,#} G_p ]
//
// is verified exactly, together with Z-invertibility of the matrix sending
// the point-pushforward generator basis to its decomposition classes and
// exactness of the flipped triangle at every recursion step.

#include <functional>

#include "strata/recollement.hpp"

namespace strata {

struct K0Vector {
  std::vector<std::string> index;
  std::vector<long long> entries;

  friend bool operator==(const K0Vector& a, const K0Vector& b) {
    return a.index == b.index && a.entries == b.entries;
  }
  K0Vector& operator+=(const K0Vector& o) {
    if (index != o.index) throw invalid_input("K0Vector: index mismatch");
    for (size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
    return *this;
  }
  friend K0Vector operator-(K0Vector a, const K0Vector& b) {
    if (a.index != b.index) throw invalid_input("K0Vector: index mismatch");
    for (size_t i = 0; i < a.entries.size(); ++i) a.entries[i] -= b.entries[i];
    return a;
  }
  bool is_zero() const {
    for (long long e : entries)
      if (e != 0) return false;
    return true;
  }
};

template <class K>
K0Vector k0_class(const StratDiagram<K>& f) {
  K0Vector v;
  for (int c = 0; c < f.shape().size(); ++c) {
    v.index.push_back(f.shape().id(c));
    v.entries.push_back(euler_char(f.value(c)));
  }
  return v;
}

// Which closed subposet to split off at each step; the default follows the
// Krull-dimension induction and takes all minimal elements.
using ZChooser = std::function<Subposet(const FinPoset&)>;

inline Subposet choose_minimal(const FinPoset& p) { return minimal_elements(p); }

template <class K>
struct Decomposition {
  // Per stratum p (original P order): the fiber C_p in C and the piece G_p.
  std::vector<Subposet> fibers;
  std::vector<StratDiagram<K>> pieces;
  struct Step {
    std::vector<std::string> z_ids, u_ids;
    TriangleReport t3;
  };
  std::vector<Step> log;
  int depth = 0;
};

template <class K>
Decomposition<K> split_decompose(const StratDiagram<K>& f,
                                 const ZChooser& choose = choose_minimal) {
  const FinPoset& c = f.shape();
  const FinPoset& p = f.strat().target();
  Decomposition<K> out;
  out.fibers.resize(p.size());
  out.pieces.resize(p.size());

  // current state: diagram on a full subposet of C, stratified over a full
  // subposet of P; `embed_c` / `embed_p` map current indices to originals
  StratDiagram<K> cur = f;
  std::vector<int> embed_c, embed_p;
  for (int i = 0; i < c.size(); ++i) embed_c.push_back(i);
  for (int i = 0; i < p.size(); ++i) embed_p.push_back(i);

  while (!cur.strat().target().empty()) {
    const FinPoset& q = cur.strat().target();
    Subposet z = choose(q);
    if (z.empty()) throw invalid_input("split_decompose: chooser returned empty Z");
    if (!is_closed(q, z))
      throw invalid_input("split_decompose: chooser returned a non-closed subposet");
    Subposet u = z.complement(q);
    RecollementCtx<K> ctx(cur.shape(), cur.strat(), z);

    typename Decomposition<K>::Step step;
    for (int m : z.members) step.z_ids.push_back(q.id(m));
    for (int m : u.members) step.u_ids.push_back(q.id(m));
    step.t3 = localization_triangles(ctx, cur)[2];
    out.log.push_back(std::move(step));
    ++out.depth;

    for (int m : z.members) {
      Subposet fiber_local = preimage(cur.strat(), Subposet{{m}});
      Subposet fiber_global;
      for (int lm : fiber_local.members) fiber_global.members.push_back(embed_c[lm]);
      int pg = embed_p[m];
      out.fibers[pg] = fiber_global;
      out.pieces[pg] = restrict_diagram(cur, fiber_local);
    }

    if (u.empty()) break;
    StratDiagram<K> next = ctx.pull_open_left(cur);
    // restratify over the open complement
    MonotoneMap next_strat = corestrict(next.strat(), u);
    StratDiagram<K> rebased(next.shape(), next_strat, next.values(), next.raw_maps());

    std::vector<int> new_embed_c;
    for (int lm : ctx.open_part().members) new_embed_c.push_back(embed_c[lm]);
    std::vector<int> new_embed_p;
    for (int m : u.members) new_embed_p.push_back(embed_p[m]);
    embed_c = std::move(new_embed_c);
    embed_p = std::move(new_embed_p);
    cur = std::move(rebased);
  }
  return out;
}

// Extension of a per-stratum piece back over C by left Kan extension along
// the (locally closed) inclusion C_p into C.
template <class K>
StratDiagram<K> extend_piece(const StratDiagram<K>& f, const Subposet& fiber,
                             const StratDiagram<K>& piece) {
  MonotoneMap inc = MonotoneMap::inclusion(f.shape(), fiber);
  return ho_lan(inc, piece, f.strat());
}

struct SplitReport {
  K0Vector total_class;
  K0Vector reassembled;
  bool k0_pass = false;

  std::vector<K0Vector> piece_classes;      // per stratum, over its fiber
  std::vector<std::string> strata;          // ids of P in order

  std::vector<std::vector<long long>> generator_matrix;  // rows: decomposition
  long long generator_det = 0;
  bool generator_pass = false;

  std::vector<TriangleReport> per_step_t3;
  int depth = 0;
  bool depth_pass = false;

  bool pass() const {
    if (!k0_pass || !generator_pass || !depth_pass) return false;
    for (const auto& r : per_step_t3)
      if (!r.pass()) return false;
    return true;
  }
};

// The unit generator at c: left Kan extension of the unit complex along
// {c} -> C; its class is the indicator of the up-set of c.
template <class K>
StratDiagram<K> unit_generator(const StratDiagram<K>& f, int c) {
  Subposet single{{c}};
  FinPoset one = induced_poset(f.shape(), single);
  StratDiagram<K> unit(one, restrict_map(f.strat(), single),
                       {ChainComplex<K>::point(0)}, {});
  return extend_piece(f, single, unit);
}

template <class K>
SplitReport verify_splitting(const StratDiagram<K>& f,
                             const ZChooser& choose = choose_minimal,
                             bool expect_dim_depth = true) {
  const FinPoset& c = f.shape();
  const FinPoset& p = f.strat().target();
  SplitReport rep;

  Decomposition<K> dec = split_decompose(f, choose);
  rep.total_class = k0_class(f);
  K0Vector sum;
  sum.index = rep.total_class.index;
  sum.entries.assign(rep.total_class.entries.size(), 0);
  for (int q = 0; q < p.size(); ++q) {
    rep.strata.push_back(p.id(q));
    rep.piece_classes.push_back(k0_class(dec.pieces[q]));
    if (dec.fibers[q].empty()) continue;
    sum += k0_class(extend_piece(f, dec.fibers[q], dec.pieces[q]));
  }
  rep.reassembled = sum;
  rep.k0_pass = (rep.total_class == rep.reassembled);

  // generator matrix: column per element c of C, rows the concatenated
  // per-stratum classes of the decomposition of the unit generator at c
  std::vector<std::vector<long long>> cols;
  for (int x = 0; x < c.size(); ++x) {
    Decomposition<K> dg = split_decompose(unit_generator(f, x), choose);
    std::vector<long long> col;
    for (int q = 0; q < p.size(); ++q) {
      K0Vector kc = k0_class(dg.pieces[q]);
      col.insert(col.end(), kc.entries.begin(), kc.entries.end());
    }
    cols.push_back(std::move(col));
  }
  int rows = cols.empty() ? 0 : int(cols[0].size());
  rep.generator_matrix.assign(rows, std::vector<long long>(c.size(), 0));
  for (int x = 0; x < c.size(); ++x)
    for (int r = 0; r < rows; ++r) rep.generator_matrix[r][x] = cols[x][r];
  if (rows != c.size()) {
    rep.generator_pass = false;
  } else if (rows == 0) {
    rep.generator_det = 1;
    rep.generator_pass = true;
  } else {
    Matrix<Rat> m(rows, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) m(i, j) = Rat((long long)rep.generator_matrix[i][j]);
    Rat det = determinant(m);
    rep.generator_det = det == Rat(1) ? 1 : (det == Rat(-1) ? -1 : 0);
    rep.generator_pass = (det == Rat(1) || det == Rat(-1));
  }

  for (const auto& step : dec.log) rep.per_step_t3.push_back(step.t3);
  rep.depth = dec.depth;
  rep.depth_pass = !expect_dim_depth ||
                   (p.empty() ? dec.depth == 0 : dec.depth == krull_dim(p) + 1);
  return rep;
}

}  // namespace strata
