#pragma once

// Homotopy (co)limits of poset diagrams of complexes by full (co)simplicial
// totalization over nondegenerate nerve chains, and the derived Kan
// extensions along monotone maps computed pointwise over comma posets.
//
// Sign conventions (fixed; d*d = 0 is asserted on construction of every
// totalization, so a drift here cannot pass silently):
//
//   hocolim over S:   T_n = (+)_{x_0<...<x_k in S} F(x_0)_{n-k}
//     on a block (sigma, j):  internal differential (-1)^k d,
//     face i (drop sigma_i) with sign (-1)^i; dropping x_0 composes with
//     the structure map F(x_0 <= x_1), inner/last drops are identities.
//
//   holim over S:     T_n = (+)_{x_0<...<x_k in S} F(x_k)_{n+k}
//     into a block (tau, j):  internal differential (-1)^k d,
//     coface i (insert at position i) with sign (-1)^i; inserting at the
//     end composes with F(tau_{k-1} <= tau_k), other insertions are
//     identities.
//
// Cofinality gives augmentation hocolim -> F(max) and coaugmentation
// F(min) -> holim; both are strict chain maps and quasi-isomorphisms
// whenever the indexing poset has the extreme element.

#include <vector>

#include "strata/diagram.hpp"
#include "strata/nerve.hpp"

namespace strata {

template <class K>
struct KanTotal {
  ChainComplex<K> total;
  ChainFamily family;

  struct Block {
    int chain;   // id in `family`
    int j;       // internal degree of the value complex
    int dim;
    int offset;  // within the totalization degree
  };
  std::map<int, std::vector<Block>> blocks;  // totalization degree -> blocks

  int block_offset(int degree, int chain_id) const {
    auto it = blocks.find(degree);
    if (it == blocks.end()) return -1;
    for (const Block& b : it->second)
      if (b.chain == chain_id) return b.offset;
    return -1;
  }
};

namespace detail {

// Shared assembly: hocolim reads values at chain fronts with degree n-k,
// holim at chain backs with degree n+k.
template <class K>
KanTotal<K> totalize(const StratDiagram<K>& f, const std::vector<int>& members,
                     bool colimit) {
  KanTotal<K> out;
  out.family = ChainFamily::enumerate(f.shape(), members);

  auto value_of = [&](int chain_id) -> const ChainComplex<K>& {
    const std::vector<int>& ch = out.family.chains[chain_id];
    return f.value(colimit ? ch.front() : ch.back());
  };
  auto internal_degree = [&](int chain_id, int n) {
    int k = out.family.len(chain_id);
    return colimit ? n - k : n + k;
  };

  int lo = 0, hi = -1;
  bool any = false;
  for (int cid = 0; cid < out.family.size(); ++cid) {
    const ChainComplex<K>& v = value_of(cid);
    if (v.is_zero_complex()) continue;
    int k = out.family.len(cid);
    int a = colimit ? v.lo() + k : v.lo() - k;
    int b = colimit ? v.hi() + k : v.hi() - k;
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  if (!any) {
    out.total = ChainComplex<K>::zero();
    return out;
  }

  for (int n = lo; n <= hi; ++n) {
    std::vector<typename KanTotal<K>::Block> bl;
    int off = 0;
    for (int cid = 0; cid < out.family.size(); ++cid) {
      int j = internal_degree(cid, n);
      int d = value_of(cid).dim(j);
      if (d == 0) continue;
      bl.push_back({cid, j, d, off});
      off += d;
    }
    if (!bl.empty()) out.blocks[n] = std::move(bl);
  }

  auto degree_dim = [&](int n) {
    auto it = out.blocks.find(n);
    if (it == out.blocks.end()) return 0;
    int t = 0;
    for (const auto& b : it->second) t += b.dim;
    return t;
  };

  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(degree_dim(n));
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> d(n > lo ? dims[n - lo - 1] : 0, dims[n - lo]);
    if (n > lo) {
      auto src_it = out.blocks.find(n);
      if (src_it != out.blocks.end()) {
        for (const auto& sb : src_it->second) {
          const std::vector<int>& sigma = out.family.chains[sb.chain];
          int k = int(sigma.size()) - 1;
          K internal_sign = (k % 2 == 0) ? K(1) : K(-1);
          // internal differential
          {
            int toff = out.block_offset(n - 1, sb.chain);
            if (toff >= 0) {
              Matrix<K> blk = internal_sign * value_of(sb.chain).d(sb.j);
              d.set_block(toff, sb.offset, blk);
            }
          }
          if (colimit) {
            // faces drop an element of sigma
            for (int i = 0; i <= k && k >= 1; ++i) {
              std::vector<int> tau = sigma;
              tau.erase(tau.begin() + i);
              int tid = out.family.find(tau);
              if (tid < 0) continue;
              int toff = out.block_offset(n - 1, tid);
              if (toff < 0) continue;
              K sign = (i % 2 == 0) ? K(1) : K(-1);
              Matrix<K> blk =
                  (i == 0)
                      ? f.structure_map(sigma[0], sigma[1]).comp(sb.j)
                      : Matrix<K>::identity(sb.dim);
              d.set_block(toff, sb.offset, sign * blk);
            }
          }
        }
      }
      if (!colimit) {
        // cofaces: each target chain gathers from its facets
        auto tgt_it = out.blocks.find(n - 1);
        if (tgt_it != out.blocks.end()) {
          for (const auto& tb : tgt_it->second) {
            const std::vector<int>& tau = out.family.chains[tb.chain];
            int k = int(tau.size()) - 1;
            if (k < 1) continue;
            for (int i = 0; i <= k; ++i) {
              std::vector<int> sig = tau;
              sig.erase(sig.begin() + i);
              int sid = out.family.find(sig);
              if (sid < 0) continue;
              int soff = out.block_offset(n, sid);
              if (soff < 0) continue;
              K sign = (i % 2 == 0) ? K(1) : K(-1);
              Matrix<K> blk =
                  (i == k)
                      ? f.structure_map(tau[k - 1], tau[k]).comp(tb.j)
                      : Matrix<K>::identity(tb.dim);
              d.set_block(tb.offset, soff, sign * blk);
            }
          }
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  out.total = ChainComplex<K>(lo, std::move(dims), std::move(diffs));
  return out;
}

}  // namespace detail

template <class K>
KanTotal<K> hocolim(const StratDiagram<K>& f, const std::vector<int>& members) {
  return detail::totalize(f, members, true);
}
template <class K>
KanTotal<K> hocolim(const StratDiagram<K>& f) {
  return hocolim(f, Subposet::all(f.shape()).members);
}

template <class K>
KanTotal<K> holim(const StratDiagram<K>& f, const std::vector<int>& members) {
  return detail::totalize(f, members, false);
}
template <class K>
KanTotal<K> holim(const StratDiagram<K>& f) {
  return holim(f, Subposet::all(f.shape()).members);
}

// Augmentation hocolim(F|_S) -> F(m) for m a maximum of S: vertex summands
// push forward along structure maps, longer chains die.
template <class K>
ChainMap<K> hocolim_augmentation(const StratDiagram<K>& f, const KanTotal<K>& t, int m) {
  const ChainComplex<K>& tgt = f.value(m);
  int lo = t.total.lo(), hi = t.total.hi();
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> c(tgt.dim(n), t.total.dim(n));
    auto it = t.blocks.find(n);
    if (it != t.blocks.end())
      for (const auto& b : it->second) {
        const std::vector<int>& sigma = t.family.chains[b.chain];
        if (sigma.size() != 1) continue;
        c.set_block(0, b.offset, f.structure_map(sigma[0], m).comp(n));
      }
    comps.push_back(std::move(c));
  }
  return ChainMap<K>(t.total, tgt, lo, std::move(comps));
}

// Coaugmentation F(m) -> holim(F|_S) for m a minimum of S.
template <class K>
ChainMap<K> holim_coaugmentation(const StratDiagram<K>& f, const KanTotal<K>& t, int m) {
  const ChainComplex<K>& src = f.value(m);
  int lo = std::min(t.total.lo(), src.lo());
  int hi = std::max(t.total.hi(), src.hi());
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> c(t.total.dim(n), src.dim(n));
    auto it = t.blocks.find(n);
    if (it != t.blocks.end())
      for (const auto& b : it->second) {
        const std::vector<int>& sigma = t.family.chains[b.chain];
        if (sigma.size() != 1) continue;
        c.set_block(b.offset, 0, f.structure_map(m, sigma[0]).comp(n));
      }
    comps.push_back(std::move(c));
  }
  return ChainMap<K>(src, t.total, lo, std::move(comps));
}

// Projection of a holim onto one vertex value (a chain map per element; its
// naturality across elements holds only up to the coherences carried by the
// derived hom machinery).
template <class K>
ChainMap<K> holim_vertex_projection(const StratDiagram<K>& f, const KanTotal<K>& t, int x) {
  const ChainComplex<K>& tgt = f.value(x);
  int vid = t.family.find({x});
  int lo = t.total.lo(), hi = t.total.hi();
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> c(tgt.dim(n), t.total.dim(n));
    int off = vid >= 0 ? t.block_offset(n, vid) : -1;
    if (off >= 0)
      for (int r = 0; r < tgt.dim(n); ++r) c(r, off + r) = K(1);
    comps.push_back(std::move(c));
  }
  return ChainMap<K>(t.total, tgt, lo, std::move(comps));
}

// Vertex inclusion into a hocolim.
template <class K>
ChainMap<K> hocolim_vertex_inclusion(const StratDiagram<K>& f, const KanTotal<K>& t, int x) {
  const ChainComplex<K>& src = f.value(x);
  int vid = t.family.find({x});
  int lo = std::min(t.total.lo(), src.lo());
  int hi = std::max(t.total.hi(), src.hi());
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> c(t.total.dim(n), src.dim(n));
    int off = vid >= 0 ? t.block_offset(n, vid) : -1;
    if (off >= 0)
      for (int r = 0; r < src.dim(n); ++r) c(off + r, r) = K(1);
    comps.push_back(std::move(c));
  }
  return ChainMap<K>(src, t.total, lo, std::move(comps));
}

// ---------------------------------------------------------------------------
// Derived Kan extensions along a monotone map f : C -> D.

template <class K>
struct KanExtension {
  StratDiagram<K> diagram;            // on the target poset
  std::vector<KanTotal<K>> totals;    // indexer per target element
};

namespace detail {

// Chain-matching map between totalizations over nested member sets.
template <class K>
ChainMap<K> scatter_map(const KanTotal<K>& from, const KanTotal<K>& to) {
  int lo = std::min(from.total.lo(), to.total.lo());
  int hi = std::max(from.total.hi(), to.total.hi());
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> c(to.total.dim(n), from.total.dim(n));
    auto it = from.blocks.find(n);
    if (it != from.blocks.end())
      for (const auto& b : it->second) {
        int tid = to.family.find(from.family.chains[b.chain]);
        if (tid < 0) continue;
        int toff = to.block_offset(n, tid);
        if (toff < 0) continue;
        for (int r = 0; r < b.dim; ++r) c(toff + r, b.offset + r) = K(1);
      }
    comps.push_back(std::move(c));
  }
  return ChainMap<K>(from.total, to.total, lo, std::move(comps));
}

}  // namespace detail

// Left Kan extension f_# : values are hocolims over comma_down(f, d),
// structure maps are the chain scatters along comma poset inclusions.
template <class K>
KanExtension<K> ho_lan_full(const MonotoneMap& f, const StratDiagram<K>& a,
                            const MonotoneMap& target_strat) {
  if (!(a.shape() == f.source())) throw invalid_input("ho_lan: diagram not on source of f");
  const FinPoset& d = f.target();
  KanExtension<K> out;
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < d.size(); ++i) {
    out.totals.push_back(hocolim(a, comma_down(f, i).members));
    vals.push_back(out.totals.back().total);
  }
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < d.size(); ++x)
    for (int y = 0; y < d.size(); ++y)
      if (d.lt(x, y))
        maps.emplace(std::make_pair(x, y),
                     detail::scatter_map(out.totals[x], out.totals[y]));
  out.diagram = StratDiagram<K>(d, target_strat, std::move(vals), std::move(maps));
  return out;
}

template <class K>
StratDiagram<K> ho_lan(const MonotoneMap& f, const StratDiagram<K>& a,
                       const MonotoneMap& target_strat) {
  return ho_lan_full(f, a, target_strat).diagram;
}

// Right Kan extension f_* : holims over comma_up(f, d), structure maps are
// the product projections along reverse inclusions of comma posets.
template <class K>
KanExtension<K> ho_ran_full(const MonotoneMap& f, const StratDiagram<K>& a,
                            const MonotoneMap& target_strat) {
  if (!(a.shape() == f.source())) throw invalid_input("ho_ran: diagram not on source of f");
  const FinPoset& d = f.target();
  KanExtension<K> out;
  std::vector<ChainComplex<K>> vals;
  for (int i = 0; i < d.size(); ++i) {
    out.totals.push_back(holim(a, comma_up(f, i).members));
    vals.push_back(out.totals.back().total);
  }
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < d.size(); ++x)
    for (int y = 0; y < d.size(); ++y)
      if (d.lt(x, y))
        maps.emplace(std::make_pair(x, y),
                     detail::scatter_map(out.totals[x], out.totals[y]));
  out.diagram = StratDiagram<K>(d, target_strat, std::move(vals), std::move(maps));
  return out;
}

template <class K>
StratDiagram<K> ho_ran(const MonotoneMap& f, const StratDiagram<K>& a,
                       const MonotoneMap& target_strat) {
  return ho_ran_full(f, a, target_strat).diagram;
}

// Induced map of left Kan extensions (hocolim is summandwise in the values).
template <class K>
DiagramMap<K> ho_lan_map(const MonotoneMap& f, const DiagramMap<K>& phi,
                         const MonotoneMap& target_strat) {
  KanExtension<K> s = ho_lan_full(f, phi.source(), target_strat);
  KanExtension<K> t = ho_lan_full(f, phi.target(), target_strat);
  const FinPoset& d = f.target();
  std::vector<ChainMap<K>> comps;
  for (int i = 0; i < d.size(); ++i) {
    const KanTotal<K>& ts = s.totals[i];
    const KanTotal<K>& tt = t.totals[i];
    int lo = std::min(ts.total.lo(), tt.total.lo());
    int hi = std::max(ts.total.hi(), tt.total.hi());
    std::vector<Matrix<K>> cs;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> c(tt.total.dim(n), ts.total.dim(n));
      auto it = ts.blocks.find(n);
      if (it != ts.blocks.end())
        for (const auto& b : it->second) {
          int tid = tt.family.find(ts.family.chains[b.chain]);
          if (tid < 0) continue;
          int toff = tt.block_offset(n, tid);
          if (toff < 0) continue;
          c.set_block(toff, b.offset,
                      phi.comp(ts.family.chains[b.chain].front()).comp(b.j));
        }
      cs.push_back(std::move(c));
    }
    comps.push_back(ChainMap<K>(ts.total, tt.total, lo, std::move(cs)));
  }
  return DiagramMap<K>(s.diagram, t.diagram, std::move(comps));
}

// ---------------------------------------------------------------------------
// Units / counits for Kan extensions along full subposet inclusions.

// Counit  iota_# iota^* G -> G : vertex summands map by structure maps.
// Strictly natural (functoriality of G makes the squares commute exactly).
template <class K>
DiagramMap<K> lan_counit(const KanExtension<K>& lan, const Subposet& s,
                         const StratDiagram<K>& g) {
  const FinPoset& c = g.shape();
  std::vector<ChainMap<K>> comps;
  for (int x = 0; x < c.size(); ++x) {
    const KanTotal<K>& t = lan.totals[x];
    const ChainComplex<K>& tgt = g.value(x);
    int lo = t.total.is_zero_complex() ? 0 : t.total.lo();
    int hi = t.total.is_zero_complex() ? -1 : t.total.hi();
    std::vector<Matrix<K>> cs;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m(tgt.dim(n), t.total.dim(n));
      auto it = t.blocks.find(n);
      if (it != t.blocks.end())
        for (const auto& b : it->second) {
          const std::vector<int>& sigma = t.family.chains[b.chain];
          if (sigma.size() != 1) continue;
          int global = s.members[sigma[0]];
          m.set_block(0, b.offset, g.structure_map(global, x).comp(n));
        }
      cs.push_back(std::move(m));
    }
    comps.push_back(ChainMap<K>(t.total, tgt, lo, std::move(cs)));
  }
  return DiagramMap<K>(lan.diagram, g, std::move(comps));
}

// Unit  G -> iota_* iota^* G : components into vertex factors by structure
// maps; strictly natural.
template <class K>
DiagramMap<K> ran_unit(const KanExtension<K>& ran, const Subposet& s,
                       const StratDiagram<K>& g) {
  const FinPoset& c = g.shape();
  std::vector<ChainMap<K>> comps;
  for (int x = 0; x < c.size(); ++x) {
    const KanTotal<K>& t = ran.totals[x];
    const ChainComplex<K>& src = g.value(x);
    int lo = src.is_zero_complex() ? 0 : std::min(src.lo(), t.total.lo());
    int hi = src.is_zero_complex() ? -1 : std::max(src.hi(), t.total.hi());
    if (t.total.is_zero_complex() && !src.is_zero_complex()) {
      lo = src.lo();
      hi = src.hi();
    }
    std::vector<Matrix<K>> cs;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m(t.total.dim(n), src.dim(n));
      auto it = t.blocks.find(n);
      if (it != t.blocks.end())
        for (const auto& b : it->second) {
          const std::vector<int>& sigma = t.family.chains[b.chain];
          if (sigma.size() != 1) continue;
          int global = s.members[sigma[0]];
          m.set_block(b.offset, 0, g.structure_map(x, global).comp(n));
        }
      cs.push_back(std::move(m));
    }
    comps.push_back(ChainMap<K>(src, t.total, lo, std::move(cs)));
  }
  return DiagramMap<K>(g, ran.diagram, std::move(comps));
}

// ---------------------------------------------------------------------------
// Extension by zero.

// i_* along a closed inclusion: strict extension by zero.  Closedness is
// exactly what makes the missing (zero) maps functorial: no relation enters
// the closed part from outside.
template <class K>
StratDiagram<K> extend_zero_closed(const FinPoset& c, const MonotoneMap& strat,
                                   const Subposet& s, const StratDiagram<K>& a) {
  if (!is_closed(c, s)) throw invalid_input("extend_zero_closed: subposet is not closed");
  if (!(a.shape() == induced_poset(c, s)))
    throw invalid_input("extend_zero_closed: diagram not on the closed subposet");
  std::vector<ChainComplex<K>> vals(c.size(), ChainComplex<K>::zero());
  for (int i = 0; i < s.size(); ++i) vals[s.members[i]] = a.value(i);
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (a.shape().lt(x, y))
        maps.emplace(std::make_pair(s.members[x], s.members[y]), a.structure_map(x, y));
  return StratDiagram<K>(c, strat, std::move(vals), std::move(maps));
}

// j_# along an open inclusion: strict extension by zero, dually.
template <class K>
StratDiagram<K> extend_zero_open(const FinPoset& c, const MonotoneMap& strat,
                                 const Subposet& s, const StratDiagram<K>& b) {
  if (!is_open(c, s)) throw invalid_input("extend_zero_open: subposet is not open");
  if (!(b.shape() == induced_poset(c, s)))
    throw invalid_input("extend_zero_open: diagram not on the open subposet");
  std::vector<ChainComplex<K>> vals(c.size(), ChainComplex<K>::zero());
  for (int i = 0; i < s.size(); ++i) vals[s.members[i]] = b.value(i);
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (b.shape().lt(x, y))
        maps.emplace(std::make_pair(s.members[x], s.members[y]), b.structure_map(x, y));
  return StratDiagram<K>(c, strat, std::move(vals), std::move(maps));
}

template <class K>
DiagramMap<K> extend_zero_open_map(const FinPoset& c, const MonotoneMap& strat,
                                   const Subposet& s, const DiagramMap<K>& phi) {
  StratDiagram<K> src = extend_zero_open(c, strat, s, phi.source());
  StratDiagram<K> tgt = extend_zero_open(c, strat, s, phi.target());
  std::vector<ChainMap<K>> comps;
  int local = 0;
  for (int x = 0; x < c.size(); ++x) {
    if (s.contains(x)) {
      comps.push_back(phi.comp(local));
      ++local;
    } else {
      comps.push_back(ChainMap<K>::zero(src.value(x), tgt.value(x)));
    }
  }
  return DiagramMap<K>(src, tgt, std::move(comps));
}

// Strict comparison  i_* A -> ho_ran(i, A)  (coaugmentations pointwise); a
// pointwise quasi-isomorphism since each comma poset has a minimum or is
// empty.
template <class K>
DiagramMap<K> zero_ext_closed_vs_ran(const FinPoset& c, const MonotoneMap& strat,
                                     const Subposet& s, const StratDiagram<K>& a) {
  StratDiagram<K> ext = extend_zero_closed(c, strat, s, a);
  MonotoneMap inc = MonotoneMap::inclusion(c, s);
  KanExtension<K> ran = ho_ran_full(inc, a, strat);
  std::vector<ChainMap<K>> comps;
  for (int x = 0; x < c.size(); ++x) {
    const KanTotal<K>& t = ran.totals[x];
    const ChainComplex<K>& src = ext.value(x);
    if (src.is_zero_complex()) {
      comps.push_back(ChainMap<K>::zero(src, t.total));
      continue;
    }
    int lo = std::min(src.lo(), t.total.is_zero_complex() ? src.lo() : t.total.lo());
    int hi = std::max(src.hi(), t.total.is_zero_complex() ? src.hi() : t.total.hi());
    std::vector<Matrix<K>> cs;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m(t.total.dim(n), src.dim(n));
      auto it = t.blocks.find(n);
      if (it != t.blocks.end())
        for (const auto& b : it->second) {
          const std::vector<int>& sigma = t.family.chains[b.chain];
          if (sigma.size() != 1) continue;
          // src value is a(x_local); map by a's structure map into the vertex
          int x_local = int(std::lower_bound(s.members.begin(), s.members.end(), x) -
                            s.members.begin());
          m.set_block(b.offset, 0, a.structure_map(x_local, sigma[0]).comp(n));
        }
      cs.push_back(std::move(m));
    }
    comps.push_back(ChainMap<K>(src, t.total, lo, std::move(cs)));
  }
  return DiagramMap<K>(ext, ran.diagram, std::move(comps));
}

// Strict comparison  ho_lan(j, B) -> j_# B  (augmentations pointwise).
template <class K>
DiagramMap<K> zero_ext_open_vs_lan(const FinPoset& c, const MonotoneMap& strat,
                                   const Subposet& s, const StratDiagram<K>& b) {
  StratDiagram<K> ext = extend_zero_open(c, strat, s, b);
  MonotoneMap inc = MonotoneMap::inclusion(c, s);
  KanExtension<K> lan = ho_lan_full(inc, b, strat);
  std::vector<ChainMap<K>> comps;
  for (int x = 0; x < c.size(); ++x) {
    const KanTotal<K>& t = lan.totals[x];
    const ChainComplex<K>& tgt = ext.value(x);
    int lo = t.total.is_zero_complex() ? 0 : t.total.lo();
    int hi = t.total.is_zero_complex() ? -1 : t.total.hi();
    std::vector<Matrix<K>> cs;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m(tgt.dim(n), t.total.dim(n));
      auto it = t.blocks.find(n);
      if (it != t.blocks.end())
        for (const auto& bl : it->second) {
          const std::vector<int>& sigma = t.family.chains[bl.chain];
          if (sigma.size() != 1) continue;
          int x_local = int(std::lower_bound(s.members.begin(), s.members.end(), x) -
                            s.members.begin());
          m.set_block(0, bl.offset, b.structure_map(sigma[0], x_local).comp(n));
        }
      cs.push_back(std::move(m));
    }
    comps.push_back(ChainMap<K>(t.total, tgt, lo, std::move(cs)));
  }
  return DiagramMap<K>(lan.diagram, ext, std::move(comps));
}

}  // namespace strata
