#pragma once

// Derived hom complexes of diagrams via end totalization over nerve chains,
// with a strictly associative composition pairing.  This is the executable
// form of mapping complexes: H_0 classifies maps up to homotopy, and the
// adjunction checks compare two rhom complexes through explicit chain maps
// built from (possibly homotopy-coherent) unit/counit cycles.
//
// Conventions.  For F, G on a finite poset C:
//
//   rhom(F, G)_n = (+)_{p >= 0} (+)_{sigma = (x_0 < ... < x_p)}
//                      Hom^(F(x_0), G(x_p))_{n+p}
//
// where Hom^(X, Y)_m has components X_j -> Y_{j+m} and differential
// (d phi)_j = d_Y phi_j - (-1)^m phi_{j-1} d_X.  The total differential on
// a component over tau (|tau| = p) is
//
//   (D Psi)_tau = (-1)^p d(Psi_tau)
//               + sum_{i=0}^{p} (-1)^i (face_i Psi)_tau
//
// with face_0 precomposing by F(x_0 <= x_1), face_p postcomposing by
// G(x_{p-1} <= x_p), and inner faces forgetting an element.  A degree-0
// cycle is a homotopy-coherent map; a strict diagram map gives one with
// vanishing higher components.
//
// Composition: for Psi in rhom(G, H)_r and Phi in rhom(F, G)_q,
//
//   (Psi o Phi)_sigma = sum_{i=0}^{p} (-1)^{r i}
//                         Psi_{(x_i..x_p)} o Phi_{(x_0..x_i)} ,
//
// which satisfies D(Psi o Phi) = (D Psi) o Phi + (-1)^r Psi o (D Phi); in
// particular composition with a fixed cycle is a chain map of rhoms.

#include "strata/diagram.hpp"
#include "strata/nerve.hpp"

namespace strata {

template <class K>
struct RhomComplex {
  StratDiagram<K> from, to;
  ChainFamily family;  // chains of the common shape
  ChainComplex<K> total;

  struct Block {
    int chain;
    int j;      // source degree of the hom component
    int rows;   // dim G(x_p)_{j+n+p}
    int cols;   // dim F(x_0)_j
    int offset;
  };
  std::map<int, std::vector<Block>> blocks;

  const Block* block(int n, int chain_id, int j) const {
    auto it = blocks.find(n);
    if (it == blocks.end()) return nullptr;
    for (const Block& b : it->second)
      if (b.chain == chain_id && b.j == j) return &b;
    return nullptr;
  }
};

// A homogeneous element, kept blockwise: (chain, j) -> matrix rows x cols.
template <class K>
struct RhomElement {
  int degree = 0;
  std::map<std::pair<int, int>, Matrix<K>> comps;
};

namespace detail {

// Flattened index of entry (a, b) inside a hom block: row-major, a indexes
// the target basis, b the source basis.
inline int hom_entry(int a, int b, int cols) { return a * cols + b; }

}  // namespace detail

template <class K>
RhomComplex<K> rhom(const StratDiagram<K>& f, const StratDiagram<K>& g) {
  if (!(f.shape() == g.shape())) throw invalid_input("rhom: diagrams on different shapes");
  RhomComplex<K> out;
  out.from = f;
  out.to = g;
  out.family = ChainFamily::enumerate(f.shape(), Subposet::all(f.shape()).members);

  // collect the degree window
  int lo = 0, hi = -1;
  bool any = false;
  for (int cid = 0; cid < out.family.size(); ++cid) {
    const std::vector<int>& sigma = out.family.chains[cid];
    int p = int(sigma.size()) - 1;
    const ChainComplex<K>& src = f.value(sigma.front());
    const ChainComplex<K>& tgt = g.value(sigma.back());
    if (src.is_zero_complex() || tgt.is_zero_complex()) continue;
    // n + p ranges over [tgt.lo - src.hi, tgt.hi - src.lo]
    int a = tgt.lo() - src.hi() - p, b = tgt.hi() - src.lo() - p;
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  if (!any) {
    out.total = ChainComplex<K>::zero();
    return out;
  }

  for (int n = lo; n <= hi; ++n) {
    std::vector<typename RhomComplex<K>::Block> bl;
    int off = 0;
    for (int cid = 0; cid < out.family.size(); ++cid) {
      const std::vector<int>& sigma = out.family.chains[cid];
      int p = int(sigma.size()) - 1;
      const ChainComplex<K>& src = f.value(sigma.front());
      const ChainComplex<K>& tgt = g.value(sigma.back());
      for (int j = src.lo(); j <= src.hi(); ++j) {
        int rows = tgt.dim(j + n + p), cols = src.dim(j);
        if (rows == 0 || cols == 0) continue;
        bl.push_back({cid, j, rows, cols, off});
        off += rows * cols;
      }
    }
    if (!bl.empty()) out.blocks[n] = std::move(bl);
  }

  auto degree_dim = [&](int n) {
    auto it = out.blocks.find(n);
    if (it == out.blocks.end()) return 0;
    int t = 0;
    for (const auto& b : it->second) t += b.rows * b.cols;
    return t;
  };

  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(degree_dim(n));

  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> d(n > lo ? dims[n - lo - 1] : 0, dims[n - lo]);
    if (n > lo) {
      auto src_it = out.blocks.find(n);
      auto add_left = [&](const typename RhomComplex<K>::Block& sb,
                          const typename RhomComplex<K>::Block& tb, const Matrix<K>& l,
                          const K& sign) {
        // target(a', b) += sign * l(a', a) * src(a, b); requires same cols
        for (int a2 = 0; a2 < tb.rows; ++a2)
          for (int a = 0; a < sb.rows; ++a) {
            if (l(a2, a).is_zero()) continue;
            for (int b = 0; b < sb.cols; ++b)
              d(tb.offset + detail::hom_entry(a2, b, tb.cols),
                sb.offset + detail::hom_entry(a, b, sb.cols)) += sign * l(a2, a);
          }
      };
      auto add_right = [&](const typename RhomComplex<K>::Block& sb,
                           const typename RhomComplex<K>::Block& tb, const Matrix<K>& r,
                           const K& sign) {
        // target(a, b') += sign * src(a, b) * r(b, b'); requires same rows
        for (int a = 0; a < sb.rows; ++a)
          for (int b = 0; b < sb.cols; ++b)
            for (int b2 = 0; b2 < tb.cols; ++b2) {
              if (r(b, b2).is_zero()) continue;
              d(tb.offset + detail::hom_entry(a, b2, tb.cols),
                sb.offset + detail::hom_entry(a, b, sb.cols)) += sign * r(b, b2);
            }
      };
      if (src_it != out.blocks.end()) {
        for (const auto& sb : src_it->second) {
          const std::vector<int>& sigma = out.family.chains[sb.chain];
          int p = int(sigma.size()) - 1;
          K psign = (p % 2 == 0) ? K(1) : K(-1);
          int m = n + p;  // hom degree
          const ChainComplex<K>& srcv = f.value(sigma.front());
          const ChainComplex<K>& tgtv = g.value(sigma.back());
          // internal: left-multiply by d_G at degree j+m
          if (const auto* tb = out.block(n - 1, sb.chain, sb.j))
            add_left(sb, *tb, tgtv.d(sb.j + m), psign);
          // internal: the target component at j+1 reads phi_j o d_F(j+1)
          if (const auto* tb = out.block(n - 1, sb.chain, sb.j + 1)) {
            K s = ((m + 1) % 2 == 0) ? psign : K(0) - psign;  // -(-1)^m * (-1)^p
            add_right(sb, *tb, srcv.d(sb.j + 1), s);
          }
          // faces: this block feeds every chain tau with sigma = tau minus
          // one element; iterate over insertions is equivalent to iterating
          // over superchains, but faces are cheaper read from the source
          // side: (D Psi)_tau collects Psi at faces of tau.  We instead add
          // contributions from sb into each tau containing sigma as a face.
          // For assembly it is easier to loop over target chains below.
        }
        // face terms, gathered target-first
        auto tgt_it = out.blocks.find(n - 1);
        if (tgt_it != out.blocks.end()) {
          for (const auto& tb : tgt_it->second) {
            const std::vector<int>& tau = out.family.chains[tb.chain];
            int p = int(tau.size()) - 1;
            if (p < 1) continue;
            for (int i = 0; i <= p; ++i) {
              std::vector<int> sig = tau;
              sig.erase(sig.begin() + i);
              int sid = out.family.find(sig);
              if (sid < 0) continue;
              K sign = (i % 2 == 0) ? K(1) : K(-1);
              if (i == 0) {
                // precompose with F(x_0 <= x_1): right-multiplication
                if (const auto* sb = out.block(n, sid, tb.j)) {
                  // note: source block has source value F(x_1); target F(x_0)
                  add_right(*sb, tb, f.structure_map(tau[0], tau[1]).comp(tb.j), sign);
                }
              } else if (i == p) {
                // postcompose with G(x_{p-1} <= x_p): left-multiplication
                if (const auto* sb = out.block(n, sid, tb.j))
                  add_left(*sb, tb,
                           g.structure_map(tau[p - 1], tau[p]).comp(tb.j + (n - 1) + p),
                           sign);
              } else {
                if (const auto* sb = out.block(n, sid, tb.j)) {
                  for (int a = 0; a < tb.rows; ++a)
                    for (int b = 0; b < tb.cols; ++b)
                      d(tb.offset + detail::hom_entry(a, b, tb.cols),
                        sb->offset + detail::hom_entry(a, b, sb->cols)) += sign;
                }
              }
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

// ---------------------------------------------------------------------------
// Elements

template <class K>
Matrix<K> to_vector(const RhomComplex<K>& r, const RhomElement<K>& e) {
  Matrix<K> v(r.total.dim(e.degree), 1);
  auto it = r.blocks.find(e.degree);
  if (it != r.blocks.end())
    for (const auto& b : it->second) {
      auto ce = e.comps.find({b.chain, b.j});
      if (ce == e.comps.end()) continue;
      const Matrix<K>& m = ce->second;
      for (int a = 0; a < b.rows; ++a)
        for (int bb = 0; bb < b.cols; ++bb)
          v(b.offset + detail::hom_entry(a, bb, b.cols), 0) = m(a, bb);
    }
  return v;
}

template <class K>
bool is_cycle(const RhomComplex<K>& r, const RhomElement<K>& e) {
  return (r.total.d(e.degree) * to_vector(r, e)).is_zero();
}

// The degree-0 cycle of a strict diagram map: vertex components only.
template <class K>
RhomElement<K> strict_to_cycle(const RhomComplex<K>& r, const DiagramMap<K>& phi) {
  RhomElement<K> e;
  e.degree = 0;
  for (int cid = 0; cid < r.family.size(); ++cid) {
    const std::vector<int>& sigma = r.family.chains[cid];
    if (sigma.size() != 1) continue;
    const ChainComplex<K>& src = r.from.value(sigma[0]);
    for (int j = src.lo(); j <= src.hi(); ++j) {
      Matrix<K> m = phi.comp(sigma[0]).comp(j);
      if (m.rows() > 0 && m.cols() > 0 && !m.is_zero()) e.comps[{cid, j}] = std::move(m);
    }
  }
  if (!is_cycle(r, e)) throw invalid_input("strict_to_cycle: not a cycle (map not strict?)");
  return e;
}

// ---------------------------------------------------------------------------
// Chain maps of rhoms

// Restriction to the chains of a full subposet; always a chain map.
// `sub_r` must be the rhom of the two restricted diagrams.
template <class K>
ChainMap<K> rhom_restrict(const RhomComplex<K>& r, const RhomComplex<K>& sub_r,
                          const Subposet& s) {
  int lo = 0, hi = -1;
  if (!r.total.is_zero_complex()) {
    lo = std::min(r.total.lo(), sub_r.total.is_zero_complex() ? r.total.lo()
                                                              : sub_r.total.lo());
    hi = std::max(r.total.hi(), sub_r.total.is_zero_complex() ? r.total.hi()
                                                              : sub_r.total.hi());
  } else if (!sub_r.total.is_zero_complex()) {
    lo = sub_r.total.lo();
    hi = sub_r.total.hi();
  }
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(sub_r.total.dim(n), r.total.dim(n));
    auto it = sub_r.blocks.find(n);
    if (it != sub_r.blocks.end())
      for (const auto& tb : it->second) {
        // translate the local chain to parent indices
        std::vector<int> global;
        for (int li : sub_r.family.chains[tb.chain]) global.push_back(s.members[li]);
        int sid = r.family.find(global);
        if (sid < 0) continue;
        const auto* sb = r.block(n, sid, tb.j);
        if (!sb) continue;
        for (int a = 0; a < tb.rows; ++a)
          for (int b = 0; b < tb.cols; ++b)
            m(tb.offset + detail::hom_entry(a, b, tb.cols),
              sb->offset + detail::hom_entry(a, b, sb->cols)) = K(1);
      }
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(r.total, sub_r.total, lo, std::move(comps));
}

// Reindexing iso between the rhom over a subposet and the rhom over the
// parent of the zero-extended diagrams (all contributing chains stay inside
// the subposet since the extensions vanish elsewhere).
template <class K>
ChainMap<K> rhom_zero_extend_reindex(const RhomComplex<K>& sub_r, const RhomComplex<K>& r,
                                     const Subposet& s) {
  int lo = 0, hi = -1;
  if (!sub_r.total.is_zero_complex() || !r.total.is_zero_complex()) {
    bool sz = sub_r.total.is_zero_complex();
    bool rz = r.total.is_zero_complex();
    lo = std::min(sz ? r.total.lo() : sub_r.total.lo(),
                  rz ? sub_r.total.lo() : r.total.lo());
    hi = std::max(sz ? r.total.hi() : sub_r.total.hi(),
                  rz ? sub_r.total.hi() : r.total.hi());
  }
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(r.total.dim(n), sub_r.total.dim(n));
    auto it = sub_r.blocks.find(n);
    if (it != sub_r.blocks.end())
      for (const auto& sb : it->second) {
        std::vector<int> global;
        for (int li : sub_r.family.chains[sb.chain]) global.push_back(s.members[li]);
        int tid = r.family.find(global);
        if (tid < 0) continue;
        const auto* tb = r.block(n, tid, sb.j);
        if (!tb) continue;
        for (int a = 0; a < sb.rows; ++a)
          for (int b = 0; b < sb.cols; ++b)
            m(tb->offset + detail::hom_entry(a, b, tb->cols),
              sb.offset + detail::hom_entry(a, b, sb.cols)) = K(1);
      }
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(sub_r.total, r.total, lo, std::move(comps));
}

// Right composition with a fixed degree-0 cycle eta in rhom(F, G):
//   rhom(G, H) -> rhom(F, H),  Psi |-> Psi o eta.
// Split signs (-1)^{r i} with r the degree of Psi.
template <class K>
ChainMap<K> compose_cycle_right(const RhomComplex<K>& rgh, const RhomComplex<K>& rfh,
                                const RhomElement<K>& eta) {
  if (eta.degree != 0) throw invalid_input("compose_cycle_right: cycle degree must be 0");
  int lo = 0, hi = -1;
  bool a0 = rgh.total.is_zero_complex(), b0 = rfh.total.is_zero_complex();
  if (!a0 || !b0) {
    lo = std::min(a0 ? rfh.total.lo() : rgh.total.lo(), b0 ? rgh.total.lo() : rfh.total.lo());
    hi = std::max(a0 ? rfh.total.hi() : rgh.total.hi(), b0 ? rgh.total.hi() : rfh.total.hi());
  }
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(rfh.total.dim(n), rgh.total.dim(n));
    auto it = rfh.blocks.find(n);
    if (it != rfh.blocks.end())
      for (const auto& tb : it->second) {
        const std::vector<int>& sigma = rfh.family.chains[tb.chain];
        int p = int(sigma.size()) - 1;
        for (int i = 0; i <= p; ++i) {
          std::vector<int> front(sigma.begin(), sigma.begin() + i + 1);
          std::vector<int> back(sigma.begin() + i, sigma.end());
          int fid = rfh.family.find(front);  // eta is indexed by the same family
          auto ce = eta.comps.find({fid, tb.j});
          if (fid < 0 || ce == eta.comps.end()) continue;
          int bid = rgh.family.find(back);
          if (bid < 0) continue;
          const auto* sb = rgh.block(n, bid, tb.j + i);
          if (!sb) continue;
          const Matrix<K>& em = ce->second;  // rows: dim G(x_i)_{j+i}, cols: tb.cols
          K sign = ((n * i) % 2 == 0) ? K(1) : K(-1);
          // target(a, b) += sign * src(a, g) * em(g, b)
          for (int a = 0; a < tb.rows; ++a)
            for (int g2 = 0; g2 < sb->cols; ++g2)
              for (int b = 0; b < tb.cols; ++b) {
                if (em(g2, b).is_zero()) continue;
                m(tb.offset + detail::hom_entry(a, b, tb.cols),
                  sb->offset + detail::hom_entry(a, g2, sb->cols)) += sign * em(g2, b);
              }
        }
      }
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(rgh.total, rfh.total, lo, std::move(comps));
}

// Left composition with a fixed degree-0 cycle eps in rhom(G, H):
//   rhom(F, G) -> rhom(F, H),  Phi |-> eps o Phi.  No extra signs.
template <class K>
ChainMap<K> compose_cycle_left(const RhomComplex<K>& rfg, const RhomComplex<K>& rfh,
                               const RhomElement<K>& eps) {
  if (eps.degree != 0) throw invalid_input("compose_cycle_left: cycle degree must be 0");
  int lo = 0, hi = -1;
  bool a0 = rfg.total.is_zero_complex(), b0 = rfh.total.is_zero_complex();
  if (!a0 || !b0) {
    lo = std::min(a0 ? rfh.total.lo() : rfg.total.lo(), b0 ? rfg.total.lo() : rfh.total.lo());
    hi = std::max(a0 ? rfh.total.hi() : rfg.total.hi(), b0 ? rfg.total.hi() : rfh.total.hi());
  }
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(rfh.total.dim(n), rfg.total.dim(n));
    auto it = rfh.blocks.find(n);
    if (it != rfh.blocks.end())
      for (const auto& tb : it->second) {
        const std::vector<int>& sigma = rfh.family.chains[tb.chain];
        int p = int(sigma.size()) - 1;
        for (int i = 0; i <= p; ++i) {
          std::vector<int> front(sigma.begin(), sigma.begin() + i + 1);
          std::vector<int> back(sigma.begin() + i, sigma.end());
          int bid = rfh.family.find(back);
          auto ce = eps.comps.find({bid, tb.j + n + i});
          if (bid < 0 || ce == eps.comps.end()) continue;
          int fid = rfg.family.find(front);
          if (fid < 0) continue;
          const auto* sb = rfg.block(n, fid, tb.j);
          if (!sb) continue;
          const Matrix<K>& em = ce->second;  // rows: tb.rows, cols: sb->rows
          for (int a = 0; a < tb.rows; ++a)
            for (int g2 = 0; g2 < sb->rows; ++g2) {
              if (em(a, g2).is_zero()) continue;
              for (int b = 0; b < tb.cols; ++b)
                m(tb.offset + detail::hom_entry(a, b, tb.cols),
                  sb->offset + detail::hom_entry(g2, b, sb->cols)) += em(a, g2);
            }
        }
      }
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(rfg.total, rfh.total, lo, std::move(comps));
}

// Reindexing iso rhom(F[-1], W) -> rhom(F, W[1]): block (sigma, j) copies to
// (sigma, j+1) with sign (-1)^{n+p}.
template <class K>
ChainMap<K> rhom_shift_reindex(const RhomComplex<K>& a, const RhomComplex<K>& b) {
  int lo = 0, hi = -1;
  bool a0 = a.total.is_zero_complex(), b0 = b.total.is_zero_complex();
  if (!a0 || !b0) {
    lo = std::min(a0 ? b.total.lo() : a.total.lo(), b0 ? a.total.lo() : b.total.lo());
    hi = std::max(a0 ? b.total.hi() : a.total.hi(), b0 ? a.total.hi() : b.total.hi());
  }
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(b.total.dim(n), a.total.dim(n));
    auto it = a.blocks.find(n);
    if (it != a.blocks.end())
      for (const auto& sb : it->second) {
        const auto* tb = b.block(n, sb.chain, sb.j + 1);
        if (!tb) continue;
        int p = a.family.len(sb.chain);
        K sign = ((n + p) % 2 == 0) ? K(1) : K(-1);
        for (int x = 0; x < sb.rows * sb.cols; ++x)
          m(tb->offset + x, sb.offset + x) = sign;
      }
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(a.total, b.total, lo, std::move(comps));
}

}  // namespace strata
