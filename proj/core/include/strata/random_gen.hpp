#pragma once

// Seeded random instances.  Complexes are sampled degree by degree with each
// differential drawn exactly from the solution space of d d = 0; chain maps
// are drawn from the exact solution space of the chain-map equations; and
// diagrams on a poset are pulled back from a random diagram on a linear
// extension (maps generated on consecutive elements and composed), which
// makes strict functoriality automatic.
//
// Default profile: dimensions <= 3 per degree, degree window [-2, 2],
// entries in {-2, ..., 2}.  The profile can be shrunk where derived-hom
// computations dominate the cost.

#include "strata/diagram.hpp"
#include "strata/rng.hpp"

namespace strata {

struct GenProfile {
  int lo = -2, hi = 2;   // degree window
  int max_dim = 3;       // per-degree dimension bound (0 allowed)
  int entry_bound = 2;   // entries drawn from [-entry_bound, entry_bound]
  int map_coeff_bound = 1;  // coefficients on chain-map space basis vectors
};

// Random poset on n elements: a random subset of pairs (i, j) with i < j in
// a fixed underlying order (acyclic by construction), transitively closed by
// the FinPoset constructor.
inline FinPoset random_poset(Rng& rng, int n, int relation_percent = 35) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(100) < relation_percent) rel.emplace_back(ids[i], ids[j]);
  return FinPoset(std::move(ids), rel);
}

// The same poset with a new global maximum or minimum adjoined.
inline FinPoset adjoin_extreme(const FinPoset& p, bool maximum,
                               const std::string& name = "ext") {
  std::vector<std::string> ids = p.ids();
  ids.push_back(name);
  std::vector<std::pair<std::string, std::string>> rel;
  for (int a = 0; a < p.size(); ++a) {
    for (int b = 0; b < p.size(); ++b)
      if (p.lt(a, b)) rel.emplace_back(p.id(a), p.id(b));
    if (maximum)
      rel.emplace_back(p.id(a), name);
    else
      rel.emplace_back(name, p.id(a));
  }
  return FinPoset(std::move(ids), rel);
}

template <class K>
ChainComplex<K> random_complex(Rng& rng, const GenProfile& prof = {}) {
  int len = prof.hi - prof.lo + 1;
  std::vector<int> dims(len);
  for (int& d : dims) d = rng.below(prof.max_dim + 1);
  std::vector<Matrix<K>> diffs(len);
  // build top-down so each differential can be sampled from ker of the next
  Matrix<K> next_d;  // d_{n+1}, already fixed
  for (int i = len - 1; i >= 0; --i) {
    int rows = i > 0 ? dims[i - 1] : 0;
    int cols = dims[i];
    Matrix<K> d(rows, cols);
    if (rows > 0 && cols > 0) {
      if (i == len - 1 || next_d.cols() == 0 || next_d.is_zero()) {
        for (int r = 0; r < rows; ++r)
          for (int c = 0; c < cols; ++c)
            d(r, c) = K(rng.range(-prof.entry_bound, prof.entry_bound));
      } else {
        // rows of d must satisfy (row) * next_d = 0, i.e. lie in
        // ker(next_d^T); sample integer combinations of that kernel basis
        Matrix<K> kerb = rank_nullity(next_d.transpose()).kernel_basis;
        for (int r = 0; r < rows; ++r)
          for (int b = 0; b < kerb.cols(); ++b) {
            K coef = K(rng.range(-prof.map_coeff_bound, prof.map_coeff_bound));
            if (coef.is_zero()) continue;
            for (int c = 0; c < cols; ++c) d(r, c) += coef * kerb(c, b);
          }
      }
    }
    diffs[i] = d;
    next_d = std::move(d);
  }
  return ChainComplex<K>(prof.lo, std::move(dims), std::move(diffs));
}

template <class K>
ChainMap<K> random_chain_map(Rng& rng, const ChainComplex<K>& x, const ChainComplex<K>& y,
                             const GenProfile& prof = {}) {
  std::vector<ChainMap<K>> basis = chain_map_space(x, y);
  ChainMap<K> out = ChainMap<K>::zero(x, y);
  for (const auto& b : basis) {
    int c = rng.range(-prof.map_coeff_bound, prof.map_coeff_bound);
    if (c == 0) continue;
    ChainMap<K> scaled = b;
    if (c < 0) {
      scaled = -b;
      c = -c;
    }
    for (int i = 0; i < c; ++i) out = out + scaled;
  }
  return out;
}

// Random strictly functorial diagram: values and consecutive maps live on a
// linear extension; the structure map for x <= y is the composite of the
// consecutive maps between their positions.
template <class K>
StratDiagram<K> random_diagram(Rng& rng, const FinPoset& shape, const MonotoneMap& strat,
                               const GenProfile& prof = {}) {
  int n = shape.size();
  std::vector<int> order = shape.linear_extension();
  std::vector<ChainComplex<K>> values(n);
  for (int i = 0; i < n; ++i) values[order[i]] = random_complex<K>(rng, prof);
  std::vector<ChainMap<K>> step;  // step[i]: value(order[i]) -> value(order[i+1])
  for (int i = 0; i + 1 < n; ++i)
    step.push_back(random_chain_map(rng, values[order[i]], values[order[i + 1]], prof));

  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!shape.lt(x, y)) continue;
      ChainMap<K> m = step[pos[x]];
      for (int i = pos[x] + 1; i < pos[y]; ++i) m = compose(step[i], m);
      maps.emplace(std::make_pair(x, y), std::move(m));
    }
  return StratDiagram<K>(shape, strat, std::move(values), std::move(maps));
}

// Basis of the space of strict diagram maps f -> g (chain-map plus
// naturality equations, solved exactly as one linear system).
template <class K>
std::vector<DiagramMap<K>> diagram_map_space(const StratDiagram<K>& f,
                                             const StratDiagram<K>& g) {
  const FinPoset& c = f.shape();
  int lo = 0, hi = -1;
  bool any = false;
  for (int x = 0; x < c.size(); ++x) {
    const ChainComplex<K>&a = f.value(x), &b = g.value(x);
    if (!a.is_zero_complex()) {
      lo = any ? std::min(lo, a.lo()) : a.lo();
      hi = any ? std::max(hi, a.hi()) : a.hi();
      any = true;
    }
    if (!b.is_zero_complex()) {
      lo = any ? std::min(lo, b.lo()) : b.lo();
      hi = any ? std::max(hi, b.hi()) : b.hi();
      any = true;
    }
  }
  if (!any) return {};

  std::vector<int> off;
  int nvars = 0;
  for (int x = 0; x < c.size(); ++x)
    for (int n = lo; n <= hi; ++n) {
      off.push_back(nvars);
      nvars += f.value(x).dim(n) * g.value(x).dim(n);
    }
  auto vindex = [&](int x, int n, int r, int cc) {
    return off[x * (hi - lo + 1) + (n - lo)] + r * f.value(x).dim(n) + cc;
  };

  std::vector<std::vector<K>> rows;
  auto add_rows = [&](int x, int y) {
    // d_g phi_x - phi_x d_f = 0 at x==y; g(x<=y) phi_x - phi_y f(x<=y) = 0 else
    for (int n = lo; n <= hi + 1; ++n) {
      if (x == y) {
        Matrix<K> dg = g.value(x).d(n), df = f.value(x).d(n);
        for (int i = 0; i < g.value(x).dim(n - 1); ++i)
          for (int j = 0; j < f.value(x).dim(n); ++j) {
            std::vector<K> row(nvars, K(0));
            bool nz = false;
            for (int k = 0; k < g.value(x).dim(n); ++k)
              if (!dg(i, k).is_zero()) {
                row[vindex(x, n, k, j)] += dg(i, k);
                nz = true;
              }
            for (int k = 0; k < f.value(x).dim(n - 1); ++k)
              if (!df(k, j).is_zero()) {
                row[vindex(x, n - 1, i, k)] -= df(k, j);
                nz = true;
              }
            if (nz) rows.push_back(std::move(row));
          }
      } else if (n <= hi) {
        Matrix<K> gm = g.structure_map(x, y).comp(n);
        Matrix<K> fm = f.structure_map(x, y).comp(n);
        for (int i = 0; i < g.value(y).dim(n); ++i)
          for (int j = 0; j < f.value(x).dim(n); ++j) {
            std::vector<K> row(nvars, K(0));
            bool nz = false;
            for (int k = 0; k < g.value(x).dim(n); ++k)
              if (!gm(i, k).is_zero()) {
                row[vindex(x, n, k, j)] += gm(i, k);
                nz = true;
              }
            for (int k = 0; k < f.value(y).dim(n); ++k)
              if (!fm(k, j).is_zero()) {
                row[vindex(y, n, i, k)] -= fm(k, j);
                nz = true;
              }
            if (nz) rows.push_back(std::move(row));
          }
      }
    }
  };
  for (int x = 0; x < c.size(); ++x) add_rows(x, x);
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (c.lt(x, y)) add_rows(x, y);

  Matrix<K> sys(int(rows.size()), nvars);
  for (int i = 0; i < int(rows.size()); ++i)
    for (int j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
  Matrix<K> ker = nvars > 0 ? rank_nullity(sys).kernel_basis : Matrix<K>(0, 0);

  std::vector<DiagramMap<K>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    std::vector<ChainMap<K>> comps;
    for (int x = 0; x < c.size(); ++x) {
      std::vector<Matrix<K>> cs;
      for (int n = lo; n <= hi; ++n) {
        Matrix<K> m(g.value(x).dim(n), f.value(x).dim(n));
        for (int r = 0; r < m.rows(); ++r)
          for (int cc = 0; cc < m.cols(); ++cc) m(r, cc) = ker(vindex(x, n, r, cc), b);
        cs.push_back(std::move(m));
      }
      comps.push_back(ChainMap<K>(f.value(x), g.value(x), lo, std::move(cs)));
    }
    basis.push_back(DiagramMap<K>(f, g, std::move(comps)));
  }
  return basis;
}

// Random strict map between diagrams on the same shape: an integer
// combination of the exact solution-space basis.
template <class K>
DiagramMap<K> random_diagram_map(Rng& rng, const StratDiagram<K>& f,
                                 const StratDiagram<K>& g, const GenProfile& prof = {}) {
  std::vector<DiagramMap<K>> basis = diagram_map_space(f, g);
  DiagramMap<K> out = DiagramMap<K>::zero(f, g);
  for (const auto& b : basis) {
    int coef = rng.range(-prof.map_coeff_bound, prof.map_coeff_bound);
    while (coef != 0) {
      std::vector<ChainMap<K>> comps;
      for (int x = 0; x < f.shape().size(); ++x)
        comps.push_back(coef > 0 ? out.comp(x) + b.comp(x) : out.comp(x) - b.comp(x));
      out = DiagramMap<K>(f, g, std::move(comps));
      coef += coef > 0 ? -1 : 1;
    }
  }
  return out;
}

}  // namespace strata
