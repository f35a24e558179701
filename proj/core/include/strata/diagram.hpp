#pragma once

// Strict functors F : C -> Ch over a finite poset C, together with a
// stratification map s : C -> P.  These model constructible coefficient
// systems: the value at an element is a bounded complex, structure maps are
// chain maps stored for every related pair, and composition holds exactly.
//
// Over a poset every homotopy-coherent diagram of complexes can be
// strictified, so strictness loses nothing and keeps validation decidable.

#include <map>
#include <utility>
#include <vector>

#include "strata/chain.hpp"
#include "strata/poset.hpp"
#include "strata/report.hpp"

namespace strata {

// Unchecked diagram data, the shape produced by the JSON loader.  `maps`
// holds degreewise components for strictly related pairs (x < y); a missing
// pair means the zero map (legal only if it is a chain map there).
template <class K>
struct RawDiagram {
  FinPoset shape;
  MonotoneMap strat;  // source must equal shape
  std::vector<ChainComplex<K>> values;
  std::map<std::pair<int, int>, ChainMap<K>> maps;
};

template <class K>
class StratDiagram {
 public:
  StratDiagram() = default;

  // Checked construction: throws invalid_input on any violation.  Use
  // validate_diagram below to get a full report instead.
  StratDiagram(FinPoset shape, MonotoneMap strat, std::vector<ChainComplex<K>> values,
               std::map<std::pair<int, int>, ChainMap<K>> maps)
      : shape_(std::move(shape)), strat_(std::move(strat)), values_(std::move(values)),
        maps_(std::move(maps)) {
    ValidationReport rep = check(*this);
    if (!rep.ok()) throw invalid_input("invalid diagram: " + rep.first_message());
  }

  // Diagram over C with the identity stratification C -> C.
  static StratDiagram self_stratified(const FinPoset& shape,
                                      std::vector<ChainComplex<K>> values,
                                      std::map<std::pair<int, int>, ChainMap<K>> maps) {
    return StratDiagram(shape, MonotoneMap::identity(shape), std::move(values),
                        std::move(maps));
  }

  static StratDiagram zero(const FinPoset& shape, const MonotoneMap& strat) {
    std::vector<ChainComplex<K>> vals(shape.size(), ChainComplex<K>::zero());
    return StratDiagram(shape, strat, std::move(vals), {});
  }

  // Constant diagram with identity structure maps.
  static StratDiagram constant(const FinPoset& shape, const MonotoneMap& strat,
                               const ChainComplex<K>& x) {
    std::vector<ChainComplex<K>> vals(shape.size(), x);
    std::map<std::pair<int, int>, ChainMap<K>> maps;
    for (int a = 0; a < shape.size(); ++a)
      for (int b = 0; b < shape.size(); ++b)
        if (shape.lt(a, b)) maps.emplace(std::make_pair(a, b), ChainMap<K>::id(x));
    return StratDiagram(shape, strat, std::move(vals), std::move(maps));
  }

  const FinPoset& shape() const { return shape_; }
  const MonotoneMap& strat() const { return strat_; }
  const ChainComplex<K>& value(int c) const { return values_.at(c); }
  const std::vector<ChainComplex<K>>& values() const { return values_; }

  ChainMap<K> structure_map(int x, int y) const {
    if (x == y) return ChainMap<K>::id(values_[x]);
    if (!shape_.lt(x, y)) throw invalid_input("structure_map: elements not related");
    auto it = maps_.find({x, y});
    if (it != maps_.end()) return it->second;
    return ChainMap<K>::zero(values_[x], values_[y]);
  }

  const std::map<std::pair<int, int>, ChainMap<K>>& raw_maps() const { return maps_; }

  friend bool operator==(const StratDiagram& a, const StratDiagram& b) {
    if (!(a.shape_ == b.shape_) || !(a.values_ == b.values_)) return false;
    for (int x = 0; x < a.shape_.size(); ++x)
      for (int y = 0; y < a.shape_.size(); ++y)
        if (a.shape_.lt(x, y) && !(a.structure_map(x, y) == b.structure_map(x, y)))
          return false;
    return true;
  }

  // Full validation: d*d on values is enforced by ChainComplex construction,
  // chain-map validity by ChainMap construction; what remains is shape
  // bookkeeping and strict functoriality of composites.
  static ValidationReport check(const StratDiagram& f) {
    ValidationReport rep;
    const FinPoset& c = f.shape_;
    if (!(f.strat_.source() == c))
      rep.add("strat", "", 0, "stratification source differs from diagram shape");
    if (int(f.values_.size()) != c.size())
      rep.add("shape", "", 0, "value count differs from poset size");
    for (const auto& [key, m] : f.maps_) {
      auto [x, y] = key;
      if (!c.lt(x, y)) {
        rep.add("shape", c.id(x) + "<=" + c.id(y), 0, "map stored for unrelated pair");
        continue;
      }
      if (!(m.source() == f.values_[x]) || !(m.target() == f.values_[y]))
        rep.add("chain-map", c.id(x) + "<=" + c.id(y), 0,
                "structure map endpoints disagree with diagram values");
    }
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) {
        if (!c.lt(x, y)) continue;
        for (int z = 0; z < c.size(); ++z) {
          if (!c.lt(y, z)) continue;
          ChainMap<K> direct = f.structure_map(x, z);
          ChainMap<K> via = compose(f.structure_map(y, z), f.structure_map(x, y));
          if (!(direct == via)) {
            for (int n = direct.source().lo() - 1; n <= direct.source().hi() + 1; ++n)
              if (!(direct.comp(n) == via.comp(n)))
                rep.add("functoriality",
                        c.id(x) + "<=" + c.id(y) + "<=" + c.id(z), n,
                        "composite differs from stored map");
          }
        }
      }
    return rep;
  }

 private:
  FinPoset shape_;
  MonotoneMap strat_;
  std::vector<ChainComplex<K>> values_;
  std::map<std::pair<int, int>, ChainMap<K>> maps_;
};

// Report-producing validation of raw (possibly broken) data; never throws on
// mathematical violations, only on out-of-range indices.
template <class K>
ValidationReport validate_diagram(const RawDiagram<K>& raw) {
  ValidationReport rep;
  const FinPoset& c = raw.shape;
  if (!(raw.strat.source() == c))
    rep.add("strat", "", 0, "stratification source differs from diagram shape");
  if (int(raw.values.size()) != c.size()) {
    rep.add("shape", "", 0, "value count differs from poset size");
    return rep;
  }
  // chain-map property per stored edge
  for (const auto& [key, m] : raw.maps) {
    auto [x, y] = key;
    if (x < 0 || y < 0 || x >= c.size() || y >= c.size() || !c.lt(x, y)) {
      rep.add("shape", std::to_string(x) + "<=" + std::to_string(y), 0,
              "map stored for unrelated pair");
      continue;
    }
    const ChainComplex<K>&sx = raw.values[x], &sy = raw.values[y];
    if (!(m.source() == sx) || !(m.target() == sy)) {
      rep.add("chain-map", c.id(x) + "<=" + c.id(y), 0,
              "structure map endpoints disagree with diagram values");
      continue;
    }
    for (int n = sx.lo() - 1; n <= sx.hi() + 1; ++n)
      if (!(sy.d(n) * m.comp(n) == m.comp(n - 1) * sx.d(n)))
        rep.add("chain-map", c.id(x) + "<=" + c.id(y), n, "does not commute with d");
  }
  // functoriality of composites
  auto get = [&](int x, int y) -> ChainMap<K> {
    auto it = raw.maps.find({x, y});
    if (it != raw.maps.end()) return it->second;
    return ChainMap<K>::zero(raw.values[x], raw.values[y]);
  };
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      if (!c.lt(x, y)) continue;
      for (int z = 0; z < c.size(); ++z) {
        if (!c.lt(y, z)) continue;
        ChainMap<K> direct = get(x, z);
        ChainMap<K> via = compose(get(y, z), get(x, y));
        for (int n = raw.values[x].lo() - 1; n <= raw.values[x].hi() + 1; ++n)
          if (!(direct.comp(n) == via.comp(n)))
            rep.add("functoriality", c.id(x) + "<=" + c.id(y) + "<=" + c.id(z), n,
                    "composite differs from stored map");
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Maps of diagrams

template <class K>
class DiagramMap {
 public:
  DiagramMap() = default;

  DiagramMap(StratDiagram<K> source, StratDiagram<K> target, std::vector<ChainMap<K>> comps)
      : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
    const FinPoset& c = source_.shape();
    if (!(c == target_.shape()))
      throw invalid_input("diagram map: source and target shapes differ");
    if (int(comps_.size()) != c.size())
      throw invalid_input("diagram map: component count mismatch");
    for (int x = 0; x < c.size(); ++x)
      if (!(comps_[x].source() == source_.value(x)) ||
          !(comps_[x].target() == target_.value(x)))
        throw invalid_input("diagram map: component endpoints mismatch at " + c.id(x));
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) {
        if (!c.lt(x, y)) continue;
        ChainMap<K> a = compose(comps_[y], source_.structure_map(x, y));
        ChainMap<K> b = compose(target_.structure_map(x, y), comps_[x]);
        if (!(a == b))
          throw invalid_input("diagram map: naturality fails on " + c.id(x) + " <= " +
                              c.id(y));
      }
  }

  static DiagramMap id(const StratDiagram<K>& f) {
    std::vector<ChainMap<K>> comps;
    for (int x = 0; x < f.shape().size(); ++x)
      comps.push_back(ChainMap<K>::id(f.value(x)));
    return DiagramMap(f, f, std::move(comps));
  }
  static DiagramMap zero(const StratDiagram<K>& src, const StratDiagram<K>& tgt) {
    std::vector<ChainMap<K>> comps;
    for (int x = 0; x < src.shape().size(); ++x)
      comps.push_back(ChainMap<K>::zero(src.value(x), tgt.value(x)));
    return DiagramMap(src, tgt, std::move(comps));
  }

  const StratDiagram<K>& source() const { return source_; }
  const StratDiagram<K>& target() const { return target_; }
  const ChainMap<K>& comp(int x) const { return comps_.at(x); }

  bool is_pointwise_quasi_iso() const {
    for (int x = 0; x < source_.shape().size(); ++x)
      if (!is_quasi_iso(comps_[x])) return false;
    return true;
  }

  friend DiagramMap compose(const DiagramMap& g, const DiagramMap& f) {
    std::vector<ChainMap<K>> comps;
    for (int x = 0; x < f.source().shape().size(); ++x)
      comps.push_back(compose(g.comp(x), f.comp(x)));
    return DiagramMap(f.source_, g.target_, std::move(comps));
  }

 private:
  StratDiagram<K> source_, target_;
  std::vector<ChainMap<K>> comps_;
};

// ---------------------------------------------------------------------------
// Pointwise operations

// Restriction along the inclusion of a full subposet (this is f^* for the
// inclusion); the stratification restricts with it.
template <class K>
StratDiagram<K> restrict_diagram(const StratDiagram<K>& f, const Subposet& s) {
  std::vector<ChainComplex<K>> vals;
  for (int m : s.members) vals.push_back(f.value(m));
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (f.shape().lt(s.members[a], s.members[b]))
        maps.emplace(std::make_pair(a, b), f.structure_map(s.members[a], s.members[b]));
  return StratDiagram<K>(induced_poset(f.shape(), s), restrict_map(f.strat(), s),
                         std::move(vals), std::move(maps));
}

template <class K>
DiagramMap<K> restrict_diagram_map(const DiagramMap<K>& phi, const Subposet& s) {
  StratDiagram<K> src = restrict_diagram(phi.source(), s);
  StratDiagram<K> tgt = restrict_diagram(phi.target(), s);
  std::vector<ChainMap<K>> comps;
  for (int m : s.members) comps.push_back(phi.comp(m));
  return DiagramMap<K>(std::move(src), std::move(tgt), std::move(comps));
}

template <class K>
StratDiagram<K> pointwise_shift(const StratDiagram<K>& f, int k) {
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < f.shape().size(); ++x) vals.push_back(shift(f.value(x), k));
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (const auto& [key, m] : f.raw_maps()) maps.emplace(key, shift_map(m, k));
  return StratDiagram<K>(f.shape(), f.strat(), std::move(vals), std::move(maps));
}

template <class K>
StratDiagram<K> pointwise_cone(const DiagramMap<K>& phi) {
  const FinPoset& c = phi.source().shape();
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < c.size(); ++x) vals.push_back(cone(phi.comp(x)).total);
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (c.lt(x, y))
        maps.emplace(std::make_pair(x, y),
                     cone_induced_map(phi.comp(x), phi.comp(y),
                                      phi.source().structure_map(x, y),
                                      phi.target().structure_map(x, y)));
  return StratDiagram<K>(c, phi.source().strat(), std::move(vals), std::move(maps));
}

template <class K>
StratDiagram<K> pointwise_fib(const DiagramMap<K>& phi) {
  const FinPoset& c = phi.source().shape();
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < c.size(); ++x) vals.push_back(fib(phi.comp(x)).total);
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (c.lt(x, y))
        maps.emplace(std::make_pair(x, y),
                     fib_induced_map(phi.comp(x), phi.comp(y),
                                     phi.source().structure_map(x, y),
                                     phi.target().structure_map(x, y)));
  return StratDiagram<K>(c, phi.source().strat(), std::move(vals), std::move(maps));
}

// Canonical maps around the pointwise cone: target -> cone and the pointwise
// projection cone -> (source shifted).
template <class K>
DiagramMap<K> pointwise_cone_from_target(const DiagramMap<K>& phi,
                                         const StratDiagram<K>& cone_diag) {
  std::vector<ChainMap<K>> comps;
  for (int x = 0; x < phi.source().shape().size(); ++x)
    comps.push_back(cone(phi.comp(x)).from_target);
  return DiagramMap<K>(phi.target(), cone_diag, std::move(comps));
}

template <class K>
struct DiagramSum {
  StratDiagram<K> total;
  std::vector<DiagramMap<K>> incl;
};

template <class K>
StratDiagram<K> direct_sum_diagrams(const std::vector<StratDiagram<K>>& fs) {
  if (fs.empty()) throw invalid_input("direct_sum_diagrams: empty list");
  const FinPoset& c = fs[0].shape();
  std::vector<ChainComplex<K>> vals;
  for (int x = 0; x < c.size(); ++x) {
    std::vector<ChainComplex<K>> parts;
    for (const auto& f : fs) parts.push_back(f.value(x));
    vals.push_back(direct_sum(parts).total);
  }
  std::map<std::pair<int, int>, ChainMap<K>> maps;
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      if (!c.lt(x, y)) continue;
      std::vector<ChainComplex<K>> px, py;
      for (const auto& f : fs) px.push_back(f.value(x));
      for (const auto& f : fs) py.push_back(f.value(y));
      DirectSum<K> sx = direct_sum(px), sy = direct_sum(py);
      int lo = sx.total.lo(), hi = sx.total.hi();
      if (!sy.total.is_zero_complex()) {
        lo = std::min(lo, sy.total.lo());
        hi = std::max(hi, sy.total.hi());
      }
      std::vector<Matrix<K>> comps;
      for (int n = lo; n <= hi; ++n) {
        Matrix<K> m(sy.total.dim(n), sx.total.dim(n));
        int ro = 0, co = 0;
        for (size_t i = 0; i < fs.size(); ++i) {
          m.set_block(ro, co, fs[i].structure_map(x, y).comp(n));
          ro += fs[i].value(y).dim(n);
          co += fs[i].value(x).dim(n);
        }
        comps.push_back(std::move(m));
      }
      maps.emplace(std::make_pair(x, y),
                   ChainMap<K>(sx.total, sy.total, lo, std::move(comps)));
    }
  return StratDiagram<K>(c, fs[0].strat(), std::move(vals), std::move(maps));
}

// Direct sum with its canonical inclusions (block structure maps make them
// strictly natural).
template <class K>
DiagramSum<K> diagram_sum(const std::vector<StratDiagram<K>>& fs) {
  DiagramSum<K> out;
  out.total = direct_sum_diagrams(fs);
  const FinPoset& c = fs[0].shape();
  for (size_t i = 0; i < fs.size(); ++i) {
    std::vector<ChainMap<K>> comps;
    for (int x = 0; x < c.size(); ++x) {
      std::vector<ChainComplex<K>> parts;
      for (const auto& f : fs) parts.push_back(f.value(x));
      DirectSum<K> s = direct_sum(parts);
      ChainMap<K> inc = s.incl[i];
      // rebind to the diagram's stored total value (structurally equal)
      const ChainComplex<K>& src = fs[i].value(x);
      int lo = src.is_zero_complex() ? 0 : src.lo();
      int hi = src.is_zero_complex() ? -1 : src.hi();
      std::vector<Matrix<K>> cs;
      for (int n = lo; n <= hi; ++n) cs.push_back(inc.comp(n));
      comps.push_back(ChainMap<K>(src, out.total.value(x), lo, std::move(cs)));
    }
    out.incl.push_back(DiagramMap<K>(fs[i], out.total, std::move(comps)));
  }
  return out;
}

}  // namespace strata
