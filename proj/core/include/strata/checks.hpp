#pragma once

// The runnable recollement axiom suite: for seeded random diagrams it checks
// the defining properties of the original recollement (restriction pair
// (i^*, j^*)) and of the flipped one (pair (j_#^L, i^*)), reporting one
// named check per axiom with concrete witnesses on failure.

#include "strata/adjunction.hpp"
#include "strata/k0.hpp"
#include "strata/random_gen.hpp"

namespace strata {

namespace detail {

template <class K>
bool diagram_is_zero(const StratDiagram<K>& f) {
  for (int x = 0; x < f.shape().size(); ++x)
    if (!f.value(x).is_zero_complex()) return false;
  return true;
}

inline void record(CheckResult& c, int sample, const std::string& element, int degree,
                   const std::string& detail) {
  c.failures.push_back({sample, element, degree, detail});
}

}  // namespace detail

// One full pass of the axiom checks on a single sample diagram F (with
// A = i^* F and B = j^* F supplying the strata-side inputs).
template <class K>
void check_axioms_on_sample(const RecollementCtx<K>& ctx, const StratDiagram<K>& f,
                            Rng& rng, SuiteReport& rep, int sample) {
  const FinPoset& c = ctx.shape();
  StratDiagram<K> a = ctx.pull_closed(f);
  StratDiagram<K> b = ctx.pull_open(f);

  {  // j^* i_* = 0 exactly
    CheckResult& ck = rep.check("j^* i_* = 0");
    ++ck.samples;
    StratDiagram<K> t = ctx.pull_open(ctx.push_closed(a));
    if (!detail::diagram_is_zero(t)) detail::record(ck, sample, "-", 0, "nonzero value");
  }
  {  // i^* j_# = 0 exactly
    CheckResult& ck = rep.check("i^* j_# = 0");
    ++ck.samples;
    StratDiagram<K> t = ctx.pull_closed(ctx.extend_open(b));
    if (!detail::diagram_is_zero(t)) detail::record(ck, sample, "-", 0, "nonzero value");
  }
  {  // i_* fully faithful: counit i^* i_* A -> A is the identity on the nose
    CheckResult& ck = rep.check("i_* fully faithful (i^* i_* = id)");
    ++ck.samples;
    StratDiagram<K> t = ctx.pull_closed(ctx.push_closed(a));
    if (!(t == a)) detail::record(ck, sample, "-", 0, "i^* i_* A differs from A");
  }
  {  // j_# fully faithful: unit B -> j^* j_# B is the identity on the nose
    CheckResult& ck = rep.check("j_# fully faithful (j^* j_# = id)");
    ++ck.samples;
    StratDiagram<K> t = ctx.pull_open(ctx.extend_open(b));
    if (!(t == b)) detail::record(ck, sample, "-", 0, "j^* j_# B differs from B");
  }
  {  // j_* fully faithful: counit components j^* j_* B -> B are quasi-isos
    CheckResult& ck = rep.check("j_* fully faithful (counit quasi-iso)");
    ++ck.samples;
    KanExtension<K> ran = ctx.push_open_full(b);
    for (int i = 0; i < ctx.open_part().size(); ++i) {
      int global = ctx.open_part().members[i];
      ChainMap<K> proj = holim_vertex_projection(b, ran.totals[global], i);
      if (!is_quasi_iso(proj))
        detail::record(ck, sample, c.id(global), 0, "counit not a quasi-iso");
    }
  }
  {  // i_# fully faithful: unit components A -> i^* i_# A are quasi-isos
    CheckResult& ck = rep.check("i_# fully faithful (unit quasi-iso)");
    ++ck.samples;
    KanExtension<K> lan = ctx.lan_closed_full(a);
    for (int i = 0; i < ctx.closed_part().size(); ++i) {
      int global = ctx.closed_part().members[i];
      ChainMap<K> inc = hocolim_vertex_inclusion(a, lan.totals[global], i);
      if (!is_quasi_iso(inc))
        detail::record(ck, sample, c.id(global), 0, "unit not a quasi-iso");
    }
  }
  {  // flipped: j_#^L j_# B ~ B via the target inclusion into the cone
    CheckResult& ck = rep.check("j_#^L j_# = id (flipped counit quasi-iso)");
    ++ck.samples;
    StratDiagram<K> jb = ctx.extend_open(b);
    DiagramMap<K> eps_u = restrict_diagram_map(ctx.closed_counit(jb), ctx.open_part());
    StratDiagram<K> flip = pointwise_cone(eps_u);  // = j_#^L j_# B
    DiagramMap<K> incl = pointwise_cone_from_target(eps_u, flip);
    for (int i = 0; i < ctx.open_part().size(); ++i)
      if (!is_quasi_iso(incl.comp(i)))
        detail::record(ck, sample, c.id(ctx.open_part().members[i]), 0,
                       "B -> j_#^L j_# B not a quasi-iso");
  }

  // joint conservativity of (i^*, j^*) and of (j_#^L, i^*): test the
  // implication on a known-equivalence control, a zero-map control, and a
  // random strict map
  std::vector<DiagramMap<K>> probes;
  {
    GenProfile small;
    small.lo = -1;
    small.hi = 1;
    small.max_dim = 2;
    StratDiagram<K> g = random_diagram<K>(rng, c, ctx.strat(), small);
    DiagramSum<K> s = diagram_sum<K>({f, pointwise_cone(DiagramMap<K>::id(g))});
    probes.push_back(s.incl[0]);  // quasi-iso control
    probes.push_back(DiagramMap<K>::zero(StratDiagram<K>::zero(c, ctx.strat()), f));
    probes.push_back(random_diagram_map(rng, g, f, small));
  }
  {
    CheckResult& ck = rep.check("(i^*, j^*) jointly conservative");
    ++ck.samples;
    for (size_t pi = 0; pi < probes.size(); ++pi) {
      const DiagramMap<K>& phi = probes[pi];
      bool on_z = restrict_diagram_map(phi, ctx.closed_part()).is_pointwise_quasi_iso();
      bool on_u = restrict_diagram_map(phi, ctx.open_part()).is_pointwise_quasi_iso();
      bool total = phi.is_pointwise_quasi_iso();
      if (on_z && on_u && !total)
        detail::record(ck, sample, "probe " + std::to_string(pi), 0,
                       "strata quasi-iso but map is not");
    }
  }
  {
    CheckResult& ck = rep.check("(j_#^L, i^*) jointly conservative");
    ++ck.samples;
    for (size_t pi = 0; pi < probes.size(); ++pi) {
      const DiagramMap<K>& phi = probes[pi];
      bool on_z = restrict_diagram_map(phi, ctx.closed_part()).is_pointwise_quasi_iso();
      bool on_flip = ctx.pull_open_left_map(phi).is_pointwise_quasi_iso();
      bool total = phi.is_pointwise_quasi_iso();
      if (on_z && on_flip && !total)
        detail::record(ck, sample, "probe " + std::to_string(pi), 0,
                       "flipped pair quasi-iso but map is not");
    }
  }
}

// The localization triangle suite plus the K_0 additivity of the flipped
// triangle, per sample.
template <class K>
void check_triangles_on_sample(const RecollementCtx<K>& ctx, const StratDiagram<K>& f,
                               SuiteReport& rep, int sample) {
  std::vector<TriangleReport> tris = localization_triangles(ctx, f);
  for (const auto& t : tris) {
    CheckResult& ck = rep.check(t.name);
    ++ck.samples;
    for (const auto& e : t.entries)
      if (!e.pass) detail::record(ck, sample, e.element, 0, "cone homology nonzero");
  }
  {
    CheckResult& ck = rep.check("K0 additivity of T3");
    ++ck.samples;
    K0Vector lhs = k0_class(f);
    K0Vector rhs = k0_class(ctx.lan_closed(ctx.pull_closed(f)));
    rhs += k0_class(ctx.extend_open(ctx.pull_open_left(f)));
    if (!(lhs == rhs)) detail::record(ck, sample, "-", 0, "chi vectors differ");
  }
}

// The Prop. 3.5(3)-style cross-check: the fiber-formula construction of i_#
// against the direct left Kan extension, pointwise.
template <class K>
void check_lan_formula_on_sample(const RecollementCtx<K>& ctx, const StratDiagram<K>& f,
                                 SuiteReport& rep, int sample) {
  CheckResult& ck = rep.check("i_# fiber formula agrees with direct Kan extension");
  ++ck.samples;
  StratDiagram<K> a = ctx.pull_closed(f);
  std::vector<ChainMap<K>> cmp = compare_lan_constructions(ctx, a);
  for (int x = 0; x < ctx.shape().size(); ++x)
    if (!is_quasi_iso(cmp[x]))
      detail::record(ck, sample, ctx.shape().id(x), 0, "comparison not a quasi-iso");
}

// Full axiom suite over seeded samples.
template <class K>
SuiteReport check_recollement_axioms(const RecollementCtx<K>& ctx, int samples,
                                     std::uint64_t seed, const GenProfile& prof = {}) {
  SuiteReport rep;
  rep.suite = "recollement-axioms";
  Rng root(seed);
  for (int s = 0; s < samples; ++s) {
    Rng rng = root.fork(s);
    StratDiagram<K> f = random_diagram<K>(rng, ctx.shape(), ctx.strat(), prof);
    check_axioms_on_sample(ctx, f, rng, rep, s);
    check_triangles_on_sample(ctx, f, rep, s);
    check_lan_formula_on_sample(ctx, f, rep, s);
  }
  return rep;
}

// Adjunction suite: one named check per adjacent pair of the octet (plus the
// shift-compatibility variant), failures listed per (sample, degree).
template <class K>
SuiteReport check_adjunction_suite(const RecollementCtx<K>& ctx, int samples,
                                   std::uint64_t seed, const GenProfile& prof) {
  SuiteReport rep;
  rep.suite = "adjunctions";
  Rng root(seed);
  for (int s = 0; s < samples; ++s) {
    Rng rng = root.fork(9000 + s);
    StratDiagram<K> f = random_diagram<K>(rng, ctx.shape(), ctx.strat(), prof);
    StratDiagram<K> g = random_diagram<K>(rng, ctx.shape(), ctx.strat(), prof);
    StratDiagram<K> a = ctx.pull_closed(g);
    StratDiagram<K> b = ctx.pull_open(g);
    AdjunctionResult results[7] = {
        adj_lan_closed(ctx, a, f),      adj_pull_closed(ctx, f, a),
        adj_push_closed(ctx, a, f),     adj_extend_open(ctx, b, f),
        adj_push_open(ctx, f, b),       adj_pull_open_left(ctx, f, b),
        adj_lan_closed_shifted(ctx, a, f)};
    for (const AdjunctionResult& r : results) {
      CheckResult& ck = rep.check(r.name);
      ++ck.samples;
      for (int deg : r.failed_degrees)
        detail::record(ck, s, "-", deg, "induced homology map not bijective");
    }
  }
  return rep;
}

}  // namespace strata
