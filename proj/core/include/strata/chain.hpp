#pragma once

// Bounded chain complexes of finite dimensional K-vector spaces and exact
// chain maps between them.
//
// Conventions, fixed once and used everywhere:
//   * homological grading, d_n : X_n -> X_{n-1}, d d = 0 checked at
//     construction of every complex;
//   * shift (X[k])_n = X_{n-k} with differential (-1)^k d;
//   * cone(f : X -> Y)_n = Y_n (+) X_{n-1}  -- target summand first --
//     with d(y, x) = (d y + f x, -d x);
//   * fib(f) = cone(f)[-1], so fib(f)_n = Y_{n+1} (+) X_n with
//     d(y, x) = (-d y - f x, d x).

#include <vector>

#include "strata/matrix.hpp"

namespace strata {

template <class K>
class ChainComplex {
 public:
  ChainComplex() : lo_(0) {}

  // dims[i] is the dimension in degree lo + i; diffs[i] is d_{lo+i} with
  // shape dims[i-1] x dims[i] (diffs[0] must have 0 rows).
  ChainComplex(int lo, std::vector<int> dims, std::vector<Matrix<K>> diffs)
      : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (dims_.size() != diffs_.size()) throw invalid_input("complex: dims/diffs mismatch");
    for (int i = 0; i < int(dims_.size()); ++i) {
      if (dims_[i] < 0) throw invalid_input("complex: negative dimension");
      int above = i > 0 ? dims_[i - 1] : 0;
      if (diffs_[i].rows() != above || diffs_[i].cols() != dims_[i])
        throw invalid_input("complex: differential shape mismatch");
    }
    for (int i = 0; i + 1 < int(dims_.size()); ++i) {
      if (!(diffs_[i] * diffs_[i + 1]).is_zero())
        throw invalid_input("complex: d*d != 0 at degree " + std::to_string(lo_ + i + 1));
    }
    trim();
  }

  static ChainComplex zero() { return ChainComplex(); }

  // One copy of K in the given degree.
  static ChainComplex point(int degree, int dim = 1) {
    if (dim == 0) return zero();
    return ChainComplex(degree, {dim}, {Matrix<K>(0, dim)});
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + int(dims_.size()) - 1; }
  bool is_zero_complex() const { return dims_.empty(); }

  int dim(int n) const {
    int i = n - lo_;
    return (i >= 0 && i < int(dims_.size())) ? dims_[i] : 0;
  }
  int total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
  }

  Matrix<K> d(int n) const {
    int i = n - lo_;
    if (i >= 0 && i < int(dims_.size())) return diffs_[i];
    return Matrix<K>(dim(n - 1), dim(n));
  }

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.diffs_ == b.diffs_;
  }

 private:
  void trim() {
    while (!dims_.empty() && dims_.back() == 0) {
      dims_.pop_back();
      diffs_.pop_back();
    }
    while (!dims_.empty() && dims_.front() == 0) {
      dims_.erase(dims_.begin());
      diffs_.erase(diffs_.begin());
      ++lo_;
      if (!diffs_.empty()) diffs_[0] = Matrix<K>(0, dims_[0]);
    }
    if (dims_.empty()) lo_ = 0;
  }

  int lo_;
  std::vector<int> dims_;
  std::vector<Matrix<K>> diffs_;
};

template <class K>
class ChainMap {
 public:
  ChainMap() = default;

  // comps[i] maps source degree (lo+i) to target degree (lo+i); any degree
  // not covered is the zero map, which must be legal there.
  ChainMap(ChainComplex<K> source, ChainComplex<K> target, int lo,
           std::vector<Matrix<K>> comps)
      : source_(std::move(source)), target_(std::move(target)), lo_(lo),
        comps_(std::move(comps)) {
    for (int i = 0; i < int(comps_.size()); ++i) {
      int n = lo_ + i;
      if (comps_[i].rows() != target_.dim(n) || comps_[i].cols() != source_.dim(n))
        throw invalid_input("chain map: component shape mismatch at degree " +
                            std::to_string(n));
    }
    int a = std::min(source_.lo(), target_.lo());
    int b = std::max(source_.hi(), target_.hi()) + 1;
    for (int n = a; n <= b; ++n) {
      if (!(target_.d(n) * comp(n) == comp(n - 1) * source_.d(n)))
        throw invalid_input("chain map: does not commute with d at degree " +
                            std::to_string(n));
    }
  }

  static ChainMap id(const ChainComplex<K>& x) {
    std::vector<Matrix<K>> comps;
    for (int n = x.lo(); n <= x.hi(); ++n) comps.push_back(Matrix<K>::identity(x.dim(n)));
    return ChainMap(x, x, x.lo(), std::move(comps));
  }
  static ChainMap zero(const ChainComplex<K>& src, const ChainComplex<K>& tgt) {
    return ChainMap(src, tgt, 0, {});
  }

  const ChainComplex<K>& source() const { return source_; }
  const ChainComplex<K>& target() const { return target_; }

  Matrix<K> comp(int n) const {
    int i = n - lo_;
    if (i >= 0 && i < int(comps_.size())) return comps_[i];
    return Matrix<K>(target_.dim(n), source_.dim(n));
  }

  bool is_zero_map() const {
    for (const auto& m : comps_)
      if (!m.is_zero()) return false;
    return true;
  }

  friend ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.target() == g.source())) throw invalid_input("compose: source/target mismatch");
    int a = std::min(f.source_.lo(), g.target_.lo());
    int b = std::max(f.source_.hi(), g.target_.hi());
    std::vector<Matrix<K>> comps;
    for (int n = a; n <= b; ++n) comps.push_back(g.comp(n) * f.comp(n));
    return ChainMap(f.source_, g.target_, a, std::move(comps));
  }

  friend ChainMap operator+(const ChainMap& f, const ChainMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
      throw invalid_input("chain map sum: shape mismatch");
    int a = std::min(f.lo_, g.lo_);
    int b = std::max(f.lo_ + int(f.comps_.size()), g.lo_ + int(g.comps_.size())) - 1;
    std::vector<Matrix<K>> comps;
    for (int n = a; n <= b; ++n) comps.push_back(f.comp(n) + g.comp(n));
    return ChainMap(f.source_, f.target_, a, std::move(comps));
  }
  ChainMap operator-() const {
    std::vector<Matrix<K>> comps;
    for (const auto& m : comps_) comps.push_back(-m);
    return ChainMap(source_, target_, lo_, std::move(comps));
  }
  friend ChainMap operator-(const ChainMap& f, const ChainMap& g) { return f + (-g); }

  friend bool operator==(const ChainMap& f, const ChainMap& g) {
    if (!(f.source_ == g.source_) || !(f.target_ == g.target_)) return false;
    int a = std::min(f.lo_, g.lo_);
    int b = std::max(f.lo_ + int(f.comps_.size()), g.lo_ + int(g.comps_.size()));
    for (int n = a; n < b; ++n)
      if (!(f.comp(n) == g.comp(n))) return false;
    return true;
  }

 private:
  ChainComplex<K> source_, target_;
  int lo_ = 0;
  std::vector<Matrix<K>> comps_;
};

// ---------------------------------------------------------------------------
// shift / direct sum / cone / fib

template <class K>
ChainComplex<K> shift(const ChainComplex<K>& x, int k) {
  if (x.is_zero_complex()) return x;
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  K sign = (k % 2 == 0) ? K(1) : K(-1);
  for (int n = x.lo(); n <= x.hi(); ++n) {
    dims.push_back(x.dim(n));
    diffs.push_back(sign * x.d(n));
  }
  return ChainComplex<K>(x.lo() + k, std::move(dims), std::move(diffs));
}

template <class K>
ChainMap<K> shift_map(const ChainMap<K>& f, int k) {
  ChainComplex<K> s = shift(f.source(), k), t = shift(f.target(), k);
  int a = std::min(s.lo(), t.lo()), b = std::max(s.hi(), t.hi());
  std::vector<Matrix<K>> comps;
  for (int n = a; n <= b; ++n) comps.push_back(f.comp(n - k));
  return ChainMap<K>(s, t, a, std::move(comps));
}

template <class K>
struct DirectSum {
  ChainComplex<K> total;
  std::vector<ChainMap<K>> incl;  // X_i -> total
  std::vector<ChainMap<K>> proj;  // total -> X_i
};

template <class K>
DirectSum<K> direct_sum(const std::vector<ChainComplex<K>>& xs) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& x : xs)
    if (!x.is_zero_complex()) {
      lo = any ? std::min(lo, x.lo()) : x.lo();
      hi = any ? std::max(hi, x.hi()) : x.hi();
      any = true;
    }
  DirectSum<K> out;
  if (!any) {
    out.total = ChainComplex<K>::zero();
    for (const auto& x : xs) {
      out.incl.push_back(ChainMap<K>::zero(x, out.total));
      out.proj.push_back(ChainMap<K>::zero(out.total, x));
    }
    return out;
  }
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  std::vector<std::vector<int>> offsets(hi - lo + 1, std::vector<int>(xs.size(), 0));
  for (int n = lo; n <= hi; ++n) {
    int t = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      offsets[n - lo][i] = t;
      t += xs[i].dim(n);
    }
    dims.push_back(t);
  }
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> d(n > lo ? dims[n - lo - 1] : 0, dims[n - lo]);
    if (n > lo)
      for (size_t i = 0; i < xs.size(); ++i)
        d.set_block(offsets[n - lo - 1][i], offsets[n - lo][i], xs[i].d(n));
    diffs.push_back(std::move(d));
  }
  out.total = ChainComplex<K>(lo, std::move(dims), std::move(diffs));
  for (size_t i = 0; i < xs.size(); ++i) {
    std::vector<Matrix<K>> inc, prj;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> in(out.total.dim(n), xs[i].dim(n));
      Matrix<K> pr(xs[i].dim(n), out.total.dim(n));
      for (int r = 0; r < xs[i].dim(n); ++r) {
        in(offsets[n - lo][i] + r, r) = K(1);
        pr(r, offsets[n - lo][i] + r) = K(1);
      }
      inc.push_back(std::move(in));
      prj.push_back(std::move(pr));
    }
    out.incl.push_back(ChainMap<K>(xs[i], out.total, lo, std::move(inc)));
    out.proj.push_back(ChainMap<K>(out.total, xs[i], lo, std::move(prj)));
  }
  return out;
}

template <class K>
struct ConeData {
  ChainComplex<K> total;
  ChainMap<K> from_target;     // Y -> cone(f)
  ChainMap<K> to_shift_source; // cone(f) -> X[1]
};

template <class K>
ConeData<K> cone(const ChainMap<K>& f) {
  const ChainComplex<K>& x = f.source();
  const ChainComplex<K>& y = f.target();
  int lo = std::min(y.lo(), x.lo() + 1) - 1;
  int hi = std::max(y.hi(), x.hi() + 1) + 1;
  std::vector<int> dims;
  std::vector<Matrix<K>> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(y.dim(n) + x.dim(n - 1));
  for (int n = lo; n <= hi; ++n) {
    int rows = n > lo ? dims[n - lo - 1] : 0;
    Matrix<K> d(rows, dims[n - lo]);
    if (n > lo) {
      d.set_block(0, 0, y.d(n));
      d.set_block(0, y.dim(n), f.comp(n - 1));
      d.set_block(y.dim(n - 1), y.dim(n), -x.d(n - 1));
    }
    diffs.push_back(std::move(d));
  }
  ConeData<K> out;
  out.total = ChainComplex<K>(lo, std::move(dims), std::move(diffs));
  std::vector<Matrix<K>> in, pr;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> a(out.total.dim(n), y.dim(n));
    for (int r = 0; r < y.dim(n); ++r) a(r, r) = K(1);
    in.push_back(std::move(a));
    Matrix<K> b(x.dim(n - 1), out.total.dim(n));
    for (int r = 0; r < x.dim(n - 1); ++r) b(r, y.dim(n) + r) = K(1);
    pr.push_back(std::move(b));
  }
  out.from_target = ChainMap<K>(y, out.total, lo, std::move(in));
  out.to_shift_source = ChainMap<K>(out.total, shift(x, 1), lo, std::move(pr));
  return out;
}

template <class K>
struct FibData {
  ChainComplex<K> total;
  ChainMap<K> to_source;          // fib(f) -> X
  ChainMap<K> from_shift_target;  // Y[-1] -> fib(f)
};

template <class K>
FibData<K> fib(const ChainMap<K>& f) {
  const ChainComplex<K>& x = f.source();
  const ChainComplex<K>& y = f.target();
  ConeData<K> c = cone(f);
  FibData<K> out;
  out.total = shift(c.total, -1);
  int lo = out.total.lo() - 1, hi = out.total.hi() + 1;
  std::vector<Matrix<K>> pr, in;
  for (int n = lo; n <= hi; ++n) {
    // fib(f)_n = Y_{n+1} (+) X_n
    Matrix<K> p(x.dim(n), out.total.dim(n));
    for (int r = 0; r < x.dim(n); ++r) p(r, y.dim(n + 1) + r) = K(1);
    pr.push_back(std::move(p));
    Matrix<K> a(out.total.dim(n), y.dim(n + 1));
    for (int r = 0; r < y.dim(n + 1); ++r) a(r, r) = K(1);
    in.push_back(std::move(a));
  }
  out.to_source = ChainMap<K>(out.total, x, lo, std::move(pr));
  out.from_shift_target = ChainMap<K>(shift(y, -1), out.total, lo, std::move(in));
  return out;
}

// Functoriality of cone/fib: given a strictly commuting square v f = f' u,
// the block-diagonal maps below are chain maps between the (co)fibers.
template <class K>
ChainMap<K> cone_induced_map(const ChainMap<K>& f, const ChainMap<K>& fp,
                             const ChainMap<K>& u, const ChainMap<K>& v) {
  if (!(compose(v, f) == compose(fp, u)))
    throw invalid_input("cone_induced_map: square does not commute");
  ChainComplex<K> a = cone(f).total, b = cone(fp).total;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(b.dim(n), a.dim(n));
    m.set_block(0, 0, v.comp(n));
    m.set_block(fp.target().dim(n), f.target().dim(n), u.comp(n - 1));
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(a, b, lo, std::move(comps));
}

template <class K>
ChainMap<K> fib_induced_map(const ChainMap<K>& f, const ChainMap<K>& fp,
                            const ChainMap<K>& u, const ChainMap<K>& v) {
  if (!(compose(v, f) == compose(fp, u)))
    throw invalid_input("fib_induced_map: square does not commute");
  ChainComplex<K> a = fib(f).total, b = fib(fp).total;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<Matrix<K>> comps;
  for (int n = lo; n <= hi; ++n) {
    Matrix<K> m(b.dim(n), a.dim(n));
    m.set_block(0, 0, v.comp(n + 1));
    m.set_block(fp.target().dim(n + 1), f.target().dim(n + 1), u.comp(n));
    comps.push_back(std::move(m));
  }
  return ChainMap<K>(a, b, lo, std::move(comps));
}

// ---------------------------------------------------------------------------
// homology

template <class K>
int homology(const ChainComplex<K>& x, int n) {
  int ker = x.dim(n) - rank(x.d(n));
  return ker - rank(x.d(n + 1));
}

template <class K>
long long euler_char(const ChainComplex<K>& x) {
  long long chi = 0;
  for (int n = x.lo(); n <= x.hi(); ++n)
    chi += (((n % 2) + 2) % 2 == 0) ? x.dim(n) : -x.dim(n);
  return chi;
}

template <class K>
bool is_acyclic(const ChainComplex<K>& x) {
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (homology(x, n) != 0) return false;
  return true;
}

// Representatives for H_n: columns `reps` of the cycle space extending the
// boundary image to a basis of ker(d_n).
template <class K>
struct HomologyBasis {
  Matrix<K> cycles;      // basis of ker d_n
  Matrix<K> boundaries;  // basis of im d_{n+1}
  Matrix<K> reps;        // quotient representatives (columns of `cycles`)
};

template <class K>
HomologyBasis<K> homology_basis(const ChainComplex<K>& x, int n) {
  HomologyBasis<K> out;
  out.cycles = rank_nullity(x.d(n)).kernel_basis;
  out.boundaries = rank_nullity(x.d(n + 1)).image_basis;
  std::vector<int> pick = extend_basis(out.boundaries, out.cycles);
  out.reps = Matrix<K>(x.dim(n), int(pick.size()));
  for (int c = 0; c < int(pick.size()); ++c)
    for (int r = 0; r < x.dim(n); ++r) out.reps(r, c) = out.cycles(r, pick[c]);
  return out;
}

// Coordinates of a cycle in the quotient basis of homology_basis.
template <class K>
Matrix<K> homology_class_coords(const HomologyBasis<K>& h, const Matrix<K>& cycle) {
  Matrix<K> span = hcat(h.boundaries, h.reps);
  auto sol = solve(span, cycle);
  if (!sol) throw invalid_input("homology_class_coords: vector is not a cycle");
  return sol->block(h.boundaries.cols(), 0, h.reps.cols(), cycle.cols());
}

// Matrix of H_n(f) with respect to the representative bases.
template <class K>
Matrix<K> induced_homology_map(const ChainMap<K>& f, int n, const HomologyBasis<K>& hs,
                               const HomologyBasis<K>& ht) {
  Matrix<K> img = f.comp(n) * hs.reps;
  return homology_class_coords(ht, img);
}

// Quasi-isomorphism test via the induced map on homology in every degree;
// bijectivity of the actual induced matrices, not a dimension count.
template <class K>
bool is_quasi_iso(const ChainMap<K>& f) {
  int a = std::min(f.source().lo(), f.target().lo()) - 1;
  int b = std::max(f.source().hi(), f.target().hi()) + 1;
  for (int n = a; n <= b; ++n) {
    HomologyBasis<K> hs = homology_basis(f.source(), n);
    HomologyBasis<K> ht = homology_basis(f.target(), n);
    if (hs.reps.cols() != ht.reps.cols()) return false;
    if (hs.reps.cols() == 0) continue;
    Matrix<K> m = induced_homology_map(f, n, hs, ht);
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

// Basis of the space of chain maps X -> Y (degreewise maps commuting with d),
// solved exactly as one linear system.
template <class K>
std::vector<ChainMap<K>> chain_map_space(const ChainComplex<K>& x, const ChainComplex<K>& y) {
  int lo = std::min(x.lo(), y.lo()), hi = std::max(x.hi(), y.hi());
  // variables: entries of f_n for lo <= n <= hi
  std::vector<int> var_off;
  int nvars = 0;
  for (int n = lo; n <= hi; ++n) {
    var_off.push_back(nvars);
    nvars += x.dim(n) * y.dim(n);
  }
  auto vindex = [&](int n, int r, int c) {
    return var_off[n - lo] + r * x.dim(n) + c;
  };
  // equations: for each degree n, d_Y f_n - f_{n-1} d_X = 0
  std::vector<std::vector<K>> rows;
  for (int n = lo; n <= hi + 1; ++n) {
    Matrix<K> dy = y.d(n), dx = x.d(n);
    int er = y.dim(n - 1), ec = x.dim(n);
    for (int i = 0; i < er; ++i)
      for (int j = 0; j < ec; ++j) {
        std::vector<K> row(nvars, K(0));
        bool nontrivial = false;
        if (n <= hi)
          for (int k = 0; k < y.dim(n); ++k)
            if (!dy(i, k).is_zero()) {
              row[vindex(n, k, j)] += dy(i, k);
              nontrivial = true;
            }
        if (n - 1 >= lo)
          for (int k = 0; k < x.dim(n - 1); ++k)
            if (!dx(k, j).is_zero()) {
              row[vindex(n - 1, i, k)] -= dx(k, j);
              nontrivial = true;
            }
        if (nontrivial) rows.push_back(std::move(row));
      }
  }
  Matrix<K> sys(int(rows.size()), nvars);
  for (int i = 0; i < int(rows.size()); ++i)
    for (int j = 0; j < nvars; ++j) sys(i, j) = rows[i][j];
  Matrix<K> ker = nvars > 0 ? rank_nullity(sys).kernel_basis : Matrix<K>(0, 0);

  std::vector<ChainMap<K>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    std::vector<Matrix<K>> comps;
    for (int n = lo; n <= hi; ++n) {
      Matrix<K> m(y.dim(n), x.dim(n));
      for (int r = 0; r < y.dim(n); ++r)
        for (int c = 0; c < x.dim(n); ++c) m(r, c) = ker(vindex(n, r, c), b);
      comps.push_back(std::move(m));
    }
    basis.push_back(ChainMap<K>(x, y, lo, std::move(comps)));
  }
  return basis;
}

}  // namespace strata
