#pragma once

// Dense exact matrices over a field K and the elimination kernel used by
// every homology computation in the engine.  Everything here is exact:
// Gauss-Jordan over the field, first-nonzero pivoting, no magnitude
// heuristics needed.

#include <optional>
#include <stdexcept>
#include <vector>

#include "strata/field.hpp"

namespace strata {

template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw invalid_input("negative matrix dimension");
  }
  Matrix(int rows, int cols, std::vector<K> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_t(rows) * cols) throw invalid_input("matrix entry count mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (const K& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw invalid_input("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const K& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }
  friend Matrix operator*(const K& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = c * a.e_[i];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix column(int j) const {
    Matrix r(rows_, 1);
    for (int i = 0; i < rows_; ++i) r(i, 0) = (*this)(i, j);
    return r;
  }

  // Columns of `b` appended to the right of `a`.
  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw invalid_input("hcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  void set_block(int i0, int j0, const Matrix& b) {
    if (i0 + b.rows_ > rows_ || j0 + b.cols_ > cols_)
      throw invalid_input("set_block out of range");
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  Matrix block(int i0, int j0, int rows, int cols) const {
    if (i0 + rows > rows_ || j0 + cols > cols_) throw invalid_input("block out of range");
    Matrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_input("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<K> e_;
};

// Reduced row echelon form, in place.  Returns pivot column indices.
template <class K>
std::vector<int> rref_inplace(Matrix<K>& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
struct RankNullity {
  int rank = 0;
  Matrix<K> kernel_basis;  // cols span ker(M)
  Matrix<K> image_basis;   // cols span im(M) (pivot columns of M)
};

// Exact rank / kernel / image of M.  rank + kernel cols == cols(M).
template <class K>
RankNullity<K> rank_nullity(const Matrix<K>& m) {
  Matrix<K> r = m;
  std::vector<int> pivots = rref_inplace(r);
  RankNullity<K> out;
  out.rank = int(pivots.size());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  out.kernel_basis = Matrix<K>(m.cols(), m.cols() - out.rank);
  int kcol = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out.kernel_basis(c, kcol) = K(1);
    for (int pr = 0; pr < out.rank; ++pr)
      out.kernel_basis(pivots[pr], kcol) = -r(pr, c);
    ++kcol;
  }

  out.image_basis = Matrix<K>(m.rows(), out.rank);
  for (int pc = 0; pc < out.rank; ++pc)
    for (int i = 0; i < m.rows(); ++i) out.image_basis(i, pc) = m(i, pivots[pc]);
  return out;
}

template <class K>
int rank(const Matrix<K>& m) {
  Matrix<K> r = m;
  return int(rref_inplace(r).size());
}

// Solve A x = b for every column of b; nullopt if any column is inconsistent.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw invalid_input("solve shape mismatch");
  Matrix<K> aug = hcat(a, b);
  std::vector<int> pivots = rref_inplace(aug);
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;  // pivot in the rhs block
  Matrix<K> x(a.cols(), b.cols());
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    for (int j = 0; j < b.cols(); ++j) x(pivots[pr], j) = aug(int(pr), a.cols() + j);
  return x;
}

// Columns of `cand` (in order) that extend the independent columns of `base`
// to a basis of span(base | cand).  Used to pick homology representatives.
template <class K>
std::vector<int> extend_basis(const Matrix<K>& base, const Matrix<K>& cand) {
  Matrix<K> m = hcat(base, cand);
  std::vector<int> pivots = rref_inplace(m);
  std::vector<int> chosen;
  for (int c : pivots)
    if (c >= base.cols()) chosen.push_back(c - base.cols());
  return chosen;
}

// Determinant over K (Gaussian elimination); square matrices only.
template <class K>
K determinant(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw invalid_input("determinant of non-square matrix");
  Matrix<K> a = m;
  K det = K(1);
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return K(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det = det * a(c, c);
    K inv = K(1) / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      K f = inv * a(i, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace strata
