// matrix.hpp -- small dense matrix algebra templated over the scalar.
//
// The same Gaussian-elimination code serves two scalar types: exact rationals
// (Rat, eps ignored) and doubles (eps-thresholded sign tests). Determinism
// matters more than speed here; pivoting picks the largest magnitude entry and
// breaks ties by smallest row index.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "galedesign/errors.hpp"
#include "galedesign/rational.hpp"

namespace gd {

template <class T>
using Vec = std::vector<T>;

template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<int>(init.size());
    cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& r : init) {
      for (const auto& x : r) a.push_back(x);
    }
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  Vec<T> row(int i) const {
    return Vec<T>(a.begin() + static_cast<size_t>(i) * cols, a.begin() + static_cast<size_t>(i + 1) * cols);
  }
  Vec<T> col(int j) const {
    Vec<T> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_row(int i, const Vec<T>& v) {
    for (int j = 0; j < cols; ++j) (*this)(i, j) = v[j];
  }

  Mat<T> transposed() const {
    Mat<T> t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Vertically stack rows of `other` below this matrix.
  void append_rows(const Mat<T>& other) {
    if (rows == 0 && cols == 0) cols = other.cols;
    a.insert(a.end(), other.a.begin(), other.a.end());
    rows += other.rows;
  }
};

template <class T>
T dot(const Vec<T>& x, const Vec<T>& y) {
  T s(0);
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class T>
Vec<T> mat_vec(const Mat<T>& m, const Vec<T>& x) {
  Vec<T> y(m.rows, T(0));
  for (int i = 0; i < m.rows; ++i) {
    T s(0);
    for (int j = 0; j < m.cols; ++j) s += m(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// y = M^T x  (x indexed by rows of M).
template <class T>
Vec<T> mat_transpose_vec(const Mat<T>& m, const Vec<T>& x) {
  Vec<T> y(m.cols, T(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) y[j] += m(i, j) * x[i];
  return y;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  Mat<T> c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const T& aik = a(i, k);
      if (NumTraits<T>::is_zero(aik, 0.0)) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline Mat<double> to_double_mat(const Mat<Rat>& m) {
  Mat<double> d(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) d.a[i] = to_double(m.a[i]);
  return d;
}

inline Vec<double> to_double_vec(const Vec<Rat>& v) {
  Vec<double> d(v.size());
  for (size_t i = 0; i < v.size(); ++i) d[i] = to_double(v[i]);
  return d;
}

// Reduced row echelon form in place. Returns the pivot columns (their count is
// the rank). Rows below the rank are numerically zero afterwards.
template <class T>
std::vector<int> rref(Mat<T>& m, double eps) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int best = -1;
    double best_mag = 0.0;
    for (int i = r; i < m.rows; ++i) {
      if (!NumTraits<T>::is_zero(m(i, c), eps)) {
        double mag = NumTraits<T>::abs_estimate(m(i, c));
        if (best == -1 || mag > best_mag) {
          best = i;
          best_mag = mag;
        }
      }
    }
    if (best == -1) continue;
    if (best != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m(r, j), m(best, j));
    }
    const T piv = m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) /= piv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      const T f = m(i, c);
      if (NumTraits<T>::is_zero(f, eps)) continue;
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
int rank_of(Mat<T> m, double eps) {
  return static_cast<int>(rref(m, eps).size());
}

// Basis of the (right) kernel of m, one vector per row, deterministic order
// (ascending free column). Rational vectors are scaled to primitive integers.
template <class T>
Mat<T> kernel_rows(Mat<T> m, double eps) {
  std::vector<int> piv = rref(m, eps);
  std::vector<char> is_piv(m.cols, 0);
  for (int c : piv) is_piv[c] = 1;
  Mat<T> out(m.cols - static_cast<int>(piv.size()), m.cols);
  int kr = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec<T> v(m.cols, T(0));
    v[f] = T(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), f);
    if constexpr (NumTraits<T>::exact) make_primitive(v);
    out.set_row(kr++, v);
  }
  return out;
}

// Inverse of a square matrix; fails with RankDeficient when singular.
template <class T>
Mat<T> inverse(const Mat<T>& m, double eps) {
  const int n = m.rows;
  Mat<T> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  std::vector<int> piv = rref(aug, eps);
  if (static_cast<int>(piv.size()) < n) fail(Err::RankDeficient, "matrix is singular, cannot invert");
  Mat<T> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Orthogonalizes the rows (classical Gram-Schmidt, exact). Rows must be
// linearly independent. Rational rows come back primitive-integer scaled.
template <class T>
Mat<T> gram_schmidt_rows(const Mat<T>& m, double eps) {
  Mat<T> out(m.rows, m.cols);
  std::vector<Vec<T>> basis;
  for (int i = 0; i < m.rows; ++i) {
    Vec<T> v = m.row(i);
    for (const Vec<T>& b : basis) {
      const T num = dot(v, b);
      if (NumTraits<T>::is_zero(num, eps)) continue;
      const T den = dot(b, b);
      const T f = num / den;
      for (size_t j = 0; j < v.size(); ++j) v[j] -= f * b[j];
    }
    bool zero = true;
    for (const T& x : v) {
      if (!NumTraits<T>::is_zero(x, eps)) {
        zero = false;
        break;
      }
    }
    if (zero) fail(Err::RankDeficient, "gram_schmidt_rows: rows are linearly dependent");
    if constexpr (NumTraits<T>::exact) make_primitive(v);
    out.set_row(i, v);
    basis.push_back(out.row(i));
  }
  return out;
}

// Rank of the affine span of the selected columns (dimension of the smallest
// affine subspace containing them).
template <class T>
int affine_rank_of_columns(const Mat<T>& m, const std::vector<int>& cols, double eps) {
  if (cols.size() <= 1) return 0;
  Mat<T> diff(static_cast<int>(cols.size()) - 1, m.rows);
  for (size_t i = 1; i < cols.size(); ++i)
    for (int r = 0; r < m.rows; ++r) diff(static_cast<int>(i) - 1, r) = m(r, cols[i]) - m(r, cols[0]);
  return rank_of(std::move(diff), eps);
}

}  // namespace gd
