// lp.hpp -- dense two-phase primal simplex, templated over the scalar.
//
// Solves  max c^T x  s.t.  A x = b, x >= 0.  Bland's anti-cycling rule keeps
// the exact rational instantiation terminating; the double instantiation uses
// the same code with eps-thresholded sign tests. Problem sizes in this library
// are tiny (tens of variables), so a naive tableau is the right tool: it is
// simple enough to audit and exact arithmetic keeps it honest.
#pragma once

#include <vector>

#include "galedesign/matrix.hpp"

namespace gd {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec<T> x;       // primal solution (size = #vars) when Optimal
  T objective{};  // c^T x when Optimal
};

namespace detail {

template <class T>
class SimplexTableau {
 public:
  SimplexTableau(const Mat<T>& A, const Vec<T>& b, double eps) : eps_(eps), m_(A.rows), n_(A.cols) {
    // Layout: columns [0, n_) real vars, [n_, n_+m_) artificials, last = rhs.
    tab_ = Mat<T>(m_, n_ + m_ + 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const bool flip = b[i] < T(0);
      for (int j = 0; j < n_; ++j) tab_(i, j) = flip ? -A(i, j) : A(i, j);
      tab_(i, n_ + i) = T(1);
      tab_(i, n_ + m_) = flip ? -b[i] : b[i];
      basis_[i] = n_ + i;
    }
    active_.assign(m_, 1);
  }

  // Minimizes cost^T x over the tableau (cost indexed over all columns except
  // rhs). Returns false when unbounded.
  bool run(const Vec<T>& cost, int max_enter_col) {
    for (long iter = 0; iter < kMaxIter; ++iter) {
      int enter = -1;
      for (int j = 0; j < max_enter_col; ++j) {
        if (is_basic(j)) continue;
        T rc = cost[j];
        for (int i = 0; i < m_; ++i) {
          if (!active_[i]) continue;
          const T& coef = tab_(i, j);
          if (NumTraits<T>::is_zero(coef, 0.0)) continue;
          rc -= cost[basis_[i]] * coef;
        }
        if (rc < T(0) && !NumTraits<T>::is_zero(rc, eps_)) {
          enter = j;  // Bland: first improving index
          break;
        }
      }
      if (enter == -1) return true;
      int leave = -1;
      T best_ratio(0);
      for (int i = 0; i < m_; ++i) {
        if (!active_[i]) continue;
        const T& coef = tab_(i, enter);
        if (coef > T(0) && !NumTraits<T>::is_zero(coef, eps_)) {
          T ratio = tab_(i, n_ + m_) / coef;
          if (leave == -1 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave == -1) return false;  // unbounded direction
      pivot(leave, enter);
    }
    fail(Err::BadInput, "simplex iteration limit exceeded");
  }

  void pivot(int r, int c) {
    const T piv = tab_(r, c);
    const int w = n_ + m_ + 1;
    for (int j = 0; j < w; ++j) tab_(r, j) /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || !active_[i]) continue;
      const T f = tab_(i, c);
      if (NumTraits<T>::is_zero(f, 0.0)) continue;
      for (int j = 0; j < w; ++j) tab_(i, j) -= f * tab_(r, j);
    }
    basis_[r] = c;
  }

  bool is_basic(int col) const {
    for (int i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] == col) return true;
    return false;
  }

  // After phase 1: pivot artificials out of the basis or deactivate redundant
  // rows, so phase 2 only sees real variables.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j) {
        if (!NumTraits<T>::is_zero(tab_(i, j), eps_)) {
          col = j;
          break;
        }
      }
      if (col == -1) {
        active_[i] = 0;  // redundant constraint
      } else {
        pivot(i, col);
      }
    }
  }

  T phase1_objective() const {
    T s(0);
    for (int i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] >= n_) s += tab_(i, n_ + m_);
    }
    return s;
  }

  Vec<T> solution() const {
    Vec<T> x(n_, T(0));
    for (int i = 0; i < m_; ++i) {
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = tab_(i, n_ + m_);
    }
    return x;
  }

  int num_vars() const { return n_; }
  int num_rows() const { return m_; }

 private:
  static constexpr long kMaxIter = 500000;
  double eps_;
  int m_, n_;
  Mat<T> tab_;
  std::vector<int> basis_;
  std::vector<char> active_;
};

}  // namespace detail

template <class T>
LpResult<T> simplex_max(const Mat<T>& A, const Vec<T>& b, const Vec<T>& c, double eps) {
  detail::SimplexTableau<T> tab(A, b, eps);
  const int n = A.cols, m = A.rows;
  // Phase 1: minimize the sum of artificials.
  Vec<T> cost1(n + m, T(0));
  for (int j = n; j < n + m; ++j) cost1[j] = T(1);
  tab.run(cost1, n + m);
  if (!NumTraits<T>::is_zero(tab.phase1_objective(), eps)) {
    return {LpStatus::Infeasible, {}, T(0)};
  }
  tab.purge_artificials();
  // Phase 2: minimize -c over real variables only.
  Vec<T> cost2(n + m, T(0));
  for (int j = 0; j < n; ++j) cost2[j] = -c[j];
  if (!tab.run(cost2, n)) {
    return {LpStatus::Unbounded, {}, T(0)};
  }
  LpResult<T> res;
  res.status = LpStatus::Optimal;
  res.x = tab.solution();
  res.objective = dot(res.x, c);
  return res;
}

}  // namespace gd
