#include "quotdeform/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qd {

namespace {

// Gauss-Jordan elimination.  Pivot choice (first row with a nonzero
// entry in the leftmost unfinished column) does not depend on the
// thread count, and the per-row updates are independent, so the
// parallel and serial paths agree exactly.
template <bool Parallel>
Rref rref_impl(QMat a) {
  const int R = a.rows(), C = a.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int pr = -1;
    for (int i = row; i < R; ++i)
      if (!a.at(i, col).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int j = col; j < C; ++j) std::swap(a.at(pr, j), a.at(row, j));
    Fq inv = a.at(row, col).inverse();
    for (int j = col; j < C; ++j) a.at(row, j) *= inv;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && R > 8)
#endif
    for (int i = 0; i < R; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Fq f = a.at(i, col);
      for (int j = col; j < C; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

Rref rref(const QMat& a) { return rref_impl<true>(a); }
Rref rref_serial(const QMat& a) { return rref_impl<false>(a); }

int rank(const QMat& a) { return rref(a).rank(); }

std::vector<std::vector<Fq>> nullspace(const QMat& a) {
  Rref r = rref(a);
  const int C = a.cols();
  std::vector<bool> is_pivot(C, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Fq>> out;
  for (int fc = 0; fc < C; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Fq> v(C, Fq(a.field(), 0));
    v[fc] = Fq(a.field(), 1);
    for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
      v[r.pivot_cols[pi]] = -r.m.at((int)pi, fc);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Fq>> solve(const QMat& a, const std::vector<Fq>& b) {
  const int R = a.rows(), C = a.cols();
  QMat aug(a.field(), R, C + 1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, C) = b[i];
  }
  Rref r = rref(aug);
  for (int p : r.pivot_cols)
    if (p == C) return std::nullopt;  // inconsistent
  std::vector<Fq> x(C, Fq(a.field(), 0));
  for (size_t pi = 0; pi < r.pivot_cols.size(); ++pi)
    x[r.pivot_cols[pi]] = r.m.at((int)pi, C);
  return x;
}

}  // namespace qd
