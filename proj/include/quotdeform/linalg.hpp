#ifndef QUOTDEFORM_LINALG_HPP
#define QUOTDEFORM_LINALG_HPP

#include <optional>
#include <vector>

#include "quotdeform/field.hpp"

namespace qd {

// Dense matrix over an exact field.  Row elimination is the data-parallel
// inner loop of the dimension, Hom and enumeration machinery; both an
// OpenMP kernel and a serial reference are provided and must produce
// bit-identical results (exact arithmetic, deterministic pivoting).
class QMat {
 public:
  QMat() : r_(0), c_(0) {}
  QMat(Field k, int rows, int cols)
      : k_(k), r_(rows), c_(cols), a_((size_t)rows * cols, Fq(k, 0)) {}

  int rows() const { return r_; }
  int cols() const { return c_; }
  const Field& field() const { return k_; }

  Fq& at(int i, int j) { return a_[(size_t)i * c_ + j]; }
  const Fq& at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

  bool operator==(const QMat& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

 private:
  Field k_;
  int r_, c_;
  std::vector<Fq> a_;
};

struct Rref {
  QMat m;
  std::vector<int> pivot_cols;
  int rank() const { return (int)pivot_cols.size(); }
};

Rref rref(const QMat& a);         // OpenMP row updates
Rref rref_serial(const QMat& a);  // reference implementation

int rank(const QMat& a);

// Basis of the right nullspace (one column vector per free column,
// canonical reduced-echelon parametrization, deterministic order).
std::vector<std::vector<Fq>> nullspace(const QMat& a);

// Particular solution of A x = b with free variables set to zero.
std::optional<std::vector<Fq>> solve(const QMat& a, const std::vector<Fq>& b);

}  // namespace qd

#endif
