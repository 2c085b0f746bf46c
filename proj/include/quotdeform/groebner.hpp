#ifndef QUOTDEFORM_GROEBNER_HPP
#define QUOTDEFORM_GROEBNER_HPP

#include <optional>
#include <vector>

#include "quotdeform/poly.hpp"

namespace qd {

struct VTerm {
  int comp;
  Monomial m;
  Fq c;
};

// Element of a free module R^n over a polynomial ring, with terms kept
// strictly descending in the position-over-term order (lower component
// index dominates, ties broken by the ring's monomial order).
class FreeVec {
 public:
  FreeVec() : ncomp_(0) {}
  FreeVec(RingPtr r, int ncomp) : ring_(std::move(r)), ncomp_(ncomp) {}
  FreeVec(RingPtr r, int ncomp, std::vector<VTerm> terms);

  static FreeVec from_coords(const RingPtr& r, const std::vector<Poly>& coords);
  std::vector<Poly> coords() const;

  const RingPtr& ring() const { return ring_; }
  int ncomp() const { return ncomp_; }
  const std::vector<VTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  const VTerm& leading() const { return t_.front(); }
  long total_degree() const;

  FreeVec operator+(const FreeVec& o) const;
  FreeVec operator-(const FreeVec& o) const;
  FreeVec operator-() const;
  FreeVec times(const Monomial& m, const Fq& c) const;
  FreeVec times(const Poly& p) const;
  FreeVec scaled(const Fq& c) const;

  // embed into a wider free module, shifting components by `shift`
  FreeVec widened(int new_ncomp, int shift) const;
  // keep components [lo, hi), re-indexed from 0
  FreeVec slice(int lo, int hi) const;

  bool operator==(const FreeVec& o) const;

  // +1 / 0 / -1 comparison of terms under position-over-term
  static int term_cmp(const MonomialOrder& ord, int c1, const Monomial& m1,
                      int c2, const Monomial& m2);

 private:
  RingPtr ring_;
  int ncomp_;
  std::vector<VTerm> t_;
};

// Groebner basis of a submodule of R^n.  The basis is reduced (monic,
// autoreduced) and canonically sorted, hence unique for the given
// order; identical inputs yield bit-identical bases.  When tracking is
// enabled every basis element carries its expression over the input
// generators.
class GB {
 public:
  RingPtr ring;
  int ncomp = 0;
  std::vector<FreeVec> input;
  std::vector<FreeVec> basis;
  bool tracked = false;
  std::vector<std::vector<Poly>> lift;  // basis[i] = sum_j lift[i][j] * input[j]

  // Full normal form; if cof is non-null (requires tracking) it
  // receives coefficients with v = sum_j (*cof)[j] * input[j] + result.
  FreeVec nf(const FreeVec& v, std::vector<Poly>* cof = nullptr) const;

  bool contains(const FreeVec& v) const { return nf(v).is_zero(); }
};

GB buchberger(RingPtr ring, int ncomp, std::vector<FreeVec> gens,
              bool track = false);

// Generators of the syzygy module of the given columns: all tuples
// (g_1..g_m) with sum g_i * cols[i] = 0.
std::vector<std::vector<Poly>> syzygies(RingPtr ring, int ncomp,
                                        const std::vector<FreeVec>& cols);

}  // namespace qd

#endif
