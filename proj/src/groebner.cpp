#include "quotdeform/groebner.hpp"

#include <algorithm>

namespace qd {

int FreeVec::term_cmp(const MonomialOrder& ord, int c1, const Monomial& m1,
                      int c2, const Monomial& m2) {
  if (c1 != c2) return c1 < c2 ? 1 : -1;  // lower component dominates
  return ord.cmp(m1, m2);
}

FreeVec::FreeVec(RingPtr r, int ncomp, std::vector<VTerm> terms)
    : ring_(std::move(r)), ncomp_(ncomp) {
  const auto& ord = ring_->order();
  std::sort(terms.begin(), terms.end(), [&](const VTerm& a, const VTerm& b) {
    return term_cmp(ord, a.comp, a.m, b.comp, b.m) > 0;
  });
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (t.comp < 0 || t.comp >= ncomp_)
      throw structural_error("FreeVec: component out of range");
    if (!t_.empty() && t_.back().comp == t.comp && t_.back().m == t.m) {
      t_.back().c += t.c;
      if (t_.back().c.is_zero()) t_.pop_back();
    } else {
      t_.push_back(t);
    }
  }
}

FreeVec FreeVec::from_coords(const RingPtr& r, const std::vector<Poly>& coords) {
  std::vector<VTerm> ts;
  for (size_t i = 0; i < coords.size(); ++i)
    for (const auto& t : coords[i].terms()) ts.push_back({(int)i, t.m, t.c});
  return FreeVec(r, (int)coords.size(), std::move(ts));
}

std::vector<Poly> FreeVec::coords() const {
  std::vector<std::vector<Term>> parts(ncomp_);
  for (const auto& t : t_) parts[t.comp].push_back({t.m, t.c});
  std::vector<Poly> out;
  out.reserve(ncomp_);
  for (auto& p : parts) out.push_back(Poly(ring_, std::move(p)));
  return out;
}

long FreeVec::total_degree() const {
  long d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.total_degree());
  return d;
}

FreeVec FreeVec::operator+(const FreeVec& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (ring_ != o.ring_ || ncomp_ != o.ncomp_)
    throw structural_error("FreeVec: mixed parents");
  const auto& ord = ring_->order();
  FreeVec r(ring_, ncomp_);
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = term_cmp(ord, t_[i].comp, t_[i].m, o.t_[j].comp, o.t_[j].m);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Fq s = t_[i].c + o.t_[j].c;
      if (!s.is_zero()) r.t_.push_back({t_[i].comp, t_[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

FreeVec FreeVec::operator-() const {
  FreeVec r(*this);
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

FreeVec FreeVec::operator-(const FreeVec& o) const { return *this + (-o); }

FreeVec FreeVec::times(const Monomial& m, const Fq& c) const {
  FreeVec r(ring_, ncomp_);
  if (c.is_zero()) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) {
    Fq cc = t.c * c;
    if (!cc.is_zero()) r.t_.push_back({t.comp, t.m * m, cc});
  }
  return r;
}

FreeVec FreeVec::times(const Poly& p) const {
  FreeVec acc(ring_, ncomp_);
  for (const auto& t : p.terms()) acc = acc + times(t.m, t.c);
  return acc;
}

FreeVec FreeVec::scaled(const Fq& c) const {
  FreeVec r(ring_, ncomp_);
  if (c.is_zero()) return r;
  for (const auto& t : t_) r.t_.push_back({t.comp, t.m, t.c * c});
  return r;
}

FreeVec FreeVec::widened(int new_ncomp, int shift) const {
  FreeVec r(ring_, new_ncomp);
  for (const auto& t : t_) r.t_.push_back({t.comp + shift, t.m, t.c});
  return r;
}

FreeVec FreeVec::slice(int lo, int hi) const {
  FreeVec r(ring_, hi - lo);
  for (const auto& t : t_)
    if (t.comp >= lo && t.comp < hi) r.t_.push_back({t.comp - lo, t.m, t.c});
  return r;
}

bool FreeVec::operator==(const FreeVec& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].comp != o.t_[i].comp || t_[i].m != o.t_[i].m ||
        t_[i].c != o.t_[i].c)
      return false;
  return true;
}

namespace {

// Full reduction of v against basis vectors (scanned in order).  When
// cof is non-null, cofactors over the *inputs* are accumulated using
// `lifts` (expressions of basis elements over inputs) so that
// v = sum_j (*cof)[j]*input_j + result.
FreeVec reduce_full(const FreeVec& v, const std::vector<FreeVec>& basis,
                    const std::vector<std::vector<Poly>>* lifts,
                    std::vector<Poly>* cof, const RingPtr& ring) {
  std::vector<VTerm> remainder;
  FreeVec cur = v;
  while (!cur.is_zero()) {
    const VTerm lt = cur.leading();
    bool reduced = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      const FreeVec& b = basis[k];
      if (b.is_zero()) continue;
      const VTerm& bl = b.leading();
      if (bl.comp != lt.comp || !bl.m.divides(lt.m)) continue;
      Monomial q = bl.m.quotient_of(lt.m);
      Fq qc = lt.c / bl.c;
      cur = cur - b.times(q, qc);
      if (cof && lifts) {
        Poly qp = Poly::monomial(ring, q, qc);
        const auto& lift = (*lifts)[k];
        for (size_t j = 0; j < lift.size(); ++j) (*cof)[j] += qp * lift[j];
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back(lt);
      cur = cur - FreeVec(ring, cur.ncomp(), {lt});
    }
  }
  return FreeVec(ring, v.ncomp(), std::move(remainder));
}

struct PairKey {
  long deg;
  Monomial lcm;
  int comp;
  size_t i, j;
};

}  // namespace

FreeVec GB::nf(const FreeVec& v, std::vector<Poly>* cof) const {
  if (v.ring() != ring || v.ncomp() != ncomp)
    throw structural_error("GB::nf: element from a different free module");
  if (cof) {
    if (!tracked) throw structural_error("GB::nf: cofactors need tracking");
    cof->assign(input.size(), Poly(ring));
  }
  return reduce_full(v, basis, tracked ? &lift : nullptr, cof, ring);
}

GB buchberger(RingPtr ring, int ncomp, std::vector<FreeVec> gens, bool track) {
  GB out;
  out.ring = ring;
  out.ncomp = ncomp;
  out.input = gens;
  out.tracked = track;

  const MonomialOrder& ord = ring->order();
  std::vector<FreeVec> basis;
  std::vector<std::vector<Poly>> exprs;  // over inputs, parallel to basis

  auto pair_less = [&](const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.comp != b.comp) return a.comp < b.comp;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<PairKey> pairs;

  auto push_pairs_with = [&](size_t n) {
    for (size_t i = 0; i < n; ++i) {
      const VTerm& fi = basis[i].leading();
      const VTerm& fn = basis[n].leading();
      if (fi.comp != fn.comp) continue;
      if (ncomp == 1 && fi.m.coprime(fn.m)) continue;  // product criterion
      Monomial L = fi.m.lcm(fn.m);
      pairs.push_back({L.total_degree(), L, fi.comp, i, n});
    }
    std::sort(pairs.begin(), pairs.end(), pair_less);
  };

  auto add_elem = [&](FreeVec v, std::vector<Poly> expr) {
    std::vector<Poly> cof;
    if (track) cof.assign(gens.size(), Poly(ring));
    FreeVec r =
        reduce_full(v, basis, track ? &exprs : nullptr,
                    track ? &cof : nullptr, ring);
    if (r.is_zero()) return;
    if (track)
      for (size_t j = 0; j < expr.size(); ++j) expr[j] -= cof[j];
    basis.push_back(std::move(r));
    if (track) exprs.push_back(std::move(expr));
    push_pairs_with(basis.size() - 1);
  };

  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (gens[i].ring() != ring || gens[i].ncomp() != ncomp)
      throw structural_error("buchberger: generator in wrong free module");
    std::vector<Poly> expr;
    if (track) {
      expr.assign(gens.size(), Poly(ring));
      expr[i] = Poly::constant(ring, 1);
    }
    add_elem(gens[i], std::move(expr));
  }

  while (!pairs.empty()) {
    PairKey pk = pairs.front();
    pairs.erase(pairs.begin());
    const VTerm lf = basis[pk.i].leading();
    const VTerm lg = basis[pk.j].leading();
    Monomial L = lf.m.lcm(lg.m);
    Monomial qf = lf.m.quotient_of(L);
    Monomial qg = lg.m.quotient_of(L);
    Fq one(ring->field(), 1);
    FreeVec s = basis[pk.i].times(qf, one / lf.c) -
                basis[pk.j].times(qg, one / lg.c);
    std::vector<Poly> expr;
    if (track) {
      expr.assign(gens.size(), Poly(ring));
      Poly pf = Poly::monomial(ring, qf, one / lf.c);
      Poly pg = Poly::monomial(ring, qg, one / lg.c);
      for (size_t j = 0; j < gens.size(); ++j)
        expr[j] = pf * exprs[pk.i][j] - pg * exprs[pk.j][j];
    }
    add_elem(std::move(s), std::move(expr));
  }

  // autoreduce down to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      FreeVec self = std::move(basis[k]);
      std::vector<Poly> self_expr;
      if (track) self_expr = std::move(exprs[k]);
      basis.erase(basis.begin() + k);
      if (track) exprs.erase(exprs.begin() + k);
      std::vector<Poly> cof;
      if (track) cof.assign(gens.size(), Poly(ring));
      FreeVec r = reduce_full(self, basis, track ? &exprs : nullptr,
                              track ? &cof : nullptr, ring);
      if (track)
        for (size_t j = 0; j < cof.size(); ++j) self_expr[j] -= cof[j];
      if (!(r == self)) changed = true;
      if (r.is_zero()) {
        --k;
        continue;
      }
      basis.insert(basis.begin() + k, std::move(r));
      if (track) exprs.insert(exprs.begin() + k, std::move(self_expr));
    }
  }
  for (size_t k = 0; k < basis.size(); ++k) {
    Fq inv = Fq(ring->field(), 1) / basis[k].leading().c;
    basis[k] = basis[k].scaled(inv);
    if (track)
      for (auto& p : exprs[k]) p = p.scaled(inv);
  }
  std::vector<size_t> perm(basis.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    const VTerm& x = basis[a].leading();
    const VTerm& y = basis[b].leading();
    return FreeVec::term_cmp(ord, x.comp, x.m, y.comp, y.m) > 0;
  });
  for (size_t i : perm) {
    out.basis.push_back(basis[i]);
    if (track) out.lift.push_back(exprs[i]);
  }
  return out;
}

std::vector<std::vector<Poly>> syzygies(RingPtr ring, int ncomp,
                                        const std::vector<FreeVec>& cols) {
  size_t m = cols.size();
  if (m == 0) return {};
  int wide = ncomp + (int)m;
  std::vector<FreeVec> aug;
  aug.reserve(m);
  for (size_t i = 0; i < m; ++i) {
    if (cols[i].ring() != ring || cols[i].ncomp() != ncomp)
      throw structural_error("syzygies: column in wrong free module");
    FreeVec a = cols[i].widened(wide, 0);
    FreeVec tag(ring, wide,
                {{ncomp + (int)i, Monomial::one(ring->nvars()),
                  Fq(ring->field(), 1)}});
    aug.push_back(a + tag);
  }
  GB gb = buchberger(ring, wide, std::move(aug));
  std::vector<std::vector<Poly>> out;
  for (const auto& b : gb.basis) {
    if (b.leading().comp < ncomp) continue;  // leading term still in the main block
    out.push_back(b.slice(ncomp, wide).coords());
  }
  return out;
}

}  // namespace qd
