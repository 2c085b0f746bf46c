#include "quotdeform/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qd {

MonomialOrder MonomialOrder::weights(std::vector<std::vector<long>> w) {
  MonomialOrder o(OrderKind::Weight);
  if (w.empty()) throw structural_error("weight order: empty matrix");
  size_t n = w[0].size();
  for (auto& row : w)
    if (row.size() != n) throw structural_error("weight order: ragged matrix");
  for (size_t j = 0; j < n; ++j) {
    long first = 0;
    for (auto& row : w) {
      if (row[j] != 0) {
        first = row[j];
        break;
      }
    }
    if (first <= 0)
      throw structural_error(
          "weight order: column " + std::to_string(j) +
          " lacks a positive leading weight (not a well-order)");
  }
  o.w_ = std::move(w);
  return o;
}

static int cmp_grevlex(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    long d = (long)a.exp(i) - (long)b.exp(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (int i = 0; i < a.nvars(); ++i) {
        long d = (long)a.exp(i) - (long)b.exp(i);
        if (d != 0) return d > 0 ? 1 : -1;
      }
      return 0;
    case OrderKind::GrevLex:
      return cmp_grevlex(a, b);
    case OrderKind::Weight:
      for (const auto& row : w_) {
        long wa = 0, wb = 0;
        for (int i = 0; i < a.nvars(); ++i) {
          wa += row[i] * (long)a.exp(i);
          wb += row[i] * (long)b.exp(i);
        }
        if (wa != wb) return wa > wb ? 1 : -1;
      }
      return cmp_grevlex(a, b);
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Weight:
      return "weights";
  }
  return "?";
}

RingPtr PolyRing::make(Field k, std::vector<std::string> vars,
                       MonomialOrder order) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw structural_error("PolyRing: duplicate variable " + vars[i]);
  if (order.kind() == OrderKind::Weight &&
      order.weight_rows()[0].size() != vars.size())
    throw structural_error("PolyRing: weight matrix width != variable count");
  return std::make_shared<const PolyRing>(std::move(k), std::move(vars),
                                          std::move(order));
}

int PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return (int)i;
  return -1;
}

Poly::Poly(RingPtr r, std::vector<Term> terms) : ring_(std::move(r)) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring_->order().cmp(a.m, b.m) > 0;
  });
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!terms_.empty() && terms_.back().m == t.m) {
      terms_.back().c += t.c;
      if (terms_.back().c.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(t);
    }
  }
}

Poly Poly::constant(const RingPtr& r, const Fq& c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(r->nvars()), c});
  return p;
}

Poly Poly::variable(const RingPtr& r, int i, unsigned d) {
  Poly p(r);
  if (d == 0) return constant(r, 1);
  p.terms_.push_back({Monomial::var(r->nvars(), i, d), Fq(r->field(), 1)});
  return p;
}

Poly Poly::monomial(const RingPtr& r, Monomial m, Fq c) {
  Poly p(r);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

long Poly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
  return d;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_)
    throw structural_error("Poly: operands from different rings");
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  check_ring(o);
  Poly r(ring_);
  const auto& A = terms_;
  const auto& B = o.terms_;
  size_t i = 0, j = 0;
  while (i < A.size() && j < B.size()) {
    int c = ring_->order().cmp(A[i].m, B[j].m);
    if (c > 0) {
      r.terms_.push_back(A[i++]);
    } else if (c < 0) {
      r.terms_.push_back(B[j++]);
    } else {
      Fq s = A[i].c + B[j].c;
      if (!s.is_zero()) r.terms_.push_back({A[i].m, s});
      ++i;
      ++j;
    }
  }
  while (i < A.size()) r.terms_.push_back(A[i++]);
  while (j < B.size()) r.terms_.push_back(B[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::times_monomial(const Monomial& m, const Fq& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Fq cc = t.c * c;
    if (!cc.is_zero()) r.terms_.push_back({t.m * m, cc});
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  check_ring(o);
  Poly acc(ring_);
  for (const auto& t : o.terms_) acc += times_monomial(t.m, t.c);
  return acc;
}

Poly Poly::scaled(const Fq& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& t : terms_) r.terms_.push_back({t.m, t.c * c});
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Poly Poly::derivative(int i) const {
  Poly r(ring_);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.m.exp(i);
    if (e == 0) continue;
    Fq c = t.c * Fq(ring_->field(), (long)e);
    if (c.is_zero()) continue;  // positive characteristic can kill terms
    Monomial m = t.m;
    std::vector<unsigned> ex = m.exps();
    ex[i] -= 1;
    out.push_back({Monomial(std::move(ex)), c});
  }
  return Poly(ring_, std::move(out));
}

Poly Poly::substitute(const RingPtr& target,
                      const std::vector<Poly>& images) const {
  if ((int)images.size() != ring_->nvars())
    throw structural_error("substitute: image count mismatch");
  Poly acc(target);
  for (const auto& t : terms_) {
    Poly term = Poly::constant(target, t.c);
    for (int i = 0; i < ring_->nvars(); ++i)
      for (unsigned e = 0; e < t.m.exp(i); ++e) term *= images[i];
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-", cs = cs.substr(1);
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      unsigned e = t.m.exp(i);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << mono;
    }
  }
  return os.str();
}

Poly operator*(const Fq& c, const Poly& p) { return p.scaled(c); }

}  // namespace qd
