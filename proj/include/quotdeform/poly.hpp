#ifndef QUOTDEFORM_POLY_HPP
#define QUOTDEFORM_POLY_HPP

#include <memory>
#include <string>
#include <vector>

#include "quotdeform/field.hpp"

namespace qd {

// Exponent vector; the variable count is fixed by the parent ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> e) : e_(std::move(e)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<unsigned>(nvars, 0)); }
  static Monomial var(int nvars, int i, unsigned d = 1) {
    std::vector<unsigned> e(nvars, 0);
    e[i] = d;
    return Monomial(std::move(e));
  }

  int nvars() const { return (int)e_.size(); }
  unsigned exp(int i) const { return e_[i]; }
  const std::vector<unsigned>& exps() const { return e_; }
  long total_degree() const {
    long d = 0;
    for (unsigned x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (unsigned x : e_)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  // quotient o / this, valid when divides(o)
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i)
      if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<unsigned> e_;
};

enum class OrderKind { Lex, GrevLex, Weight };

// Total, multiplicative well-order on monomials.
class MonomialOrder {
 public:
  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex); }
  // Weighted block order; rows are compared in sequence, ties broken by
  // grevlex.  Every column must have a positive first nonzero entry so
  // that the order refines divisibility (well-order).
  static MonomialOrder weights(std::vector<std::vector<long>> w);

  OrderKind kind() const { return kind_; }
  const std::vector<std::vector<long>>& weight_rows() const { return w_; }

  // +1 if a > b, 0 if equal, -1 if a < b
  int cmp(const Monomial& a, const Monomial& b) const;

  std::string str() const;
  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && w_ == o.w_;
  }

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}
  OrderKind kind_;
  std::vector<std::vector<long>> w_;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Multivariate polynomial ring over an exact field with a fixed
// monomial order.  Immutable; shared by all its elements.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static RingPtr make(Field k, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return k_; }
  int nvars() const { return (int)vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }
  int var_index(const std::string& name) const;  // -1 if absent

  PolyRing(Field k, std::vector<std::string> vars, MonomialOrder order)
      : k_(std::move(k)), vars_(std::move(vars)), order_(std::move(order)) {}

 private:
  Field k_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial m;
  Fq c;
};

// Sparse polynomial: terms strictly descending in the ring order, no
// zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr r) : ring_(std::move(r)) {}
  Poly(RingPtr r, std::vector<Term> terms);  // normalizes (sorts, merges)

  static Poly zero(const RingPtr& r) { return Poly(r); }
  static Poly constant(const RingPtr& r, const Fq& c);
  static Poly constant(const RingPtr& r, long n) {
    return constant(r, Fq(r->field(), n));
  }
  static Poly variable(const RingPtr& r, int i, unsigned d = 1);
  static Poly monomial(const RingPtr& r, Monomial m, Fq c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }
  const Term& leading() const { return terms_.front(); }
  long total_degree() const;  // -1 for the zero polynomial

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Fq& c) const;
  Poly times_monomial(const Monomial& m, const Fq& c) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Partial derivative with respect to variable i.
  Poly derivative(int i) const;

  // Substitute images[i] for variable i; images live in target (which
  // may be a different ring over the same field).
  Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;

  std::string str() const;

 private:
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

Poly operator*(const Fq& c, const Poly& p);

}  // namespace qd

#endif
