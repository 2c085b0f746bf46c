#ifndef QUOTDEFORM_QRING_HPP
#define QUOTDEFORM_QRING_HPP

#include <memory>
#include <vector>

#include "quotdeform/groebner.hpp"

namespace qd {

Poly vec_to_poly(const FreeVec& v);
FreeVec poly_to_vec(const Poly& p);

// An ideal together with its reduced Groebner basis.  The basis is
// unique for the ring's monomial order; recomputing from the basis
// returns it unchanged.
class GroebnerIdeal {
 public:
  GroebnerIdeal() = default;
  GroebnerIdeal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& basis() const { return basis_; }
  const GB& gb() const { return gb_; }
  bool is_zero() const { return basis_.empty(); }

  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::vector<Poly> basis_;
  GB gb_;
};

class QuotientRing;
using QRPtr = std::shared_ptr<const QuotientRing>;

// B = P/J with a cached normal-form reducer; element equality is
// equality of normal forms.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QRPtr make(RingPtr ambient, std::vector<Poly> ideal_gens);
  static QRPtr make(GroebnerIdeal J);

  const RingPtr& ambient() const { return ambient_; }
  const GroebnerIdeal& ideal() const { return J_; }
  const Field& field() const { return ambient_->field(); }
  int nvars() const { return ambient_->nvars(); }

  Poly nf(const Poly& f) const { return J_.normal_form(f); }
  bool is_polynomial_ring() const { return J_.is_zero(); }

  QuotientRing(RingPtr ambient, GroebnerIdeal J)
      : ambient_(std::move(ambient)), J_(std::move(J)) {}

 private:
  RingPtr ambient_;
  GroebnerIdeal J_;
};

// Ring homomorphism between quotient rings determined by images of the
// ambient variables; well-definedness (J_src maps into J_dst) is
// checked at construction.
class RingMap {
 public:
  RingMap() = default;
  RingMap(QRPtr src, QRPtr dst, std::vector<Poly> var_images);

  // the quotient surjection B' -> B when both share an ambient ring
  // and J' is contained in J
  static RingMap quotient(QRPtr src, QRPtr dst);

  const QRPtr& src() const { return src_; }
  const QRPtr& dst() const { return dst_; }
  const std::vector<Poly>& var_images() const { return images_; }

  Poly apply(const Poly& f) const;

 private:
  QRPtr src_, dst_;
  std::vector<Poly> images_;
};

struct Coproduct {
  QRPtr ring;   // B1 (x)_k B2
  RingMap from1;
  RingMap from2;
};

// B0 = B1 (x)_A B2 with A = k: juxtapose variables, sum the defining
// ideals.  Variable-name collisions are a structural error.
Coproduct coproduct_ring(const QRPtr& B1, const QRPtr& B2);

}  // namespace qd

#endif
