#include "quotdeform/field.hpp"

namespace qd {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; (uint64_t)d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

void Fq::reduce() {
  if (p_ == 0) return;
  // GF(p) values are integers; arithmetic keeps denominators at 1.
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  if (den != 1) {
    // a rational with denominator den: multiply by den^{-1} mod p
    mpz_class dinv;
    mpz_class pz(p_);
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
      throw math_error("Fq: denominator not invertible mod p");
    num *= dinv;
  }
  mpz_class r = num % mpz_class(p_);
  if (r < 0) r += p_;
  v_ = mpq_class(r);
}

Fq Fq::inverse() const {
  if (is_zero()) throw math_error("Fq: inverse of zero");
  Fq r(*this);
  if (p_ == 0) {
    r.v_ = 1 / v_;
    return r;
  }
  mpz_class inv;
  mpz_class num = v_.get_num();
  mpz_class pz(p_);
  if (mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw math_error("Fq: not invertible mod p");
  r.v_ = mpq_class(inv);
  r.reduce();
  return r;
}

}  // namespace qd
