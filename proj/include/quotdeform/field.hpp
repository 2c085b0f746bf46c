#ifndef QUOTDEFORM_FIELD_HPP
#define QUOTDEFORM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qd {

// Thrown when inputs are structurally malformed (mixed rings, shape
// mismatches, name collisions).  The CLI maps this to exit code 2/3
// depending on context.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a mathematical precondition fails (not square-zero,
// flatness failure, non-finite dimension where one was required).
struct math_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration exceeds its candidate cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_prime_u32(uint32_t n);

// Exact coefficient field: the rationals (characteristic 0) or a prime
// field GF(p) with p < 2^31.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }

  static Field prime(uint32_t p) {
    if (p >= (1u << 31) || !is_prime_u32(p))
      throw structural_error("Field::prime: " + std::to_string(p) +
                             " is not a prime < 2^31");
    Field f;
    f.p_ = p;
    return f;
  }

  uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const {
    return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
  }

 private:
  uint32_t p_;
};

// A field element.  Rationals are kept canonical by GMP (lowest terms,
// positive denominator); GF(p) elements are stored as the integer
// representative in [0, p).
class Fq {
 public:
  Fq() : p_(0) {}  // zero of QQ; reparented on first arithmetic use

  Fq(const Field& k, long n) : v_(n), p_(k.characteristic()) { reduce(); }
  Fq(const Field& k, long num, long den) : v_(num, den), p_(k.characteristic()) {
    v_.canonicalize();
    reduce();
  }
  Fq(const Field& k, const mpq_class& v) : v_(v), p_(k.characteristic()) {
    v_.canonicalize();
    reduce();
  }

  Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  uint32_t characteristic() const { return p_; }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fq operator-() const {
    Fq r(*this);
    r.v_ = -r.v_;
    r.reduce();
    return r;
  }

  Fq& operator+=(const Fq& o) {
    match(o);
    v_ += o.v_;
    reduce();
    return *this;
  }
  Fq& operator-=(const Fq& o) {
    match(o);
    v_ -= o.v_;
    reduce();
    return *this;
  }
  Fq& operator*=(const Fq& o) {
    match(o);
    v_ *= o.v_;
    reduce();
    return *this;
  }
  Fq& operator/=(const Fq& o) { return *this *= o.inverse(); }

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator/(Fq a, const Fq& b) { return a /= b; }

  Fq inverse() const;

  bool operator==(const Fq& o) const { return v_ == o.v_; }
  bool operator!=(const Fq& o) const { return v_ != o.v_; }

  // Prints p/q in lowest terms (positive denominator) over QQ and the
  // canonical representative 0..p-1 over GF(p).
  std::string str() const { return v_.get_str(); }

 private:
  void match(const Fq& o) {
    if (p_ == 0 && v_ == 0)
      p_ = o.p_;  // literal zero adopts the other operand's field
    else if (o.p_ != p_ && !(o.p_ == 0 && o.v_ == 0))
      throw structural_error("Fq: mixed coefficient fields");
  }
  void reduce();

  mpq_class v_;
  uint32_t p_;
};

}  // namespace qd

#endif
