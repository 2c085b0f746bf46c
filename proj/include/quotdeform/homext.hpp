#ifndef QUOTDEFORM_HOMEXT_HPP
#define QUOTDEFORM_HOMEXT_HPP

#include <variant>

#include "quotdeform/fpmod.hpp"

namespace qd {

bool is_zero_module(const Mod& M);
bool is_injective(const MHom& f);
bool is_surjective(const MHom& f);

// multiplication by a ring element as an endomorphism
MHom scalar_hom(const Mod& M, const Poly& r);

// 0 -> S' -> S -> S'' -> 0 with injectivity, surjectivity and
// image-equals-kernel checked at construction.
class SES {
 public:
  SES() = default;
  SES(MHom incl, MHom proj);

  const MHom& incl() const { return incl_; }
  const MHom& proj() const { return proj_; }
  const Mod& sub() const { return incl_.src(); }
  const Mod& mid() const { return incl_.dst(); }
  const Mod& quot() const { return proj_.dst(); }

 private:
  MHom incl_, proj_;
};

// An element of Ext^1(M, N): a cocycle on the fixed syzygy
// presentation of M, compared modulo maps extending to the free cover.
class Ext1Class {
 public:
  Ext1Class() = default;
  Ext1Class(Mod M, Mod N, MHom cocycle);
  static Ext1Class zero(const Mod& M, const Mod& N);

  const Mod& source() const { return M_; }
  const Mod& target() const { return N_; }
  const MHom& cocycle() const { return c_; }

  Ext1Class operator+(const Ext1Class& o) const;
  Ext1Class operator-() const;
  Ext1Class operator-(const Ext1Class& o) const { return *this + (-o); }

 private:
  Mod M_, N_;
  MHom c_;  // M->syz().module -> N
};

struct Splitting {
  MHom section;  // S'' -> S, proj o section = id
};

Ext1Class class_of(const SES& s);
SES realize(const Ext1Class& c);

// Extension certificate: psi with psi o (Syz -> B^g) = cocycle, i.e. a
// witness that the class vanishes.
std::optional<MHom> extend_cocycle(const Ext1Class& c, bool canonical = false);
bool is_zero_class(const Ext1Class& c);

std::variant<Splitting, Ext1Class> splitting_test(const SES& s,
                                                  bool canonical = false);

Ext1Class baer_sum(const Ext1Class& a, const Ext1Class& b);
Ext1Class pushout_class(const Ext1Class& c, const MHom& g);   // g: N -> N'
Ext1Class pullback_class(const Ext1Class& c, const MHom& h);  // h: M' -> M

struct PushoutData {
  Mod module;      // K (+)_S L
  MHom from_left;  // L -> M
  MHom from_right; // K -> M
};
PushoutData pushout(const MHom& i, const MHom& u);  // i: S->L, u: S->K

struct PullbackData {
  Mod module;     // E x_Q X
  MHom to_left;   // P -> E
  MHom to_right;  // P -> X
  MHom incl_sum;  // P -> E (+) X, the kernel inclusion
};
PullbackData pullback(const MHom& p, const MHom& q);  // p: E->Q, q: X->Q

// Randomized mediating-map spot checks of the universal properties.
void check_pushout_universal(const PushoutData& d, const MHom& i,
                             const MHom& u, unsigned seed, int trials = 10);
void check_pullback_universal(const PullbackData& d, const MHom& p,
                              const MHom& q, unsigned seed, int trials = 10);

// Ext^1(M, N) presented as a module (cokernel of the restriction map
// N^g -> Hom(Syz M, N)) with a k-basis of cocycles when finite.
struct Ext1Group {
  Mod M, N;
  HomModule hom_syz;       // Hom(Syz M, N)
  MHom restriction;        // N^g -> hom_syz.H
  Mod ext;                 // cokernel
  MHom onto;               // hom_syz.H -> ext
  KBasis kb;               // of ext (kb.finite may be false)

  int dim() const;  // throws math_error when not finite-dimensional
  std::vector<Ext1Class> cocycle_basis() const;
  std::vector<Fq> coordinates(const Ext1Class& c) const;
};

Ext1Group ext1(const Mod& M, const Mod& N);

}  // namespace qd

#endif
