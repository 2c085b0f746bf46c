#ifndef QUOTDEFORM_KAHLER_HPP
#define QUOTDEFORM_KAHLER_HPP

#include "quotdeform/homext.hpp"

namespace qd {

// Omega_{B/A} (A = k, or relative along a ring map) presented on the
// generators dx_i with the Jacobian rows of the defining ideal as
// relations; d is formal differentiation followed by reduction.
struct KahlerModule {
  QRPtr B;
  Mod omega;                      // generated by dx_0..dx_{n-1}
  std::vector<Poly> killed;       // images of base variables (relative case)
  MElem d(const Poly& f) const;   // universal derivation on a representative
};

KahlerModule kahler(const QRPtr& B);
KahlerModule kahler_relative(const RingMap& f);  // Omega_{C/B} along B -> C

// P^1_{C/B}(E) presented over C on p_j = 1(x)1(x)e_j and
// w_{ij} = dx_i (x) e_j, with the principal parts sequence
// 0 -> Omega_{C/B} (x) E -> P1 -> E -> 0, the B-linear section s and,
// when E = C (x)_B M, the C-linear section t with its retraction.
struct PrincipalParts {
  RingMap f;              // B -> C
  Mod E;
  KahlerModule omega;     // Omega_{C/B}
  TensorData omegaE;      // Omega (x) E
  Mod P1;
  MHom incl;              // Omega (x) E -> P1
  MHom proj;              // P1 -> E
  SES seq;
  std::optional<MHom> t;        // E -> P1, C-linear
  std::optional<MHom> retract;  // P1 -> Omega (x) E

  int p_index(int j) const { return j; }
  int w_index(int i, int j) const { return E->gens() + i * E->gens() + j; }

  // B-linear section e |-> 1 (x) 1 (x) e, computed on the normal form
  // representative (a function of elements, not a module map).
  MElem s(const MElem& e) const;
};

PrincipalParts principal_parts(const RingMap& f, const Mod& E,
                               const std::optional<Mod>& M = std::nullopt);

// H^0 of the reduced Atiyah class: N -> Omega_{C/B} (x) F for a
// surjection f : E -> F with kernel N, E extended from B.
struct BetaData {
  TensorData omegaF;
  MHom beta;  // N -> Omega (x) F
};
BetaData h0_beta(const PrincipalParts& pp, const MHom& f, const SubQuot& N);

// independent route: (Omega (x) f) o (s - t) evaluated on one element
MElem h0_beta_sections_route(const PrincipalParts& pp, const MHom& f,
                             const TensorData& omegaF, const MElem& n);

// Conormal data of a square-zero algebra extension B1' -> B1 (same
// ambient ring, J' contained in J, J*J contained in J'):
// I1 -> Omega_{B1'/A} (x) B1 -> Omega_{B1/A} -> 0, with the canonical
// cocycle q : J/J^2 -> I1.
struct ConormalData {
  QRPtr B1p, B1;
  Mod I1;                          // J/J', a B1-module on the basis of J
  std::vector<Poly> I1_gen_lifts;  // ambient representatives
  KahlerModule omega_B1;           // Omega_{B1/A}
  Mod omega_mid;                   // Omega_{B1'/A} (x)_{B1'} B1
  MHom delta;                      // I1 -> omega_mid, g |-> dg
  MHom pr;                         // omega_mid -> omega_B1
  bool left_exact;                 // delta injective
  Mod JmodJ2;
  MHom q;                          // J/J^2 -> I1

  // the truncated extension class e(B1'); requires left_exact
  Ext1Class extension_class() const;
};

ConormalData conormal(const QRPtr& B1p, const QRPtr& B1);

// B1[I1], the trivial square-zero extension, as a quotient ring with
// one new variable per generator of I1.
struct TrivialExtension {
  QRPtr B1;
  Mod I1;
  QRPtr ring;        // B1[I1]
  RingMap from_B1;   // the zero section s0 : B1 -> B1[I1]
  RingMap onto_B1;   // B1[I1] -> B1, new variables to 0
  int zbase;         // index of the first new variable

  Poly embed(const MElem& x) const;  // I1 element as a ring element
};

TrivialExtension trivial_extension(const QRPtr& B1, const Mod& I1,
                                   const std::string& zprefix = "z");

// An A-algebra section s of B1[I1] -> B1 together with its derivation
// d_s and the module map g_s : Omega_{B1} -> I1.
struct SectionData {
  RingMap s;
  std::vector<MElem> deriv;  // d_s(x_v) in I1
  MHom g_s;                  // Omega_{B1} -> I1
};

SectionData section_from_hom(const TrivialExtension& te,
                             const KahlerModule& omega_B1, const MHom& g);
SectionData zero_section(const TrivialExtension& te,
                         const KahlerModule& omega_B1);

}  // namespace qd

#endif
