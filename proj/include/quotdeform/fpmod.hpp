#ifndef QUOTDEFORM_FPMOD_HPP
#define QUOTDEFORM_FPMOD_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>

#include "quotdeform/linalg.hpp"
#include "quotdeform/qring.hpp"

namespace qd {

class FPModule;
using Mod = std::shared_ptr<const FPModule>;
struct SyzData;

// Finitely presented module over a quotient ring B = P/J: generators
// e_0..e_{g-1} and a relation matrix.  Membership and equality are
// decided through the Groebner basis (position-over-term order) of the
// relation submodule of P^g, which includes J*e_i for every i, so the
// ring quotient is handled uniformly.
class FPModule : public std::enable_shared_from_this<FPModule> {
 public:
  static Mod make(QRPtr ring, int gens, std::vector<std::vector<Poly>> rels);
  static Mod free(QRPtr ring, int rank);
  static Mod zero(QRPtr ring) { return free(std::move(ring), 0); }

  const QRPtr& ring() const { return ring_; }
  int gens() const { return gens_; }
  const std::vector<std::vector<Poly>>& rels() const { return rels_; }
  const GB& full_gb() const { return full_gb_; }

  FreeVec reduce(const FreeVec& v) const { return full_gb_.nf(v); }
  std::vector<Poly> reduce(const std::vector<Poly>& coords) const;

  // The fixed syzygy presentation used for Ext^1 cocycles; computed on
  // first use, guarded so concurrent callers see one result.
  const SyzData& syz() const;

  FPModule(QRPtr ring, int gens, std::vector<std::vector<Poly>> rels, GB gb)
      : ring_(std::move(ring)), gens_(gens), rels_(std::move(rels)),
        full_gb_(std::move(gb)) {}

 private:
  QRPtr ring_;
  int gens_;
  std::vector<std::vector<Poly>> rels_;
  GB full_gb_;
  mutable std::once_flag syz_once_;
  mutable std::shared_ptr<const SyzData> syz_cache_;
};

// Element kept in normal form with respect to the parent's relation basis.
class MElem {
 public:
  MElem() = default;
  MElem(Mod M, std::vector<Poly> coords);

  const Mod& parent() const { return M_; }
  const std::vector<Poly>& coords() const { return c_; }
  bool is_zero() const;

  MElem operator+(const MElem& o) const;
  MElem operator-(const MElem& o) const;
  MElem operator-() const;
  MElem scaled(const Poly& r) const;  // ring element times this
  MElem scaled(const Fq& c) const;
  bool operator==(const MElem& o) const;
  bool operator!=(const MElem& o) const { return !(*this == o); }

 private:
  Mod M_;
  std::vector<Poly> c_;
};

MElem generator(const Mod& M, int i);
MElem zero_elem(const Mod& M);

// Map of modules given by generator images; every source relation is
// checked to land in the target's relation submodule at construction.
class MHom {
 public:
  MHom() = default;
  MHom(Mod src, Mod dst, std::vector<MElem> images);
  MHom(Mod src, Mod dst, const std::vector<std::vector<Poly>>& matrix);

  static MHom identity(const Mod& M);
  static MHom zero(const Mod& src, const Mod& dst);

  const Mod& src() const { return src_; }
  const Mod& dst() const { return dst_; }
  const std::vector<MElem>& images() const { return im_; }

  MElem apply(const MElem& x) const;
  MHom compose_after(const MHom& inner) const;  // this o inner

  MHom operator+(const MHom& o) const;
  MHom operator-(const MHom& o) const;
  MHom operator-() const;
  MHom scaled(const Fq& c) const;
  bool operator==(const MHom& o) const;

  bool is_zero_map() const;

 private:
  Mod src_, dst_;
  std::vector<MElem> im_;
};

struct SubQuot {
  Mod module;
  MHom map;  // inclusion (kernel/image) or projection (cokernel)
};

struct ImageData {
  Mod module;
  MHom incl;  // module -> dst
  MHom onto;  // src -> module
};

// Present the span of the given elements of N, together with its
// inclusion.  Relations are the syzygies of the elements within N.
SubQuot submodule(const Mod& N, const std::vector<MElem>& elems);

SubQuot kernel(const MHom& f);
ImageData image(const MHom& f);
SubQuot cokernel(const MHom& f);

// Coefficients expressing target over the given elements of a module,
// or nullopt if target is not in their span.  When canonical is true
// the coefficient vector is normalized against the syzygy module of
// the elements, making the choice reproducible.
std::optional<std::vector<Poly>> express(const std::vector<MElem>& elems,
                                         const MElem& target,
                                         bool canonical = false);

std::optional<MElem> preimage(const MHom& f, const MElem& y,
                              bool canonical = false);

// g with image inside im(f) factored through f: returns h with f o h = g.
std::optional<MHom> factor_through(const MHom& f, const MHom& g);

struct TensorData {
  Mod module;                       // M (x)_B N
  int gn;                           // generator (i,j) sits at i*gn + j
  MElem pure(const MElem& x, const MElem& y) const;
};

TensorData tensor(const Mod& M, const Mod& N);
// f (x) g on tensor presentations built by tensor()
MHom tensor_hom(const TensorData& srcT, const TensorData& dstT, const MHom& f,
                const MHom& g);

struct SumData {
  Mod module;
  std::vector<MHom> incl;  // summand -> sum
  std::vector<MHom> proj;  // sum -> summand
};
SumData direct_sum(const std::vector<Mod>& parts);

// M (x)_B S along a ring map B -> S (right exactness: same generators,
// mapped relations).
Mod base_change(const Mod& M, const RingMap& f);
MHom base_change_hom(const MHom& h, const RingMap& f, const Mod& src_bc,
                     const Mod& dst_bc);

// Restriction of scalars along a quotient surjection B' -> B (same
// ambient ring): same presentation plus J_B * e_i rows, over B'.
Mod restrict_scalars(const Mod& M, const QRPtr& big);
// Inverse direction for a B'-module killed by ker(B' -> B); checked.
Mod corestrict_scalars(const Mod& M, const QRPtr& small);
MElem transport(const MElem& x, const Mod& target);  // same coords, new parent
MHom transport_hom(const MHom& f, const Mod& new_src, const Mod& new_dst);

// First syzygy module of M: the span of M's relation rows inside B^g,
// presented on those rows (the fixed choice used for Ext^1 cocycles).
struct SyzData {
  Mod module;                 // Syz(M)
  std::vector<MElem> in_free; // images of its generators in B^g = free cover
  Mod free_cover;             // B^g
  MHom incl_free;             // Syz(M) -> B^g
  MHom free_to_M;             // B^g -> M
};
SyzData syzygy_module(const Mod& M);

struct ResolutionFragment {
  Mod M;
  Mod F0, F1, F2;
  MHom d1;  // F1 -> F0
  MHom d2;  // F2 -> F1
  MHom aug; // F0 -> M
};
ResolutionFragment resolution_fragment(const Mod& M);

// k-dimension bookkeeping: standard monomials (component, monomial)
// below the staircase of the relation basis.
class KBasis {
 public:
  bool finite = false;
  std::vector<std::pair<int, Monomial>> mons;
  int dim() const { return (int)mons.size(); }
  int index_of(int comp, const Monomial& m) const;

  std::vector<Fq> coords(const MElem& x) const;
  MElem element(const Mod& M, const std::vector<Fq>& v) const;

 private:
  friend KBasis kbasis(const Mod& M);
  std::map<std::pair<int, std::vector<unsigned>>, int> index_;
};

KBasis kbasis(const Mod& M);

// k-linear action of a ring element on a finite-dimensional module.
QMat action_matrix(const Mod& M, const KBasis& B, const Poly& r);

// Matrix of a hom between finite-dimensional modules (columns indexed
// by the source basis).
QMat hom_matrix(const MHom& f, const KBasis& BS, const KBasis& BD);

struct HomModule {
  Mod H;                      // Hom_B(M, N) as a B-module
  Mod M, N;
  Mod NG;                     // N^{gens(M)}
  MHom incl;                  // H -> N^{gens(M)}
  MHom as_hom(const MElem& h) const;            // element -> module map
  MElem from_hom(const MHom& f) const;          // module map -> element
  MElem eval(const MElem& h, const MElem& m) const;
};

HomModule hom_module(const Mod& M, const Mod& N);

}  // namespace qd

#endif
