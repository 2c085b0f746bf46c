#include "quotdeform/homext.hpp"

#include <random>

namespace qd {

bool is_zero_module(const Mod& M) {
  for (int i = 0; i < M->gens(); ++i)
    if (!generator(M, i).is_zero()) return false;
  return true;
}

bool is_injective(const MHom& f) { return is_zero_module(kernel(f).module); }

bool is_surjective(const MHom& f) {
  return is_zero_module(cokernel(f).module);
}

MHom scalar_hom(const Mod& M, const Poly& r) {
  std::vector<MElem> ims;
  for (int i = 0; i < M->gens(); ++i) ims.push_back(generator(M, i).scaled(r));
  return MHom(M, M, std::move(ims));
}

SES::SES(MHom incl, MHom proj) : incl_(std::move(incl)), proj_(std::move(proj)) {
  if (incl_.dst() != proj_.src())
    throw structural_error("SES: maps do not compose");
  if (!proj_.compose_after(incl_).is_zero_map())
    throw math_error("SES: composite is nonzero");
  if (!is_injective(incl_)) throw math_error("SES: first map not injective");
  if (!is_surjective(proj_)) throw math_error("SES: second map not surjective");
  // ker(proj) is contained in im(incl)
  SubQuot K = kernel(proj_);
  for (const auto& e : K.map.images())
    if (!preimage(incl_, e))
      throw math_error("SES: kernel of the projection exceeds the image");
}

Ext1Class::Ext1Class(Mod M, Mod N, MHom cocycle)
    : M_(std::move(M)), N_(std::move(N)), c_(std::move(cocycle)) {
  if (c_.src() != M_->syz().module || c_.dst() != N_)
    throw structural_error("Ext1Class: cocycle must map Syz(M) -> N");
}

Ext1Class Ext1Class::zero(const Mod& M, const Mod& N) {
  return Ext1Class(M, N, MHom::zero(M->syz().module, N));
}

Ext1Class Ext1Class::operator+(const Ext1Class& o) const {
  if (M_ != o.M_ || N_ != o.N_)
    throw structural_error("Ext1Class: mismatched groups in Baer sum");
  return Ext1Class(M_, N_, c_ + o.c_);
}

Ext1Class Ext1Class::operator-() const { return Ext1Class(M_, N_, -c_); }

Ext1Class baer_sum(const Ext1Class& a, const Ext1Class& b) { return a + b; }

Ext1Class class_of(const SES& s) {
  const Mod& M = s.quot();
  const Mod& N = s.sub();
  const SyzData& syz = M->syz();
  // lift the generators of M through the projection
  std::vector<MElem> lifts;
  for (int j = 0; j < M->gens(); ++j) {
    auto x = preimage(s.proj(), generator(M, j));
    if (!x) throw math_error("class_of: projection not surjective");
    lifts.push_back(std::move(*x));
  }
  std::vector<MElem> ims;
  for (size_t i = 0; i < M->rels().size(); ++i) {
    MElem v = zero_elem(s.mid());
    for (int j = 0; j < M->gens(); ++j)
      v = v + lifts[j].scaled(M->rels()[i][j]);
    auto a = preimage(s.incl(), v);
    if (!a)
      throw math_error("class_of: relation image escapes the subobject");
    ims.push_back(std::move(*a));
  }
  return Ext1Class(M, N, MHom(syz.module, N, std::move(ims)));
}

SES realize(const Ext1Class& c) {
  const Mod& M = c.source();
  const Mod& N = c.target();
  const QRPtr& ring = M->ring();
  const RingPtr& amb = ring->ambient();
  int gN = N->gens(), gM = M->gens();
  std::vector<std::vector<Poly>> rels;
  for (const auto& r : N->rels()) {
    std::vector<Poly> row(gN + gM, Poly(amb));
    for (int i = 0; i < gN; ++i) row[i] = r[i];
    rels.push_back(std::move(row));
  }
  for (size_t i = 0; i < M->rels().size(); ++i) {
    std::vector<Poly> row(gN + gM, Poly(amb));
    const MElem& ci = c.cocycle().images()[i];
    for (int a = 0; a < gN; ++a) row[a] = -ci.coords()[a];
    for (int j = 0; j < gM; ++j) row[gN + j] = M->rels()[i][j];
    rels.push_back(std::move(row));
  }
  Mod X = FPModule::make(ring, gN + gM, std::move(rels));
  std::vector<MElem> inc;
  for (int i = 0; i < gN; ++i) inc.push_back(generator(X, i));
  std::vector<MElem> prj;
  for (int i = 0; i < gN; ++i) prj.push_back(zero_elem(M));
  for (int j = 0; j < gM; ++j) prj.push_back(generator(M, j));
  return SES(MHom(N, X, std::move(inc)), MHom(X, M, std::move(prj)));
}

namespace {

// the map N^g -> N^t carrying psi to (sum_j rel_ij psi_j)_i
struct RestrictionSetup {
  SumData NG, NT;
  MHom phi;
};

RestrictionSetup restriction_setup(const Mod& M, const Mod& N) {
  RestrictionSetup out;
  int gM = std::max(M->gens(), 1);
  int t = std::max((int)M->rels().size(), 1);
  out.NG = direct_sum(std::vector<Mod>((size_t)gM, N));
  out.NT = direct_sum(std::vector<Mod>((size_t)t, N));
  const auto& rows = M->rels();
  std::vector<MElem> ims;
  for (int j = 0; j < gM; ++j)
    for (int a = 0; a < N->gens(); ++a) {
      MElem acc = zero_elem(out.NT.module);
      if (j < M->gens())
        for (size_t i = 0; i < rows.size(); ++i)
          acc = acc + out.NT.incl[i].apply(generator(N, a).scaled(rows[i][j]));
      ims.push_back(std::move(acc));
    }
  out.phi = MHom(out.NG.module, out.NT.module, std::move(ims));
  return out;
}

}  // namespace

std::optional<MHom> extend_cocycle(const Ext1Class& c, bool canonical) {
  const Mod& M = c.source();
  const Mod& N = c.target();
  const SyzData& syz = M->syz();
  if (M->rels().empty()) return MHom::zero(syz.free_cover, N);
  RestrictionSetup rs = restriction_setup(M, N);
  MElem target = zero_elem(rs.NT.module);
  for (size_t i = 0; i < M->rels().size(); ++i)
    target = target + rs.NT.incl[i].apply(c.cocycle().images()[i]);
  auto sol = preimage(rs.phi, target, canonical);
  if (!sol) return std::nullopt;
  std::vector<MElem> psi;
  for (int j = 0; j < M->gens(); ++j)
    psi.push_back(rs.NG.proj[j].apply(*sol));
  return MHom(syz.free_cover, N, std::move(psi));
}

bool is_zero_class(const Ext1Class& c) { return extend_cocycle(c).has_value(); }

std::variant<Splitting, Ext1Class> splitting_test(const SES& s, bool canonical) {
  const Mod& M = s.quot();
  std::vector<MElem> lifts;
  for (int j = 0; j < M->gens(); ++j)
    lifts.push_back(*preimage(s.proj(), generator(M, j)));
  Ext1Class c = class_of(s);
  auto psi = extend_cocycle(c, canonical);
  if (!psi) return c;
  std::vector<MElem> sec;
  for (int j = 0; j < M->gens(); ++j)
    sec.push_back(lifts[j] - s.incl().apply(psi->images()[j]));
  MHom section(M, s.mid(), std::move(sec));
  if (!(s.proj().compose_after(section) == MHom::identity(M)))
    throw math_error("splitting_test: assembled section fails the "
                     "composite-identity check");
  return Splitting{std::move(section)};
}

Ext1Class pushout_class(const Ext1Class& c, const MHom& g) {
  if (g.src() != c.target())
    throw structural_error("pushout_class: map source mismatch");
  return Ext1Class(c.source(), g.dst(), g.compose_after(c.cocycle()));
}

Ext1Class pullback_class(const Ext1Class& c, const MHom& h) {
  if (h.dst() != c.source())
    throw structural_error("pullback_class: map target mismatch");
  SES s = realize(c);
  PullbackData pb = pullback(s.proj(), h);
  // 0 -> N -> P -> M' -> 0, embedding n as (incl n, 0)
  const Mod& sum = pb.incl_sum.dst();
  std::vector<MElem> inc;
  for (int i = 0; i < c.target()->gens(); ++i) {
    std::vector<Poly> flat = s.incl().images()[i].coords();
    flat.resize(sum->gens(), Poly(sum->ring()->ambient()));
    auto p = preimage(pb.incl_sum, MElem(sum, std::move(flat)));
    if (!p) throw math_error("pullback_class: failed to embed the subobject");
    inc.push_back(std::move(*p));
  }
  MHom incl(c.target(), pb.module, std::move(inc));
  SES pulled(incl, pb.to_right);
  return class_of(pulled);
}

PushoutData pushout(const MHom& i, const MHom& u) {
  if (i.src() != u.src()) throw structural_error("pushout: sources differ");
  const Mod& S = i.src();
  const Mod& L = i.dst();
  const Mod& K = u.dst();
  SumData sum = direct_sum({K, L});
  std::vector<std::vector<Poly>> rels = sum.module->rels();
  for (int s = 0; s < S->gens(); ++s) {
    MElem row = sum.incl[0].apply(u.images()[s]) -
                sum.incl[1].apply(i.images()[s]);
    rels.push_back(row.coords());
  }
  Mod M = FPModule::make(S->ring(), sum.module->gens(), std::move(rels));
  std::vector<MElem> fromK, fromL;
  int gK = K->gens(), gL = L->gens();
  for (int a = 0; a < gK; ++a) fromK.push_back(generator(M, a));
  for (int b = 0; b < gL; ++b) fromL.push_back(generator(M, gK + b));
  PushoutData out;
  out.module = M;
  out.from_right = MHom(K, M, std::move(fromK));
  out.from_left = MHom(L, M, std::move(fromL));
  return out;
}

PullbackData pullback(const MHom& p, const MHom& q) {
  if (p.dst() != q.dst()) throw structural_error("pullback: targets differ");
  const Mod& E = p.src();
  const Mod& X = q.src();
  SumData sum = direct_sum({E, X});
  std::vector<MElem> ims;
  for (int a = 0; a < E->gens(); ++a) ims.push_back(p.images()[a]);
  for (int b = 0; b < X->gens(); ++b) ims.push_back(-q.images()[b]);
  MHom diff(sum.module, p.dst(), std::move(ims));
  SubQuot ker = kernel(diff);
  PullbackData out;
  out.module = ker.module;
  out.to_left = sum.proj[0].compose_after(ker.map);
  out.to_right = sum.proj[1].compose_after(ker.map);
  out.incl_sum = ker.map;
  return out;
}

namespace {

Poly random_small_poly(const QRPtr& ring, std::mt19937_64& rng) {
  const RingPtr& amb = ring->ambient();
  std::uniform_int_distribution<int> coef(-2, 2);
  Poly r = Poly::constant(amb, coef(rng));
  for (int v = 0; v < amb->nvars(); ++v)
    if (coef(rng) > 0)
      r += Poly::variable(amb, v).scaled(Fq(amb->field(), coef(rng)));
  return ring->nf(r);
}

}  // namespace

void check_pushout_universal(const PushoutData& d, const MHom& i,
                             const MHom& u, unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  const Mod& M = d.module;
  for (int t = 0; t < trials; ++t) {
    // cocone through M: scale the canonical legs by a random ring element
    Poly r = random_small_poly(M->ring(), rng);
    MHom mult = scalar_hom(M, r);
    MHom a = mult.compose_after(d.from_left);   // L -> M
    MHom b = mult.compose_after(d.from_right);  // K -> M
    if (!(a.compose_after(i) == b.compose_after(u)))
      throw math_error("pushout: test cocone does not commute");
    std::vector<MElem> ims;
    for (const auto& e : b.images()) ims.push_back(e);
    for (const auto& e : a.images()) ims.push_back(e);
    MHom mediating(M, M, std::move(ims));
    if (!(mediating == mult))
      throw math_error("pushout: mediating map is not unique");
  }
}

void check_pullback_universal(const PullbackData& d, const MHom& p,
                              const MHom& q, unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  const Mod& P = d.module;
  for (int t = 0; t < trials; ++t) {
    Poly r = random_small_poly(P->ring(), rng);
    MHom mult = scalar_hom(P, r);
    MHom a = d.to_left.compose_after(mult);   // P -> E
    MHom b = d.to_right.compose_after(mult);  // P -> X
    if (!(p.compose_after(a) == q.compose_after(b)))
      throw math_error("pullback: test cone does not commute");
    for (int j = 0; j < P->gens(); ++j) {
      MElem expect = mult.apply(generator(P, j));
      if (!(d.to_left.apply(expect) == a.images()[j] &&
            d.to_right.apply(expect) == b.images()[j]))
        throw math_error("pullback: mediating map fails on a generator");
    }
  }
}

int Ext1Group::dim() const {
  if (!kb.finite)
    throw math_error("ext1: group is not finite-dimensional over k");
  return kb.dim();
}

std::vector<Ext1Class> Ext1Group::cocycle_basis() const {
  std::vector<Ext1Class> out;
  const Field& k = M->ring()->field();
  for (int i = 0; i < dim(); ++i) {
    std::vector<Fq> unit(kb.dim(), Fq(k, 0));
    unit[i] = Fq(k, 1);
    // lift from the cokernel to Hom(Syz M, N): the presentations share
    // generators, so coordinates transfer directly
    MElem e = kb.element(ext, unit);
    MElem h(hom_syz.H, e.coords());
    out.push_back(Ext1Class(M, N, hom_syz.as_hom(h)));
  }
  return out;
}

std::vector<Fq> Ext1Group::coordinates(const Ext1Class& c) const {
  if (!kb.finite)
    throw math_error("ext1: group is not finite-dimensional over k");
  MElem h = hom_syz.from_hom(c.cocycle());
  return kb.coords(onto.apply(h));
}

Ext1Group ext1(const Mod& M, const Mod& N) {
  Ext1Group out;
  out.M = M;
  out.N = N;
  out.hom_syz = hom_module(M->syz().module, N);
  int gM = std::max(M->gens(), 1);
  SumData NG = direct_sum(std::vector<Mod>((size_t)gM, N));
  std::vector<MElem> ims;
  for (int j = 0; j < gM; ++j)
    for (int a = 0; a < N->gens(); ++a) {
      // the hom B^g -> N picking gen_a in slot j, restricted to Syz(M):
      // r_i |-> r_ij * gen_a
      std::vector<MElem> cims;
      for (size_t i = 0; i < M->rels().size(); ++i) {
        Poly rij =
            j < M->gens() ? M->rels()[i][j] : Poly(M->ring()->ambient());
        cims.push_back(generator(N, a).scaled(rij));
      }
      MHom restricted(M->syz().module, N, std::move(cims));
      ims.push_back(out.hom_syz.from_hom(restricted));
    }
  out.restriction = MHom(NG.module, out.hom_syz.H, std::move(ims));
  SubQuot ck = cokernel(out.restriction);
  out.ext = ck.module;
  out.onto = ck.map;
  out.kb = kbasis(out.ext);
  return out;
}

}  // namespace qd
