#include "quotdeform/fpmod.hpp"

#include <algorithm>
#include <sstream>

namespace qd {

namespace {

FreeVec coords_to_vec(const RingPtr& amb, int ncomp,
                      const std::vector<Poly>& coords) {
  std::vector<VTerm> ts;
  for (size_t i = 0; i < coords.size(); ++i)
    for (const auto& t : coords[i].terms()) ts.push_back({(int)i, t.m, t.c});
  return FreeVec(amb, ncomp, std::move(ts));
}

// relation generators of the ambient-level submodule presenting M:
// the relation rows followed by J * e_i
std::vector<FreeVec> relation_vectors(const QRPtr& ring, int gens,
                                      const std::vector<std::vector<Poly>>& rows) {
  std::vector<FreeVec> vs;
  const RingPtr& amb = ring->ambient();
  for (const auto& r : rows) vs.push_back(coords_to_vec(amb, gens, r));
  for (int i = 0; i < gens; ++i)
    for (const auto& g : ring->ideal().basis()) {
      std::vector<VTerm> ts;
      for (const auto& t : g.terms()) ts.push_back({i, t.m, t.c});
      vs.push_back(FreeVec(amb, gens, std::move(ts)));
    }
  return vs;
}

}  // namespace

Mod FPModule::make(QRPtr ring, int gens, std::vector<std::vector<Poly>> rels) {
  for (auto& row : rels) {
    if ((int)row.size() != gens)
      throw structural_error("FPModule: relation row of wrong length");
    for (auto& e : row) {
      if (e.ring() != ring->ambient())
        throw structural_error("FPModule: relation entry from wrong ring");
      e = ring->nf(e);
    }
  }
  // drop zero rows (deterministically) to keep presentations tidy
  std::vector<std::vector<Poly>> kept;
  for (auto& row : rels) {
    bool z = true;
    for (const auto& e : row)
      if (!e.is_zero()) z = false;
    if (!z) kept.push_back(row);
  }
  GB gb = buchberger(ring->ambient(), gens, relation_vectors(ring, gens, kept));
  return std::make_shared<const FPModule>(std::move(ring), gens,
                                          std::move(kept), std::move(gb));
}

Mod FPModule::free(QRPtr ring, int rank) {
  return make(std::move(ring), rank, {});
}

std::vector<Poly> FPModule::reduce(const std::vector<Poly>& coords) const {
  if ((int)coords.size() != gens_)
    throw structural_error("FPModule::reduce: wrong coordinate count");
  FreeVec v = coords_to_vec(ring_->ambient(), gens_, coords);
  std::vector<Poly> out = full_gb_.nf(v).coords();
  out.resize(gens_, Poly(ring_->ambient()));
  return out;
}

MElem::MElem(Mod M, std::vector<Poly> coords) : M_(std::move(M)) {
  c_ = M_->reduce(coords);
}

bool MElem::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

MElem MElem::operator+(const MElem& o) const {
  if (M_ != o.M_) throw structural_error("MElem: mixed parents");
  std::vector<Poly> c;
  for (size_t i = 0; i < c_.size(); ++i) c.push_back(c_[i] + o.c_[i]);
  return MElem(M_, std::move(c));
}

MElem MElem::operator-(const MElem& o) const { return *this + (-o); }

MElem MElem::operator-() const {
  std::vector<Poly> c;
  for (const auto& p : c_) c.push_back(-p);
  MElem r;
  r.M_ = M_;
  r.c_ = std::move(c);  // negation of a normal form is a normal form
  return r;
}

MElem MElem::scaled(const Poly& r) const {
  std::vector<Poly> c;
  for (const auto& p : c_) c.push_back(p * r);
  return MElem(M_, std::move(c));
}

MElem MElem::scaled(const Fq& s) const {
  std::vector<Poly> c;
  for (const auto& p : c_) c.push_back(p.scaled(s));
  return MElem(M_, std::move(c));
}

bool MElem::operator==(const MElem& o) const {
  if (M_ != o.M_) throw structural_error("MElem: mixed parents");
  return c_ == o.c_;
}

MElem generator(const Mod& M, int i) {
  std::vector<Poly> c(M->gens(), Poly(M->ring()->ambient()));
  c[i] = Poly::constant(M->ring()->ambient(), 1);
  return MElem(M, std::move(c));
}

MElem zero_elem(const Mod& M) {
  return MElem(M, std::vector<Poly>(M->gens(), Poly(M->ring()->ambient())));
}

MHom::MHom(Mod src, Mod dst, std::vector<MElem> images)
    : src_(std::move(src)), dst_(std::move(dst)), im_(std::move(images)) {
  if ((int)im_.size() != src_->gens())
    throw structural_error("MHom: one image per source generator required");
  for (const auto& e : im_)
    if (e.parent() != dst_) throw structural_error("MHom: image not in target");
  if (src_->ring() != dst_->ring())
    throw structural_error("MHom: source and target over different rings");
  const auto& rows = src_->rels();
  for (size_t i = 0; i < rows.size(); ++i) {
    MElem acc = zero_elem(dst_);
    for (int j = 0; j < src_->gens(); ++j)
      acc = acc + im_[j].scaled(rows[i][j]);
    if (!acc.is_zero()) {
      std::ostringstream os;
      os << "MHom: not well-defined, source relation #" << i << " (";
      for (int j = 0; j < src_->gens(); ++j)
        os << (j ? ", " : "") << rows[i][j].str();
      os << ") maps to a nonzero element";
      throw math_error(os.str());
    }
  }
}

MHom::MHom(Mod src, Mod dst, const std::vector<std::vector<Poly>>& matrix) {
  if ((int)matrix.size() != src->gens())
    throw structural_error("MHom: matrix row count != source generators");
  std::vector<MElem> ims;
  for (const auto& row : matrix) ims.push_back(MElem(dst, row));
  *this = MHom(std::move(src), std::move(dst), std::move(ims));
}

MHom MHom::identity(const Mod& M) {
  std::vector<MElem> ims;
  for (int i = 0; i < M->gens(); ++i) ims.push_back(generator(M, i));
  return MHom(M, M, std::move(ims));
}

MHom MHom::zero(const Mod& src, const Mod& dst) {
  std::vector<MElem> ims(src->gens(), zero_elem(dst));
  return MHom(src, dst, std::move(ims));
}

MElem MHom::apply(const MElem& x) const {
  if (x.parent() != src_) throw structural_error("MHom::apply: wrong parent");
  MElem acc = zero_elem(dst_);
  for (int j = 0; j < src_->gens(); ++j)
    acc = acc + im_[j].scaled(x.coords()[j]);
  return acc;
}

MHom MHom::compose_after(const MHom& inner) const {
  if (inner.dst_ != src_)
    throw structural_error("MHom::compose_after: shape mismatch");
  std::vector<MElem> ims;
  for (const auto& e : inner.im_) ims.push_back(apply(e));
  return MHom(inner.src_, dst_, std::move(ims));
}

MHom MHom::operator+(const MHom& o) const {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw structural_error("MHom: mixed parents in sum");
  std::vector<MElem> ims;
  for (size_t i = 0; i < im_.size(); ++i) ims.push_back(im_[i] + o.im_[i]);
  return MHom(src_, dst_, std::move(ims));
}

MHom MHom::operator-(const MHom& o) const { return *this + (-o); }

MHom MHom::operator-() const {
  std::vector<MElem> ims;
  for (const auto& e : im_) ims.push_back(-e);
  return MHom(src_, dst_, std::move(ims));
}

MHom MHom::scaled(const Fq& c) const {
  std::vector<MElem> ims;
  for (const auto& e : im_) ims.push_back(e.scaled(c));
  return MHom(src_, dst_, std::move(ims));
}

bool MHom::operator==(const MHom& o) const {
  if (src_ != o.src_ || dst_ != o.dst_) return false;
  for (size_t i = 0; i < im_.size(); ++i)
    if (!(im_[i] == o.im_[i])) return false;
  return true;
}

bool MHom::is_zero_map() const {
  for (const auto& e : im_)
    if (!e.is_zero()) return false;
  return true;
}

namespace {

// shared machinery: ambient syzygies of the elements within N,
// restricted to the element coefficients
std::vector<std::vector<Poly>> syzygies_in_module(
    const std::vector<MElem>& elems, const Mod& N) {
  const QRPtr& ring = N->ring();
  const RingPtr& amb = ring->ambient();
  std::vector<FreeVec> cols;
  for (const auto& e : elems)
    cols.push_back(coords_to_vec(amb, N->gens(), e.coords()));
  size_t m = cols.size();
  for (const auto& rv : relation_vectors(ring, N->gens(), N->rels()))
    cols.push_back(rv);
  auto syz = syzygies(amb, N->gens(), cols);
  std::vector<std::vector<Poly>> out;
  for (auto& s : syz) {
    std::vector<Poly> prefix(s.begin(), s.begin() + m);
    bool z = true;
    for (auto& p : prefix) {
      p = ring->nf(p);
      if (!p.is_zero()) z = false;
    }
    if (!z) out.push_back(std::move(prefix));
  }
  return out;
}

}  // namespace

SubQuot submodule(const Mod& N, const std::vector<MElem>& elems) {
  for (const auto& e : elems)
    if (e.parent() != N) throw structural_error("submodule: wrong parent");
  auto rels = syzygies_in_module(elems, N);
  Mod S = FPModule::make(N->ring(), (int)elems.size(), std::move(rels));
  std::vector<MElem> ims = elems;
  return {S, MHom(S, N, std::move(ims))};
}

SubQuot kernel(const MHom& f) {
  const Mod& S = f.src();
  const Mod& D = f.dst();
  const QRPtr& ring = S->ring();
  const RingPtr& amb = ring->ambient();
  std::vector<FreeVec> cols;
  for (int j = 0; j < S->gens(); ++j)
    cols.push_back(coords_to_vec(amb, D->gens(), f.images()[j].coords()));
  for (const auto& rv : relation_vectors(ring, D->gens(), D->rels()))
    cols.push_back(rv);
  auto syz = syzygies(amb, D->gens(), cols);
  std::vector<MElem> kgens;
  for (auto& s : syz) {
    std::vector<Poly> prefix(s.begin(), s.begin() + S->gens());
    MElem e(S, std::move(prefix));
    if (!e.is_zero()) kgens.push_back(std::move(e));
  }
  return submodule(S, kgens);
}

ImageData image(const MHom& f) {
  std::vector<MElem> kept;
  std::vector<int> pos(f.src()->gens(), -1);
  for (int j = 0; j < f.src()->gens(); ++j) {
    if (f.images()[j].is_zero()) continue;
    pos[j] = (int)kept.size();
    kept.push_back(f.images()[j]);
  }
  SubQuot sq = submodule(f.dst(), kept);
  std::vector<MElem> onto;
  for (int j = 0; j < f.src()->gens(); ++j)
    onto.push_back(pos[j] < 0 ? zero_elem(sq.module)
                              : generator(sq.module, pos[j]));
  return {sq.module, sq.map, MHom(f.src(), sq.module, std::move(onto))};
}

SubQuot cokernel(const MHom& f) {
  const Mod& D = f.dst();
  std::vector<std::vector<Poly>> rels = D->rels();
  for (const auto& e : f.images()) rels.push_back(e.coords());
  Mod C = FPModule::make(D->ring(), D->gens(), std::move(rels));
  std::vector<MElem> ims;
  for (int i = 0; i < D->gens(); ++i) ims.push_back(generator(C, i));
  return {C, MHom(D, C, std::move(ims))};
}

std::optional<std::vector<Poly>> express(const std::vector<MElem>& elems,
                                         const MElem& target, bool canonical) {
  const Mod& N = target.parent();
  const QRPtr& ring = N->ring();
  const RingPtr& amb = ring->ambient();
  for (const auto& e : elems)
    if (e.parent() != N) throw structural_error("express: wrong parent");
  std::vector<FreeVec> cols;
  for (const auto& e : elems)
    cols.push_back(coords_to_vec(amb, N->gens(), e.coords()));
  size_t m = cols.size();
  for (const auto& rv : relation_vectors(ring, N->gens(), N->rels()))
    cols.push_back(rv);
  GB gb = buchberger(amb, N->gens(), cols, /*track=*/true);
  std::vector<Poly> cof;
  FreeVec r = gb.nf(coords_to_vec(amb, N->gens(), target.coords()), &cof);
  if (!r.is_zero()) return std::nullopt;
  std::vector<Poly> coeffs(cof.begin(), cof.begin() + m);
  for (auto& c : coeffs) c = ring->nf(c);
  if (canonical && m > 0) {
    // normalize against the syzygies of the elements
    auto syz = syzygies_in_module(elems, N);
    Mod freem = FPModule::make(ring, (int)m, syz);
    coeffs = freem->reduce(coeffs);
  }
  return coeffs;
}

std::optional<MElem> preimage(const MHom& f, const MElem& y, bool canonical) {
  if (y.parent() != f.dst()) throw structural_error("preimage: wrong parent");
  auto c = express(f.images(), y, canonical);
  if (!c) return std::nullopt;
  return MElem(f.src(), std::move(*c));
}

std::optional<MHom> factor_through(const MHom& f, const MHom& g) {
  if (f.dst() != g.dst())
    throw structural_error("factor_through: targets differ");
  std::vector<MElem> ims;
  for (int j = 0; j < g.src()->gens(); ++j) {
    auto p = preimage(f, g.images()[j]);
    if (!p) return std::nullopt;
    ims.push_back(std::move(*p));
  }
  return MHom(g.src(), f.src(), std::move(ims));
}

MElem TensorData::pure(const MElem& x, const MElem& y) const {
  const RingPtr& amb = module->ring()->ambient();
  std::vector<Poly> c(module->gens(), Poly(amb));
  int gN = gn;
  for (int i = 0; i < (int)x.coords().size(); ++i)
    for (int j = 0; j < gN; ++j) c[i * gN + j] += x.coords()[i] * y.coords()[j];
  return MElem(module, std::move(c));
}

TensorData tensor(const Mod& M, const Mod& N) {
  if (M->ring() != N->ring())
    throw structural_error("tensor: modules over different rings");
  const RingPtr& amb = M->ring()->ambient();
  int gM = M->gens(), gN = N->gens();
  std::vector<std::vector<Poly>> rels;
  for (const auto& r : M->rels())
    for (int j = 0; j < gN; ++j) {
      std::vector<Poly> row(gM * gN, Poly(amb));
      for (int i = 0; i < gM; ++i) row[i * gN + j] = r[i];
      rels.push_back(std::move(row));
    }
  for (const auto& s : N->rels())
    for (int i = 0; i < gM; ++i) {
      std::vector<Poly> row(gM * gN, Poly(amb));
      for (int j = 0; j < gN; ++j) row[i * gN + j] = s[j];
      rels.push_back(std::move(row));
    }
  TensorData t;
  t.module = FPModule::make(M->ring(), gM * gN, std::move(rels));
  t.gn = gN;
  return t;
}

MHom tensor_hom(const TensorData& srcT, const TensorData& dstT, const MHom& f,
                const MHom& g) {
  int gN = srcT.gn;
  int gM = srcT.module->gens() / std::max(gN, 1);
  std::vector<MElem> ims;
  for (int i = 0; i < gM; ++i)
    for (int j = 0; j < gN; ++j)
      ims.push_back(dstT.pure(f.images()[i], g.images()[j]));
  return MHom(srcT.module, dstT.module, std::move(ims));
}

SumData direct_sum(const std::vector<Mod>& parts) {
  if (parts.empty()) throw structural_error("direct_sum: no parts");
  const QRPtr& ring = parts[0]->ring();
  const RingPtr& amb = ring->ambient();
  int total = 0;
  for (const auto& p : parts) {
    if (p->ring() != ring)
      throw structural_error("direct_sum: mixed rings");
    total += p->gens();
  }
  std::vector<std::vector<Poly>> rels;
  int off = 0;
  for (const auto& p : parts) {
    for (const auto& r : p->rels()) {
      std::vector<Poly> row(total, Poly(amb));
      for (int i = 0; i < p->gens(); ++i) row[off + i] = r[i];
      rels.push_back(std::move(row));
    }
    off += p->gens();
  }
  SumData out;
  out.module = FPModule::make(ring, total, std::move(rels));
  off = 0;
  for (const auto& p : parts) {
    std::vector<MElem> inc;
    for (int i = 0; i < p->gens(); ++i)
      inc.push_back(generator(out.module, off + i));
    out.incl.push_back(MHom(p, out.module, std::move(inc)));
    std::vector<MElem> prj;
    for (int i = 0; i < total; ++i)
      prj.push_back(i >= off && i < off + p->gens()
                        ? generator(p, i - off)
                        : zero_elem(p));
    out.proj.push_back(MHom(out.module, p, std::move(prj)));
    off += p->gens();
  }
  return out;
}

Mod base_change(const Mod& M, const RingMap& f) {
  if (M->ring() != f.src())
    throw structural_error("base_change: module not over the map's source");
  std::vector<std::vector<Poly>> rels;
  for (const auto& r : M->rels()) {
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(f.apply(e));
    rels.push_back(std::move(row));
  }
  return FPModule::make(f.dst(), M->gens(), std::move(rels));
}

MHom base_change_hom(const MHom& h, const RingMap& f, const Mod& src_bc,
                     const Mod& dst_bc) {
  std::vector<std::vector<Poly>> matrix;
  for (const auto& e : h.images()) {
    std::vector<Poly> row;
    for (const auto& p : e.coords()) row.push_back(f.apply(p));
    matrix.push_back(std::move(row));
  }
  return MHom(src_bc, dst_bc, matrix);
}

Mod restrict_scalars(const Mod& M, const QRPtr& big) {
  if (big->ambient() != M->ring()->ambient())
    throw structural_error("restrict_scalars: different ambient rings");
  std::vector<std::vector<Poly>> rels = M->rels();
  const RingPtr& amb = big->ambient();
  for (int i = 0; i < M->gens(); ++i)
    for (const auto& g : M->ring()->ideal().basis()) {
      std::vector<Poly> row(M->gens(), Poly(amb));
      row[i] = g;
      rels.push_back(std::move(row));
    }
  return FPModule::make(big, M->gens(), std::move(rels));
}

Mod corestrict_scalars(const Mod& M, const QRPtr& small) {
  if (small->ambient() != M->ring()->ambient())
    throw structural_error("corestrict_scalars: different ambient rings");
  // the target's extra relations must already kill the module
  for (const auto& g : small->ideal().basis()) {
    for (int i = 0; i < M->gens(); ++i) {
      MElem e = generator(M, i).scaled(g);
      if (!e.is_zero())
        throw math_error("corestrict_scalars: module is not annihilated by "
                         "the kernel of the quotient (" + g.str() +
                         " acts nontrivially)");
    }
  }
  return FPModule::make(small, M->gens(), M->rels());
}

MElem transport(const MElem& x, const Mod& target) {
  if (target->gens() != (int)x.coords().size())
    throw structural_error("transport: generator count mismatch");
  return MElem(target, x.coords());
}

MHom transport_hom(const MHom& f, const Mod& new_src, const Mod& new_dst) {
  std::vector<MElem> ims;
  for (const auto& e : f.images()) ims.push_back(transport(e, new_dst));
  return MHom(new_src, new_dst, std::move(ims));
}

const SyzData& FPModule::syz() const {
  std::call_once(syz_once_, [this] {
    syz_cache_ = std::make_shared<const SyzData>(syzygy_module(shared_from_this()));
  });
  return *syz_cache_;
}

SyzData syzygy_module(const Mod& M) {
  SyzData out;
  out.free_cover = FPModule::free(M->ring(), M->gens());
  std::vector<MElem> rows;
  for (const auto& r : M->rels()) rows.push_back(MElem(out.free_cover, r));
  SubQuot sq = submodule(out.free_cover, rows);
  out.module = sq.module;
  out.incl_free = sq.map;
  out.in_free = rows;
  std::vector<MElem> aug;
  for (int i = 0; i < M->gens(); ++i) aug.push_back(generator(M, i));
  out.free_to_M = MHom(out.free_cover, M, std::move(aug));
  return out;
}

ResolutionFragment resolution_fragment(const Mod& M) {
  ResolutionFragment out;
  out.M = M;
  const QRPtr& ring = M->ring();
  out.F0 = FPModule::free(ring, M->gens());
  int t = (int)M->rels().size();
  out.F1 = FPModule::free(ring, t);
  std::vector<MElem> d1;
  for (const auto& r : M->rels()) d1.push_back(MElem(out.F0, r));
  out.d1 = MHom(out.F1, out.F0, std::move(d1));
  // relations among the relations
  std::vector<MElem> rows;
  for (const auto& r : M->rels()) rows.push_back(MElem(out.F0, r));
  auto syz2 = syzygies_in_module(rows, out.F0);
  out.F2 = FPModule::free(ring, (int)syz2.size());
  std::vector<MElem> d2;
  for (const auto& s : syz2) d2.push_back(MElem(out.F1, s));
  out.d2 = MHom(out.F2, out.F1, std::move(d2));
  std::vector<MElem> aug;
  for (int i = 0; i < M->gens(); ++i) aug.push_back(generator(M, i));
  out.aug = MHom(out.F0, M, std::move(aug));
  return out;
}

int KBasis::index_of(int comp, const Monomial& m) const {
  auto it = index_.find({comp, m.exps()});
  return it == index_.end() ? -1 : it->second;
}

std::vector<Fq> KBasis::coords(const MElem& x) const {
  const Field& k = x.parent()->ring()->field();
  std::vector<Fq> v(mons.size(), Fq(k, 0));
  for (int i = 0; i < (int)x.coords().size(); ++i)
    for (const auto& t : x.coords()[i].terms()) {
      int idx = index_of(i, t.m);
      if (idx < 0)
        throw structural_error("KBasis::coords: non-standard term survived "
                               "normal form");
      v[idx] = t.c;
    }
  return v;
}

MElem KBasis::element(const Mod& M, const std::vector<Fq>& v) const {
  const RingPtr& amb = M->ring()->ambient();
  std::vector<Poly> c(M->gens(), Poly(amb));
  for (size_t i = 0; i < mons.size(); ++i) {
    if (v[i].is_zero()) continue;
    c[mons[i].first] += Poly::monomial(amb, mons[i].second, v[i]);
  }
  return MElem(M, std::move(c));
}

namespace {

void gen_monomials(int nvars, int deg, std::vector<unsigned>& cur, int pos,
                   std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[pos] = deg;
    out.push_back(Monomial(cur));
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[pos] = e;
    gen_monomials(nvars, deg - e, cur, pos + 1, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg) {
  if (nvars == 0)
    return deg == 0 ? std::vector<Monomial>{Monomial::one(0)}
                    : std::vector<Monomial>{};
  std::vector<Monomial> out;
  std::vector<unsigned> cur(nvars, 0);
  gen_monomials(nvars, deg, cur, 0, out);
  return out;
}

}  // namespace

KBasis kbasis(const Mod& M) {
  KBasis out;
  const int g = M->gens();
  const int n = M->ring()->nvars();
  std::vector<std::vector<Monomial>> lts(g);
  for (const auto& b : M->full_gb().basis)
    lts[b.leading().comp].push_back(b.leading().m);

  // finite iff every component's staircase is bounded in every variable
  for (int c = 0; c < g; ++c) {
    for (int v = 0; v < n; ++v) {
      bool bounded = false;
      for (const auto& m : lts[c]) {
        bool pure = m.exp(v) > 0 || m.is_one();
        for (int w = 0; w < n && pure; ++w)
          if (w != v && m.exp(w) > 0) pure = false;
        if (pure) {
          bounded = true;
          break;
        }
      }
      if (!bounded) {
        out.finite = false;
        return out;
      }
    }
  }
  out.finite = true;

  for (int deg = 0;; ++deg) {
    bool any = false;
    auto mons = monomials_of_degree(n, deg);
    for (int c = 0; c < g; ++c)
      for (const auto& m : mons) {
        bool reducible = false;
        for (const auto& lt : lts[c])
          if (lt.divides(m)) {
            reducible = true;
            break;
          }
        if (!reducible) {
          out.index_[{c, m.exps()}] = (int)out.mons.size();
          out.mons.push_back({c, m});
          any = true;
        }
      }
    if (!any) break;
  }
  return out;
}

QMat action_matrix(const Mod& M, const KBasis& B, const Poly& r) {
  const Field& k = M->ring()->field();
  QMat a(k, B.dim(), B.dim());
  for (int j = 0; j < B.dim(); ++j) {
    std::vector<Fq> unit(B.dim(), Fq(k, 0));
    unit[j] = Fq(k, 1);
    MElem x = B.element(M, unit).scaled(r);
    std::vector<Fq> col = B.coords(x);
    for (int i = 0; i < B.dim(); ++i) a.at(i, j) = col[i];
  }
  return a;
}

QMat hom_matrix(const MHom& f, const KBasis& BS, const KBasis& BD) {
  const Field& k = f.src()->ring()->field();
  QMat a(k, BD.dim(), BS.dim());
  for (int j = 0; j < BS.dim(); ++j) {
    std::vector<Fq> unit(BS.dim(), Fq(k, 0));
    unit[j] = Fq(k, 1);
    std::vector<Fq> col = BD.coords(f.apply(BS.element(f.src(), unit)));
    for (int i = 0; i < BD.dim(); ++i) a.at(i, j) = col[i];
  }
  return a;
}

MHom HomModule::as_hom(const MElem& h) const {
  if (h.parent() != H) throw structural_error("HomModule::as_hom: wrong parent");
  MElem flat = incl.apply(h);
  int gM = M->gens(), gN = N->gens();
  std::vector<MElem> ims;
  for (int j = 0; j < gM; ++j) {
    std::vector<Poly> c(flat.coords().begin() + j * gN,
                        flat.coords().begin() + (j + 1) * gN);
    ims.push_back(MElem(N, std::move(c)));
  }
  return MHom(M, N, std::move(ims));
}

MElem HomModule::from_hom(const MHom& f) const {
  if (f.src() != M || f.dst() != N)
    throw structural_error("HomModule::from_hom: wrong hom shape");
  int gN = N->gens();
  std::vector<Poly> flat(M->gens() * gN, Poly(N->ring()->ambient()));
  for (int j = 0; j < M->gens(); ++j)
    for (int i = 0; i < gN; ++i) flat[j * gN + i] = f.images()[j].coords()[i];
  auto p = preimage(incl, MElem(NG, std::move(flat)));
  if (!p)
    throw math_error("HomModule::from_hom: map does not satisfy the "
                     "relations (not an element of Hom)");
  return *p;
}

MElem HomModule::eval(const MElem& h, const MElem& m) const {
  return as_hom(h).apply(m);
}

HomModule hom_module(const Mod& M, const Mod& N) {
  if (M->ring() != N->ring())
    throw structural_error("hom_module: modules over different rings");
  HomModule out;
  out.M = M;
  out.N = N;
  int gM = M->gens();
  SumData NG = direct_sum(std::vector<Mod>(std::max(gM, 1), N));
  if (gM == 0) {
    out.NG = FPModule::zero(N->ring());
    out.H = out.NG;
    out.incl = MHom::identity(out.H);
    return out;
  }
  out.NG = NG.module;
  // psi = (psi_1..psi_gM) must kill every relation row of M
  const auto& rows = M->rels();
  int t = (int)rows.size();
  if (t == 0) {
    out.H = out.NG;
    out.incl = MHom::identity(out.NG);
    return out;
  }
  SumData NT = direct_sum(std::vector<Mod>(t, N));
  std::vector<MElem> phi_ims;
  for (int j = 0; j < gM; ++j)
    for (int a = 0; a < N->gens(); ++a) {
      MElem acc = zero_elem(NT.module);
      for (int i = 0; i < t; ++i)
        acc = acc + NT.incl[i].apply(generator(N, a).scaled(rows[i][j]));
      phi_ims.push_back(std::move(acc));
    }
  MHom phi(out.NG, NT.module, std::move(phi_ims));
  SubQuot ker = kernel(phi);
  out.H = ker.module;
  out.incl = ker.map;
  return out;
}

}  // namespace qd
