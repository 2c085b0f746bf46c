#include "quotdeform/kahler.hpp"

namespace qd {

MElem KahlerModule::d(const Poly& f) const {
  const RingPtr& amb = B->ambient();
  Poly rep = B->nf(f);
  std::vector<Poly> coords(amb->nvars(), Poly(amb));
  for (int v = 0; v < amb->nvars(); ++v) coords[v] = rep.derivative(v);
  return MElem(omega, std::move(coords));
}

KahlerModule kahler(const QRPtr& B) {
  const RingPtr& amb = B->ambient();
  int n = amb->nvars();
  std::vector<std::vector<Poly>> rels;
  for (const auto& g : B->ideal().basis()) {
    std::vector<Poly> row;
    for (int v = 0; v < n; ++v) row.push_back(g.derivative(v));
    rels.push_back(std::move(row));
  }
  KahlerModule out;
  out.B = B;
  out.omega = FPModule::make(B, n, std::move(rels));
  return out;
}

KahlerModule kahler_relative(const RingMap& f) {
  const QRPtr& C = f.dst();
  const RingPtr& amb = C->ambient();
  int n = amb->nvars();
  std::vector<std::vector<Poly>> rels;
  for (const auto& g : C->ideal().basis()) {
    std::vector<Poly> row;
    for (int v = 0; v < n; ++v) row.push_back(g.derivative(v));
    rels.push_back(std::move(row));
  }
  std::vector<Poly> killed;
  for (const auto& im : f.var_images()) {
    std::vector<Poly> row;
    for (int v = 0; v < n; ++v) row.push_back(im.derivative(v));
    rels.push_back(row);
    killed.push_back(im);
  }
  KahlerModule out;
  out.B = C;
  out.omega = FPModule::make(C, n, std::move(rels));
  out.killed = std::move(killed);
  return out;
}

MElem PrincipalParts::s(const MElem& e) const {
  if (e.parent() != E) throw structural_error("PrincipalParts::s: wrong parent");
  const RingPtr& amb = E->ring()->ambient();
  int n = amb->nvars(), gE = E->gens();
  std::vector<Poly> coords(P1->gens(), Poly(amb));
  for (int j = 0; j < gE; ++j) {
    const Poly& cj = e.coords()[j];
    coords[p_index(j)] = cj;
    for (int i = 0; i < n; ++i) coords[w_index(i, j)] = cj.derivative(i);
  }
  return MElem(P1, std::move(coords));
}

PrincipalParts principal_parts(const RingMap& f, const Mod& E,
                               const std::optional<Mod>& M) {
  if (E->ring() != f.dst())
    throw structural_error("principal_parts: module not over the target ring");
  PrincipalParts out;
  out.f = f;
  out.E = E;
  out.omega = kahler_relative(f);
  out.omegaE = tensor(out.omega.omega, E);

  const QRPtr& C = f.dst();
  const RingPtr& amb = C->ambient();
  int n = amb->nvars(), gE = E->gens();
  int total = gE + n * gE;
  auto widx = [&](int i, int j) { return gE + i * gE + j; };

  std::vector<std::vector<Poly>> rels;
  // right-multiplied images of the module relations (Taylor expansion
  // through the square-zero diagonal)
  for (const auto& r : E->rels()) {
    std::vector<Poly> row(total, Poly(amb));
    for (int j = 0; j < gE; ++j) {
      row[j] = r[j];
      for (int i = 0; i < n; ++i) row[widx(i, j)] = r[j].derivative(i);
    }
    rels.push_back(std::move(row));
    // dx_i times the relation
    for (int i = 0; i < n; ++i) {
      std::vector<Poly> wrow(total, Poly(amb));
      for (int j = 0; j < gE; ++j) wrow[widx(i, j)] = r[j];
      rels.push_back(std::move(wrow));
    }
  }
  // Omega_{C/B} relations on each w-column
  for (const auto& om_rel : out.omega.omega->rels()) {
    for (int j = 0; j < gE; ++j) {
      std::vector<Poly> row(total, Poly(amb));
      for (int i = 0; i < n; ++i) row[widx(i, j)] = om_rel[i];
      rels.push_back(std::move(row));
    }
  }
  out.P1 = FPModule::make(C, total, std::move(rels));

  // inclusion and projection
  std::vector<MElem> inc;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < gE; ++j) inc.push_back(generator(out.P1, widx(i, j)));
  out.incl = MHom(out.omegaE.module, out.P1, std::move(inc));
  std::vector<MElem> prj;
  for (int j = 0; j < gE; ++j) prj.push_back(generator(E, j));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < gE; ++j) prj.push_back(zero_elem(E));
  out.proj = MHom(out.P1, E, std::move(prj));
  out.seq = SES(out.incl, out.proj);

  if (M) {
    // E must literally be the extension of scalars of M
    Mod check = base_change(*M, f);
    if (check->gens() != E->gens() || check->rels() != E->rels())
      throw math_error("principal_parts: E is not presented as C (x)_B M");
    std::vector<MElem> tims;
    for (int j = 0; j < gE; ++j) tims.push_back(generator(out.P1, j));
    out.t = MHom(E, out.P1, std::move(tims));
    std::vector<MElem> rims;
    for (int j = 0; j < gE; ++j) rims.push_back(zero_elem(out.omegaE.module));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < gE; ++j)
        rims.push_back(generator(out.omegaE.module, i * gE + j));
    out.retract = MHom(out.P1, out.omegaE.module, std::move(rims));
  }
  return out;
}

BetaData h0_beta(const PrincipalParts& pp, const MHom& f, const SubQuot& N) {
  if (f.src() != pp.E) throw structural_error("h0_beta: source must be E");
  if (N.map.dst() != pp.E)
    throw structural_error("h0_beta: kernel must include into E");
  BetaData out;
  out.omegaF = tensor(pp.omega.omega, f.dst());
  const RingPtr& amb = pp.E->ring()->ambient();
  int n = amb->nvars();
  std::vector<MElem> ims;
  for (const auto& nu : N.map.images()) {
    // nu = sum_j c_j e_j; image is sum_j dc_j (x) f(e_j)
    MElem acc = zero_elem(out.omegaF.module);
    for (int j = 0; j < pp.E->gens(); ++j) {
      const Poly& cj = nu.coords()[j];
      std::vector<Poly> dj(n, Poly(amb));
      for (int i = 0; i < n; ++i) dj[i] = cj.derivative(i);
      MElem dcj(pp.omega.omega, std::move(dj));
      acc = acc + out.omegaF.pure(dcj, f.images()[j]);
    }
    ims.push_back(std::move(acc));
  }
  out.beta = MHom(N.module, out.omegaF.module, std::move(ims));
  return out;
}

MElem h0_beta_sections_route(const PrincipalParts& pp, const MHom& f,
                             const TensorData& omegaF, const MElem& n) {
  if (!pp.t)
    throw math_error("h0_beta_sections_route: t requires E extended from B");
  MElem diff = pp.s(n) - pp.t->apply(n);
  auto in_sub = preimage(pp.incl, diff);
  if (!in_sub)
    throw math_error("h0_beta_sections_route: s - t left the subobject");
  MHom omega_f = tensor_hom(pp.omegaE, omegaF,
                            MHom::identity(pp.omega.omega), f);
  return omega_f.apply(*in_sub);
}

Ext1Class ConormalData::extension_class() const {
  if (!left_exact)
    throw math_error("conormal: extension class needs a left-exact sequence");
  SES s(delta, pr);
  return class_of(s);
}

ConormalData conormal(const QRPtr& B1p, const QRPtr& B1) {
  if (B1p->ambient() != B1->ambient())
    throw structural_error("conormal: extensions must share the ambient ring");
  const RingPtr& amb = B1->ambient();
  // J' inside J
  for (const auto& g : B1p->ideal().basis())
    if (!B1->ideal().contains(g))
      throw structural_error("conormal: J' is not contained in J");
  // square-zero: J*J inside J'
  const auto& JB = B1->ideal().basis();
  for (size_t i = 0; i < JB.size(); ++i)
    for (size_t j = i; j < JB.size(); ++j)
      if (!B1p->ideal().contains(JB[i] * JB[j]))
        throw math_error("conormal: not square-zero (J*J is not contained "
                         "in J')");

  ConormalData out;
  out.B1p = B1p;
  out.B1 = B1;
  out.I1_gen_lifts = JB;

  // I1 = J/J' on the reduced basis of J; relations are coefficient
  // tuples landing in J'
  int t = (int)JB.size();
  {
    std::vector<FreeVec> cols;
    for (const auto& g : JB) cols.push_back(poly_to_vec(g));
    for (const auto& g : B1p->ideal().basis()) cols.push_back(poly_to_vec(g));
    auto syz = syzygies(amb, 1, cols);
    std::vector<std::vector<Poly>> rels;
    for (auto& s : syz) rels.push_back(std::vector<Poly>(s.begin(), s.begin() + t));
    out.I1 = FPModule::make(B1, t, std::move(rels));
  }

  out.omega_B1 = kahler(B1);
  // Omega_{B1'/A} (x)_{B1'} B1: same generators dx, Jacobian rows of J'
  // now reduced mod J
  {
    int n = amb->nvars();
    std::vector<std::vector<Poly>> rels;
    for (const auto& g : B1p->ideal().basis()) {
      std::vector<Poly> row;
      for (int v = 0; v < n; ++v) row.push_back(g.derivative(v));
      rels.push_back(std::move(row));
    }
    out.omega_mid = FPModule::make(B1, n, std::move(rels));
  }

  std::vector<MElem> dims;
  for (const auto& g : JB) {
    std::vector<Poly> row;
    for (int v = 0; v < amb->nvars(); ++v) row.push_back(g.derivative(v));
    dims.push_back(MElem(out.omega_mid, std::move(row)));
  }
  out.delta = MHom(out.I1, out.omega_mid, std::move(dims));

  std::vector<MElem> prims;
  for (int v = 0; v < amb->nvars(); ++v)
    prims.push_back(generator(out.omega_B1.omega, v));
  out.pr = MHom(out.omega_mid, out.omega_B1.omega, std::move(prims));

  out.left_exact = is_injective(out.delta);

  // exactness at the middle spot
  if (!out.pr.compose_after(out.delta).is_zero_map())
    throw math_error("conormal: delta does not land in the kernel");
  SubQuot K = kernel(out.pr);
  for (const auto& g : K.map.images())
    if (!express(out.delta.images(), g))
      throw math_error("conormal: sequence fails exactness at the middle");

  // J/J^2 and the canonical cocycle q
  {
    std::vector<Poly> sq;
    for (size_t i = 0; i < JB.size(); ++i)
      for (size_t j = i; j < JB.size(); ++j) sq.push_back(JB[i] * JB[j]);
    std::vector<FreeVec> cols;
    for (const auto& g : JB) cols.push_back(poly_to_vec(g));
    for (const auto& g : sq) cols.push_back(poly_to_vec(g));
    auto syz = syzygies(amb, 1, cols);
    std::vector<std::vector<Poly>> rels;
    for (auto& s : syz) rels.push_back(std::vector<Poly>(s.begin(), s.begin() + t));
    out.JmodJ2 = FPModule::make(B1, t, std::move(rels));
  }
  std::vector<MElem> qims;
  for (int i = 0; i < t; ++i) qims.push_back(generator(out.I1, i));
  out.q = MHom(out.JmodJ2, out.I1, std::move(qims));
  return out;
}

Poly TrivialExtension::embed(const MElem& x) const {
  if (x.parent() != I1) throw structural_error("TrivialExtension::embed");
  const RingPtr& amb = ring->ambient();
  std::vector<Poly> sub;
  for (int v = 0; v < B1->nvars(); ++v) sub.push_back(Poly::variable(amb, v));
  Poly acc(amb);
  for (int k = 0; k < I1->gens(); ++k) {
    Poly c = x.coords()[k].substitute(amb, sub);
    acc += c * Poly::variable(amb, zbase + k);
  }
  return ring->nf(acc);
}

TrivialExtension trivial_extension(const QRPtr& B1, const Mod& I1,
                                   const std::string& zprefix) {
  if (I1->ring() != B1)
    throw structural_error("trivial_extension: module not over the base");
  const RingPtr& amb1 = B1->ambient();
  std::vector<std::string> vars = amb1->vars();
  int zbase = (int)vars.size();
  for (int k = 0; k < I1->gens(); ++k) {
    std::string nm = zprefix + std::to_string(k);
    if (amb1->var_index(nm) >= 0)
      throw structural_error("trivial_extension: variable collision " + nm);
    vars.push_back(nm);
  }
  RingPtr amb = PolyRing::make(B1->field(), vars, MonomialOrder::grevlex());
  std::vector<Poly> sub;
  for (int v = 0; v < amb1->nvars(); ++v) sub.push_back(Poly::variable(amb, v));
  std::vector<Poly> gens;
  for (const auto& g : B1->ideal().gens())
    gens.push_back(g.substitute(amb, sub));
  for (const auto& row : I1->rels()) {
    Poly acc(amb);
    for (int k = 0; k < I1->gens(); ++k)
      acc += row[k].substitute(amb, sub) * Poly::variable(amb, zbase + k);
    gens.push_back(acc);
  }
  for (int a = 0; a < I1->gens(); ++a)
    for (int b = a; b < I1->gens(); ++b)
      gens.push_back(Poly::variable(amb, zbase + a) *
                     Poly::variable(amb, zbase + b));

  TrivialExtension out;
  out.B1 = B1;
  out.I1 = I1;
  out.zbase = zbase;
  out.ring = QuotientRing::make(amb, std::move(gens));
  out.from_B1 = RingMap(B1, out.ring, sub);
  std::vector<Poly> down;
  for (int v = 0; v < amb1->nvars(); ++v)
    down.push_back(Poly::variable(amb1, v));
  for (int k = 0; k < I1->gens(); ++k) down.push_back(Poly(amb1));
  out.onto_B1 = RingMap(out.ring, B1, std::move(down));
  return out;
}

SectionData section_from_hom(const TrivialExtension& te,
                             const KahlerModule& omega_B1, const MHom& g) {
  if (g.src() != omega_B1.omega || g.dst() != te.I1)
    throw structural_error("section_from_hom: expected Omega_{B1} -> I1");
  const RingPtr& amb = te.ring->ambient();
  SectionData out;
  std::vector<Poly> ims;
  for (int v = 0; v < te.B1->nvars(); ++v) {
    MElem dv = g.apply(generator(omega_B1.omega, v));
    out.deriv.push_back(dv);
    ims.push_back(Poly::variable(amb, v) + te.embed(dv));
  }
  // RingMap construction verifies multiplicativity on the relations
  out.s = RingMap(te.B1, te.ring, std::move(ims));
  out.g_s = g;
  return out;
}

SectionData zero_section(const TrivialExtension& te,
                         const KahlerModule& omega_B1) {
  return section_from_hom(te, omega_B1,
                          MHom::zero(omega_B1.omega, te.I1));
}

}  // namespace qd
