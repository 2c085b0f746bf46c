#include "quotdeform/qring.hpp"

namespace qd {

Poly vec_to_poly(const FreeVec& v) {
  if (v.ncomp() != 1) throw structural_error("vec_to_poly: rank != 1");
  return v.coords()[0];
}

FreeVec poly_to_vec(const Poly& p) {
  return FreeVec::from_coords(p.ring(), {p});
}

GroebnerIdeal::GroebnerIdeal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  std::vector<FreeVec> vs;
  for (const auto& g : gens_) {
    if (g.ring() != ring_)
      throw structural_error("GroebnerIdeal: generator from a different ring");
    if (!g.is_zero()) vs.push_back(poly_to_vec(g));
  }
  gb_ = buchberger(ring_, 1, std::move(vs));
  for (const auto& b : gb_.basis) basis_.push_back(vec_to_poly(b));
}

Poly GroebnerIdeal::normal_form(const Poly& f) const {
  if (f.ring() != ring_)
    throw structural_error("normal_form: polynomial from a different ring");
  if (basis_.empty()) return f;
  return vec_to_poly(gb_.nf(poly_to_vec(f)));
}

QRPtr QuotientRing::make(RingPtr ambient, std::vector<Poly> ideal_gens) {
  GroebnerIdeal J(ambient, std::move(ideal_gens));
  return std::make_shared<const QuotientRing>(std::move(ambient), std::move(J));
}

QRPtr QuotientRing::make(GroebnerIdeal J) {
  RingPtr amb = J.ring();
  return std::make_shared<const QuotientRing>(std::move(amb), std::move(J));
}

RingMap::RingMap(QRPtr src, QRPtr dst, std::vector<Poly> var_images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(var_images)) {
  if ((int)images_.size() != src_->nvars())
    throw structural_error("RingMap: wrong number of variable images");
  for (auto& im : images_) {
    if (im.ring() != dst_->ambient())
      throw structural_error("RingMap: image not in the target ring");
    im = dst_->nf(im);
  }
  for (const auto& g : src_->ideal().gens()) {
    Poly im = dst_->nf(g.substitute(dst_->ambient(), images_));
    if (!im.is_zero())
      throw structural_error("RingMap: relation " + g.str() +
                             " does not map to zero");
  }
}

RingMap RingMap::quotient(QRPtr src, QRPtr dst) {
  if (src->ambient() != dst->ambient())
    throw structural_error("RingMap::quotient: different ambient rings");
  std::vector<Poly> ims;
  for (int i = 0; i < src->nvars(); ++i)
    ims.push_back(Poly::variable(src->ambient(), i));
  return RingMap(std::move(src), std::move(dst), std::move(ims));
}

Poly RingMap::apply(const Poly& f) const {
  if (f.ring() != src_->ambient())
    throw structural_error("RingMap::apply: wrong source ring");
  return dst_->nf(f.substitute(dst_->ambient(), images_));
}

Coproduct coproduct_ring(const QRPtr& B1, const QRPtr& B2) {
  if (B1->field() != B2->field())
    throw structural_error("coproduct: factors over different fields");
  for (const auto& v : B1->ambient()->vars())
    if (B2->ambient()->var_index(v) >= 0)
      throw structural_error("coproduct: variable name collision: " + v +
                             " (caller must rename)");
  std::vector<std::string> vars = B1->ambient()->vars();
  for (const auto& v : B2->ambient()->vars()) vars.push_back(v);
  RingPtr amb = PolyRing::make(B1->field(), vars, MonomialOrder::grevlex());

  int n1 = B1->nvars();
  std::vector<Poly> im1, im2;
  for (int i = 0; i < n1; ++i) im1.push_back(Poly::variable(amb, i));
  for (int i = 0; i < B2->nvars(); ++i)
    im2.push_back(Poly::variable(amb, n1 + i));

  std::vector<Poly> gens;
  for (const auto& g : B1->ideal().gens())
    gens.push_back(g.substitute(amb, im1));
  for (const auto& g : B2->ideal().gens())
    gens.push_back(g.substitute(amb, im2));

  Coproduct out;
  out.ring = QuotientRing::make(amb, std::move(gens));
  out.from1 = RingMap(B1, out.ring, std::move(im1));
  out.from2 = RingMap(B2, out.ring, std::move(im2));
  return out;
}

}  // namespace qd
