#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "quotdeform/homext.hpp"

using namespace qd;

namespace {

struct NodeRing {
  QRPtr B2;  // k[x,y]/(xy)
  Poly x, y;
};

NodeRing node_ring(Field k = Field::rationals()) {
  auto r = PolyRing::make(k, {"x", "y"});
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
  return {QuotientRing::make(r, {x * y}), x, y};
}

QRPtr kt_mod(Field k, unsigned n) {  // k[t]/(t^n), n=0 gives k[t]
  auto r = PolyRing::make(k, {"t"});
  Poly t = Poly::variable(r, 0);
  std::vector<Poly> gens;
  if (n > 0) {
    Poly p = Poly::constant(r, 1);
    for (unsigned i = 0; i < n; ++i) p *= t;
    gens.push_back(p);
  }
  return QuotientRing::make(r, gens);
}

}  // namespace

TEST_CASE("present: cyclic torsion module and zero module") {
  auto B = kt_mod(Field::rationals(), 0);  // k[t]
  Poly t = Poly::variable(B->ambient(), 0);
  Mod M = FPModule::make(B, 1, {{t * t}});
  KBasis kb = kbasis(M);
  REQUIRE(kb.finite);
  CHECK(kb.dim() == 2);

  Mod Z = FPModule::zero(B);
  CHECK(is_zero_module(Z));
  CHECK(kbasis(Z).dim() == 0);
}

TEST_CASE("hom: well-definedness is enforced with a named relation") {
  auto Bt2 = kt_mod(Field::rationals(), 2);  // k[t]/(t^2)
  auto Bt1 = kt_mod(Field::rationals(), 1);  // k[t]/(t)
  // over B = k[t]: M = k[t]/(t^2), N = k[t]/(t)
  auto B = kt_mod(Field::rationals(), 0);
  Poly t = Poly::variable(B->ambient(), 0);
  Poly one = Poly::constant(B->ambient(), 1);
  Mod M2 = FPModule::make(B, 1, {{t * t}});
  Mod M1 = FPModule::make(B, 1, {{t}});
  CHECK_NOTHROW(MHom(M2, M1, {{one}}));  // surjection is fine
  try {
    MHom bad(M1, M2, {{one}});
    FAIL("expected math_error");
  } catch (const math_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("relation #0") != std::string::npos);
  }
  CHECK(MHom::identity(M2).apply(generator(M2, 0)) == generator(M2, 0));
}

TEST_CASE("kernel: quotient map and identity") {
  auto B = kt_mod(Field::rationals(), 0);
  Poly t = Poly::variable(B->ambient(), 0);
  Poly one = Poly::constant(B->ambient(), 1);
  Mod F = FPModule::free(B, 1);
  Mod M = FPModule::make(B, 1, {{t * t}});
  MHom q(F, M, {{one}});
  SubQuot K = kernel(q);
  // kernel is (t^2): every generator is a multiple of t^2, and t^2 lies in it
  MElem t2 = MElem(F, {t * t});
  auto expr = express(K.map.images(), t2);
  CHECK(expr.has_value());
  for (const auto& g : K.map.images()) {
    auto c = express({t2}, g);
    CHECK(c.has_value());
  }
  CHECK(is_zero_module(kernel(MHom::identity(M)).module));
}

TEST_CASE("image and cokernel") {
  auto B = kt_mod(Field::rationals(), 0);
  Poly t = Poly::variable(B->ambient(), 0);
  Mod F = FPModule::free(B, 1);
  MHom mult_t(F, F, {{t}});
  SubQuot C = cokernel(mult_t);
  KBasis kb = kbasis(C.module);
  REQUIRE(kb.finite);
  CHECK(kb.dim() == 1);  // k[t]/(t)
  ImageData I = image(MHom::zero(F, F));
  CHECK(is_zero_module(I.module));
}

TEST_CASE("rank-nullity over k on finite-dimensional instances") {
  auto B = kt_mod(Field::rationals(), 4);  // k[t]/(t^4)
  Poly t = Poly::variable(B->ambient(), 0);
  Mod M = FPModule::free(B, 1);  // dim 4
  MHom f = scalar_hom(M, t * t);
  SubQuot K = kernel(f);
  ImageData I = image(f);
  int dim_src = kbasis(M).dim();
  int dim_ker = kbasis(K.module).dim();
  int dim_im = kbasis(I.module).dim();
  CHECK(dim_src == 4);
  CHECK(dim_ker + dim_im == dim_src);
}

TEST_CASE("tensor: unit, torsion product, right exactness") {
  auto B = kt_mod(Field::rationals(), 0);
  Poly t = Poly::variable(B->ambient(), 0);
  Mod M = FPModule::make(B, 1, {{t * t}});
  Mod F1 = FPModule::free(B, 1);
  TensorData MF = tensor(M, F1);
  KBasis kb = kbasis(MF.module);
  REQUIRE(kb.finite);
  CHECK(kb.dim() == 2);  // M (x) B = M

  Mod N = FPModule::make(B, 1, {{t * t * t}});
  TensorData MN = tensor(M, N);
  CHECK(kbasis(MN.module).dim() == 2);  // k[t]/(t^2) (x) k[t]/(t^3) = k[t]/(t^2)

  // right exactness: tensor(M, -) applied to F1 ->t^3 F1 -> N -> 0
  MHom d(F1, F1, {{t * t * t}});
  TensorData MF_src = tensor(M, F1);
  MHom Md = tensor_hom(MF_src, MF, MHom::identity(M), d);
  SubQuot ck = cokernel(Md);
  CHECK(kbasis(ck.module).dim() == kbasis(MN.module).dim());
}

TEST_CASE("hom_module: free source, torsion pair, node tangent") {
  auto B = kt_mod(Field::rationals(), 0);
  Poly t = Poly::variable(B->ambient(), 0);
  Mod F1 = FPModule::free(B, 1);
  Mod M2 = FPModule::make(B, 1, {{t * t}});
  HomModule h1 = hom_module(F1, M2);
  CHECK(kbasis(h1.H).dim() == 2);  // Hom(B, M) = M

  // Hom_{k[t]}((t^2), k[t]/(t^2)): the ideal (t^2) is free of rank 1
  Mod I2 = FPModule::free(B, 1);
  HomModule h2 = hom_module(I2, M2);
  CHECK(kbasis(h2.H).dim() == 2);
  CHECK(oracle::hom_dim_linear(I2, M2) == 2);

  // node tangent: Hom_{B2}((x,y), B2/(x,y)) has dimension 2
  NodeRing nr = node_ring();
  Mod Fxy = FPModule::free(nr.B2, 1);
  MElem gx(Fxy, {nr.x}), gy(Fxy, {nr.y});
  SubQuot ideal_xy = submodule(Fxy, {gx, gy});
  Mod k_pt = FPModule::make(nr.B2, 1, {{nr.x}, {nr.y}});
  HomModule h3 = hom_module(ideal_xy.module, k_pt);
  CHECK(kbasis(h3.H).dim() == 2);
  CHECK(oracle::hom_dim_linear(ideal_xy.module, k_pt) == 2);
  // exhaustive count over GF(2): 2^2 module maps
  NodeRing nr2 = node_ring(Field::prime(2));
  Mod Fxy2 = FPModule::free(nr2.B2, 1);
  SubQuot ideal2 =
      submodule(Fxy2, {MElem(Fxy2, {nr2.x}), MElem(Fxy2, {nr2.y})});
  Mod k_pt2 = FPModule::make(nr2.B2, 1, {{nr2.x}, {nr2.y}});
  CHECK(oracle::hom_count_exhaustive(ideal2.module, k_pt2, 1 << 20) == 4);
}

TEST_CASE("hom_module round trip: element -> hom -> element") {
  NodeRing nr = node_ring();
  Mod Fxy = FPModule::free(nr.B2, 1);
  SubQuot ideal_xy =
      submodule(Fxy, {MElem(Fxy, {nr.x}), MElem(Fxy, {nr.y})});
  Mod k_pt = FPModule::make(nr.B2, 1, {{nr.x}, {nr.y}});
  HomModule h = hom_module(ideal_xy.module, k_pt);
  KBasis kb = kbasis(h.H);
  for (int i = 0; i < kb.dim(); ++i) {
    std::vector<Fq> unit(kb.dim(), Fq(nr.B2->field(), 0));
    unit[i] = Fq(nr.B2->field(), 1);
    MElem e = kb.element(h.H, unit);
    CHECK(h.from_hom(h.as_hom(e)) == e);
  }
}

TEST_CASE("resolution fragment: free module, k over k[t]/(t^2)") {
  auto Bt2 = kt_mod(Field::rationals(), 2);
  Poly t = Poly::variable(Bt2->ambient(), 0);
  Mod F = FPModule::free(Bt2, 1);
  ResolutionFragment rf = resolution_fragment(F);
  CHECK(rf.F1->gens() == 0);

  Mod kk = FPModule::make(Bt2, 1, {{t}});
  ResolutionFragment rk = resolution_fragment(kk);
  // composites vanish and homology at inner spots is zero
  CHECK(rk.d1.compose_after(rk.d2).is_zero_map());
  CHECK(rk.aug.compose_after(rk.d1).is_zero_map());
  SubQuot K1 = kernel(rk.d1);
  for (const auto& g : K1.map.images())
    CHECK(express(rk.d2.images(), g).has_value());
  SubQuot K0 = kernel(rk.aug);
  for (const auto& g : K0.map.images())
    CHECK(express(rk.d1.images(), g).has_value());
  // the syzygy of (t) in k[t]/(t^2) is (t) again
  CHECK(rk.F1->gens() == 1);
  CHECK(rk.F2->gens() == 1);
}

TEST_CASE("base change and restriction of scalars") {
  Field k = Field::rationals();
  auto B1 = kt_mod(k, 2);  // k[eps]/(eps^2) named t
  auto rt = PolyRing::make(k, {"u"});
  auto B0 = QuotientRing::make(rt, {});
  // base change k[t]/(t^2)-module k along t |-> 0
  RingMap f(B1, B0, {Poly::constant(rt, 0)});
  Mod M = FPModule::free(B1, 1);
  Mod Mb = base_change(M, f);
  CHECK(Mb->ring() == B0);
  CHECK(Mb->gens() == 1);

  // restriction along k[t] -> k[t]/(t^2) adds the ideal rows
  auto Bt = kt_mod(k, 0);
  auto Bt2b = kt_mod(k, 2);
  // same ambient ring is required, so rebuild over Bt's ambient
  Poly t = Poly::variable(Bt->ambient(), 0);
  auto Bt2c = QuotientRing::make(Bt->ambient(), {t * t});
  Mod over_small = FPModule::free(Bt2c, 1);
  Mod restricted = restrict_scalars(over_small, Bt);
  CHECK(kbasis(restricted).dim() == 2);
  Mod back = corestrict_scalars(restricted, Bt2c);
  CHECK(kbasis(back).dim() == 2);
  // a module with t acting nontrivially cannot be corestricted
  Mod free_big = FPModule::free(Bt, 1);
  CHECK_THROWS_AS(corestrict_scalars(free_big, Bt2c), math_error);
}

TEST_CASE("kbasis flags infinite dimension") {
  auto B = kt_mod(Field::rationals(), 0);
  Mod F = FPModule::free(B, 1);
  CHECK_FALSE(kbasis(F).finite);
  // oracle agrees on the finite case
  Poly t = Poly::variable(B->ambient(), 0);
  Mod M = FPModule::make(B, 1, {{t * t * t}});
  CHECK(kbasis(M).dim() == 3);
  CHECK(oracle::kdim_linear(M, 8) == 3);
}

TEST_CASE("membership oracle agreement over GF(2), <=3 vars, degree <= 4") {
  Field f2 = Field::prime(2);
  auto r = PolyRing::make(f2, {"x", "y", "z"});
  Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1),
       z = Poly::variable(r, 2);
  std::vector<std::vector<Poly>> ideals = {
      {x * y + z * z, y * y},
      {x * x + x, y * z},
      {x * y * z + x, z * z + y},
  };
  std::vector<Poly> probes = {x * x * y,
                              z * z * z,
                              x * y + z * z,
                              y * y * z + y * y,
                              x + y,
                              (x + z) * (x + z),
                              x * y * z * z};
  for (const auto& gens : ideals) {
    GroebnerIdeal I(r, gens);
    for (const auto& f : probes) {
      bool gb = I.contains(f);
      bool lin = oracle::membership_linear(gens, f, 8);
      if (gb) {
        CHECK(lin);
      } else {
        CHECK_FALSE(lin);
      }
    }
  }
}

TEST_CASE("I1 (x)_{B1} F0 dimension for the node first-order family") {
  // B1 = k[eps]/(eps^2), I1 = k (eps acts as zero), F0 = B1 free rank 1:
  // I1 (x) F0 = F0 / eps F0 has dimension 1
  Field k = Field::rationals();
  auto re = PolyRing::make(k, {"eps"});
  Poly e = Poly::variable(re, 0);
  auto B1 = QuotientRing::make(re, {e * e});
  Mod I1 = FPModule::make(B1, 1, {{e}});
  Mod F0 = FPModule::free(B1, 1);
  TensorData T = tensor(I1, F0);
  CHECK(kbasis(T.module).dim() == 1);
  CHECK(oracle::kdim_linear(T.module, 6) == 1);
}
