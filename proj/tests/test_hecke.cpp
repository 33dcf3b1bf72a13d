#include <doctest.h>

#include "qschur/hecke.hpp"

using namespace qschur;

namespace {
const PolyQ q = PolyQ::q_power(1);
}

TEST_CASE("generator multiplication, unequal parameters") {
  const int r = 3;
  const HeckeElt one = HeckeElt::unit(Ambient::B, r);
  const HeckeElt Tr = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, r));
  CHECK(Tr.mul_gen(r) == one);  // T_r^2 = 1
  const HeckeElt T1 = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, 1));
  CHECK(T1.mul_gen(1) == T1.scaled(q - PolyQ(1)) + one.scaled(q));
  CHECK(one.mul_gen(2) == HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, 2)));
}

TEST_CASE("products") {
  const int r = 3;
  const HeckeElt one = HeckeElt::unit(Ambient::B, r);
  const HeckeElt T1 = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, 1));
  const HeckeElt T2 = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, 2));
  CHECK(one.mul(T1) == T1);
  CHECK(T1.mul(one) == T1);
  const SignedPerm s1s2 = SignedPerm::generator(r, 1) * SignedPerm::generator(r, 2);
  CHECK(T1.mul(T2) == HeckeElt::basis(Ambient::B, r, s1s2));
  // order-4 braid at the short node
  const HeckeElt T3 = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, 3));
  CHECK(T2.mul(T3).mul(T2).mul(T3) == T3.mul(T2).mul(T3).mul(T2));
}

TEST_CASE("parabolic sums") {
  CHECK(x_parabolic(ParabolicSpec::typeB(2, 2, Composition{{1, 1, 0}})) ==
        HeckeElt::unit(Ambient::B, 2));
  const HeckeElt x = x_parabolic(ParabolicSpec::typeB(1, 3, Composition{{3, 0}}));
  CHECK(x.term_count() == 6);
  // absorption: x_lambda T_s = q x_lambda for s in W_lambda, s != s_r
  CHECK(x.mul_gen(1) == x.scaled(q));
  CHECK(x.mul_gen(2) == x.scaled(q));
}

TEST_CASE("tau") {
  const int r = 3;
  for (int i = 1; i <= r; ++i) {
    const HeckeElt Ti = HeckeElt::basis(Ambient::B, r, SignedPerm::generator(r, i));
    CHECK(Ti.tau() == Ti);
  }
  const SignedPerm s1s2 = SignedPerm::generator(r, 1) * SignedPerm::generator(r, 2);
  const SignedPerm s2s1 = SignedPerm::generator(r, 2) * SignedPerm::generator(r, 1);
  CHECK(HeckeElt::basis(Ambient::B, r, s1s2).tau() == HeckeElt::basis(Ambient::B, r, s2s1));
}

TEST_CASE("type-D presentation and folding") {
  const int r = 3;
  const HeckeElt oneD = HeckeElt::unit(Ambient::D, r);
  const HeckeElt Ts = HeckeElt::basis(Ambient::D, r, SignedPerm::generator(r, kSigma));
  CHECK(Ts.mul_gen(kSigma) == Ts.scaled(q - PolyQ(1)) + oneD.scaled(q));
  const HeckeElt T2 = HeckeElt::basis(Ambient::D, r, SignedPerm::generator(r, 2));
  CHECK(Ts.mul(T2) == T2.mul(Ts));  // i = r-1 != r-2 commutes
  const HeckeElt T1 = HeckeElt::basis(Ambient::D, r, SignedPerm::generator(r, 1));
  CHECK(T1.mul(Ts).mul(T1) == Ts.mul(T1).mul(Ts));  // braid with s_{r-2}

  // The type-D engine agrees with folding T_sigma = T_r T_{r-1} T_r in type B.
  const WeylGroup& GD = WeylGroup::get(Ambient::D, r);
  const WeylGroup& GB = WeylGroup::get(Ambient::B, r);
  for (size_t id = 0; id < GD.size(); ++id) {
    const HeckeElt viaD = HeckeElt::basis(Ambient::D, r, GD.elems[id]).mul_gen(kSigma);
    const HeckeElt viaB =
        HeckeElt::basis(Ambient::B, r, GD.elems[id]).mul_gen(r).mul_gen(r - 1).mul_gen(r);
    HeckeElt lifted(Ambient::B, r);
    for (const auto& [tid, c] : viaD.terms())
      lifted.add_term(GB.id_of(GD.elems[static_cast<size_t>(tid)]), c);
    CHECK(lifted == viaB);
  }
}

TEST_CASE("ambient guards") {
  CHECK_THROWS_AS(HeckeElt::basis(Ambient::D, 3, SignedPerm::generator(3, 3)), AmbientMismatch);
  CHECK_THROWS_AS(HeckeElt::unit(Ambient::D, 3).mul_gen(3), BadGenerator);
}
