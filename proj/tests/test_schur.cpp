#include <doctest.h>

#include "qschur/schur.hpp"

using namespace qschur;

namespace {
const PolyQ q = PolyQ::q_power(1);
const MatB kA = MatB::from_rows(1, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
const MatB kB = MatB::from_rows(1, 2, {{1, 1, 0}, {0, 0, 0}, {0, 1, 1}});
}  // namespace

TEST_CASE("raising coefficients") {
  const MatB D = MatB::diag(1, 2, {1, 2, 1});
  CHECK(coef_raise(D, 1, 2) == PolyQ(1));
  CHECK(coef_raise(D, 1, 1).is_zero());
  CHECK(coef_raise(D, 1, 3).is_zero());
  CHECK(coef_raise(kA, 1, 1) == q);
  CHECK(coef_raise(kA, 1, 2).is_zero());
  CHECK(coef_raise(kA, 1, 3) == PolyQ(1));
}

TEST_CASE("lowering coefficients") {
  // central branch with vanishing central entry: q^s ([[1]] + 1) = 2 q^s
  CHECK(coef_lower(kA, 1, 2) == PolyQ(2) * q);
  const MatB Z = MatB::diag(1, 2, {0, 4, 0});
  CHECK(coef_lower(Z, 1, 1).is_zero());  // a_{h,p} = 0
  // off-center branch: [[a_{h+1,p} + 1]]
  const MatB W = MatB::from_rows(2, 2, {{1, 0, 0, 0, 0},
                                        {1, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 1},
                                        {0, 0, 0, 0, 1}});
  CHECK(coef_lower(W, 1, 1) == PolyQ::gauss(2));
}

TEST_CASE("fundamental shapes") {
  CHECK(fundamental_shape(MatB::diag(1, 2, {1, 2, 1}))->kind == FundKind::Diagonal);
  auto sh = fundamental_shape(kB);
  REQUIRE(sh.has_value());
  CHECK(sh->kind == FundKind::Raise);
  CHECK(sh->h == 1);
  const MatB C = MatB::from_rows(1, 2, {{1, 0, 0}, {1, 0, 1}, {0, 0, 1}});
  auto sl = fundamental_shape(C);
  REQUIRE(sl.has_value());
  CHECK(sl->kind == FundKind::Lower);
  CHECK(!fundamental_shape(kA).has_value());
  CHECK_THROWS_AS(mult_fund_B(kA, kA), NotFundamental);
}

TEST_CASE("type-B fundamental products") {
  // single surviving term with coefficient 1
  {
    const SchurB prod = mult_fund_B(kB, MatB::diag(1, 2, {1, 2, 1}));
    REQUIRE(prod.terms().size() == 1);
    CHECK(prod.coefficient(kB) == PolyQ(1));
  }
  // q e_{1A1} + e_{1A3}
  {
    const SchurB prod = mult_fund_B(kB, kA);
    REQUIRE(prod.terms().size() == 2);
    CHECK(prod.coefficient(shift_up(kA, 1, 1)) == q);
    CHECK(prod.coefficient(shift_up(kA, 1, 3)) == PolyQ(1));
  }
  // weight mismatch gives zero
  {
    const MatB C = MatB::from_rows(1, 2, {{1, 0, 0}, {1, 0, 1}, {0, 0, 1}});
    CHECK(C.co() != kA.ro());
    CHECK(mult_fund_B(C, kA).is_zero());
  }
}

TEST_CASE("embedding of basis elements") {
  const SchurD one_term = embed_B_in_D(MatB::diag(1, 2, {1, 2, 1}));
  REQUIRE(one_term.terms().size() == 1);
  CHECK(one_term.terms().begin()->first.tag().dot);
  const SchurD two_terms = embed_B_in_D(MatB::diag(1, 2, {2, 0, 2}));
  REQUIRE(two_terms.terms().size() == 2);
  for (const auto& [k, c] : two_terms.terms()) {
    CHECK(c == PolyQ(1));
    CHECK(k.tag().e1 == k.tag().e2);
  }
}

TEST_CASE("type-D products: weight idempotents act as identities") {
  const auto XiD = enumerate_XiD(1, 4);
  int done = 0;
  for (const auto& Ad : XiD) {
    const MatD I = weight_idempotent_index(rw(Ad), 1, 4);
    const DProduct p = mult_fund_D(I, Ad);
    CHECK(p.label == "idem");
    REQUIRE(p.value.terms().size() == 1);
    CHECK(p.value.coefficient(Ad) == PolyQ(1));
    // a mismatched idempotent annihilates
    for (const auto& al : all_signed_compositions(1, 4)) {
      if (al == rw(Ad)) continue;
      CHECK(mult_fund_D(weight_idempotent_index(al, 1, 4), Ad).value.is_zero());
      break;
    }
    if (++done == 25) break;
  }
}

TEST_CASE("type-D halved central coefficient") {
  // A with split index, a_{n,n+1} = 1: the dotted output carries halve(g').
  const MatB A = MatB::from_rows(1, 4, {{1, 1, 1}, {1, 0, 1}, {1, 1, 1}});
  REQUIRE(A.classify() == MatClass::DOD);
  REQUIRE(A.sgn() == -1);
  const MatB C = MatB::from_rows(1, 4, {{2, 0, 0}, {1, 2, 1}, {0, 0, 2}});
  REQUIRE(fundamental_shape(C)->kind == FundKind::Lower);
  REQUIRE(C.co() == A.ro());
  const MatD Ad = MatD::signed_pair(A, +1, -1);
  const DProduct p = mult_fund_D(MatD::dotted(C), Ad);
  CHECK(p.label == "lower.dot.dod.heq.half");
  const MatB X = shift_down(A, 1, 2);
  const PolyQ expected = halve(coef_lower(A, 1, 2));
  CHECK(expected == q);
  CHECK(p.value.coefficient(MatD::dotted(X)) == expected);
}

TEST_CASE("type-D products require r >= 4") {
  const MatB D2 = MatB::diag(1, 2, {1, 2, 1});
  CHECK_THROWS_AS(mult_fund_D(MatD::dotted(D2), MatD::dotted(D2)), InvalidIndex);
}

TEST_CASE("dimension formulas") {
  CHECK(dim_B(1, 1) == 5);
  CHECK(dim_B(1, 2) == 15);
  CHECK(dim_D(1, 1) == 9);
  CHECK(dim_D(1, 2) == 25);
  CHECK(dim_B(2, 2) == 91);
  CHECK(dim_D(2, 2) == 169);
}
