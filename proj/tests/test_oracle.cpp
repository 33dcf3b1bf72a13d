#include <doctest.h>

#include "qschur/oracle.hpp"

using namespace qschur;

namespace {
const PolyQ q = PolyQ::q_power(1);

// Bilinear extension of the oracle product, for associativity checks.
SchurB oprod(const OracleB& o, const SchurB& x, const SchurB& y) {
  SchurB out(x.n(), x.r());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out += o.product(kx, ky).scaled(cx * cy);
  return out;
}
}  // namespace

TEST_CASE("double coset sums") {
  // (lambda, id, lambda) is the parabolic sum itself.
  const Composition la{{1, 1}};
  CHECK(double_coset_sum_B(1, 2, la, SignedPerm(2), la) ==
        x_parabolic(ParabolicSpec::typeB(1, 2, la)));
  // Trivial subgroups: a single basis element.
  const Composition tr{{1, 1, 0}};
  const SignedPerm s1 = SignedPerm::generator(2, 1);
  CHECK(double_coset_sum_B(2, 2, tr, s1, tr) == HeckeElt::basis(Ambient::B, 2, s1));
  // Double cosets tile the whole group.
  for (int r = 2; r <= 3; ++r) {
    const int n = 1;
    const WeylGroup& G = WeylGroup::get(Ambient::B, r);
    for (const auto& lam : all_compositions(n + 1, r))
      for (const auto& mu : all_compositions(n + 1, r)) {
        const Subgroup P1 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, lam));
        const Subgroup P2 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, mu));
        const auto part = double_cosets(P1, P2);
        size_t total = 0;
        for (const auto& mem : part.members) total += mem.size();
        CHECK(total == G.size());
      }
  }
}

TEST_CASE("module bases are multiplicity-free expansions") {
  const OracleB o(1, 2);
  const auto basisels = o.module_basis(Composition{{1, 1}});
  CHECK(!basisels.empty());
  for (const auto& be : basisels) CHECK(be.rep.rank() == 2);

  // Each double-coset sum decomposes as x_lambda times the sum of T_d over
  // the minimal right representatives it contains, with multiplicity one.
  for (const auto& A : o.basis()) {
    const HeckeElt x = x_parabolic(ParabolicSpec::typeB(1, 2, A.row_comp()));
    const SignedPerm dA = matrix_to_dA(A);
    const HeckeElt S = double_coset_sum_B(1, 2, A.row_comp(), dA, A.col_comp());
    HeckeElt rebuilt(Ambient::B, 2);
    const Subgroup P = enumerate_parabolic_subgroup(ParabolicSpec::typeB(1, 2, A.row_comp()));
    const WeylGroup& G = WeylGroup::get(Ambient::B, 2);
    for (const auto& [id, c] : S.terms()) {
      (void)c;
      if (!is_min_in_right_coset(P, id)) continue;
      HeckeElt cur = x;
      for (Gen g : G.word_of(id)) cur = cur.mul_gen(g);
      rebuilt += cur;
    }
    CHECK(rebuilt == S);
  }
}

TEST_CASE("left idempotents act trivially through the oracle") {
  const OracleB o(1, 2);
  for (const auto& A : o.basis()) {
    const MatB D = MatB::diag(1, 2, A.ro());
    const SchurB p = o.product(D, A);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.coefficient(A) == PolyQ(1));
  }
}

TEST_CASE("oracle reproduces the two-term raising product") {
  const OracleB o(1, 2);
  const MatB B = MatB::from_rows(1, 2, {{1, 1, 0}, {0, 0, 0}, {0, 1, 1}});
  const MatB A = MatB::from_rows(1, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  const SchurB p = o.product(B, A);
  REQUIRE(p.terms().size() == 2);
  CHECK(p.coefficient(shift_up(A, 1, 1)) == q);
  CHECK(p.coefficient(shift_up(A, 1, 3)) == PolyQ(1));
  CHECK(p == mult_fund_B(B, A));
}

TEST_CASE("oracle is associative on a sample") {
  const OracleB o(1, 2);
  std::vector<MatB> sample;
  for (const auto& A : o.basis()) {
    const auto sh = fundamental_shape(A);
    if (sh) sample.push_back(A);
  }
  int done = 0;
  for (const auto& x : sample)
    for (const auto& y : sample) {
      for (const auto& z : sample) {
        SchurB xy(1, 2), yz(1, 2);
        xy.add(y, PolyQ(1));
        yz.add(z, PolyQ(1));
        SchurB left = oprod(o, o.product(x, y), yz);
        SchurB lhsx(1, 2);
        lhsx.add(x, PolyQ(1));
        SchurB right = oprod(o, lhsx, o.product(y, z));
        CHECK(left == right);
        if (++done >= 60) return;
      }
    }
}

TEST_CASE("type-D oracle: weight idempotents") {
  const OracleD o(1, 4);
  for (const auto& al : all_signed_compositions(1, 4)) {
    const MatD I = weight_idempotent_index(al, 1, 4);
    const SchurD p = o.product(I, I);
    REQUIRE(p.terms().size() == 1);
    CHECK(p.coefficient(I) == PolyQ(1));
  }
}

TEST_CASE("oracle rank budgets") {
  CHECK_THROWS_AS(OracleB(1, 5), TooLarge);
  CHECK_THROWS_AS(OracleD(1, 3), InvalidIndex);
}
