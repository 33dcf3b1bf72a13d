#include <doctest.h>

#include <set>

#include "qschur/json_io.hpp"
#include "qschur/matcomb.hpp"

using namespace qschur;

TEST_CASE("enumeration counts") {
  CHECK(enumerate_XiB(1, 1).size() == 5);
  CHECK(enumerate_XiD(1, 1).size() == 9);
  CHECK(enumerate_XiB(1, 2).size() == 15);
  CHECK(enumerate_XiD(1, 2).size() == 25);
  CHECK(dim_XiB(1, 1) == 5);
  CHECK(dim_XiD(1, 1) == 9);
  CHECK(dim_XiD(1, 2) == 25);
  CHECK(dim_XiB(2, 2) == 91);
  CHECK(dim_XiD(2, 2) == 169);
}

TEST_CASE("classification") {
  CHECK(MatB::diag(1, 2, {1, 2, 1}).classify() == MatClass::Dot);
  CHECK(MatB::diag(1, 2, {2, 0, 2}).classify() == MatClass::OOO);
  const MatB A = MatB::from_rows(1, 9, {{1, 2, 3}, {3, 0, 3}, {3, 2, 1}});
  CHECK(A.ro() == std::vector<int>{6, 6, 6});
  CHECK(A.co() == std::vector<int>{7, 4, 7});
  CHECK(A.classify() == MatClass::DOD);
  CHECK(A.corner_sum() == 3);
  CHECK(A.sgn() == -1);
}

TEST_CASE("coset-matrix bijection") {
  // Identity goes to the diagonal.
  const Composition la{{1, 1}};
  const MatB D = coset_to_matrix(la, SignedPerm(2), la);
  CHECK(D == MatB::diag(1, 2, {1, 2, 1}));
  CHECK(matrix_to_dA(D).is_identity());

  // The 3x3 example with entry sum 18: the displayed permutation prefix.
  const MatB A = MatB::from_rows(1, 9, {{1, 2, 3}, {3, 0, 3}, {3, 2, 1}});
  const SignedPerm d = matrix_to_dA(A);
  const std::vector<int> head{1, 7, 8, 9, 13, 14, 15, 2, 3};
  for (int j = 1; j <= 9; ++j) CHECK(d(j) == head[static_cast<size_t>(j - 1)]);
  CHECK(coset_to_matrix(A.row_comp(), d, A.col_comp()) == A);

  // Round trips and the corner-sum parity rule over all of Xi_{3,4}.
  for (const auto& M : enumerate_XiB(1, 2)) {
    const SignedPerm dm = matrix_to_dA(M);
    CHECK(coset_to_matrix(M.row_comp(), dm, M.col_comp()) == M);
    CHECK(dm.n_r() == M.corner_sum());
    CHECK(dm.in_type_d() == (M.corner_sum() % 2 == 0));
  }

  // A non-distinguished element is rejected.
  const SignedPerm s1 = SignedPerm::generator(2, 1);
  CHECK_THROWS_AS(coset_to_matrix(Composition{{2, 0}}, s1, Composition{{2, 0}}), NotDistinguished);
}

TEST_CASE("shifts") {
  const MatB A = MatB::from_rows(1, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(shift_up(A, 1, 1) == MatB::from_rows(1, 2, {{1, 1, 0}, {0, 0, 0}, {0, 1, 1}}));
  CHECK(!try_shift_up(A, 1, 2).has_value());
  CHECK_THROWS_AS(shift_up(A, 1, 2), InvalidShift);

  // Row and column sums shift as expected; sign flips exactly at (h=n, p>n+1).
  for (const auto& M : enumerate_XiB(1, 2)) {
    for (int p = 1; p <= 3; ++p) {
      auto up = try_shift_up(M, 1, p);
      if (!up) continue;
      auto roM = M.ro();
      roM[0] += 1;
      roM[2] += 1;
      roM[1] -= 2;
      CHECK(up->ro() == roM);
      CHECK(up->co() == M.co());
      if (p > 2) CHECK(up->sgn() == -M.sgn());
      else CHECK(up->sgn() == M.sgn());
    }
  }
}

TEST_CASE("tags and weights") {
  const MatB A = MatB::diag(1, 2, {2, 0, 2});
  CHECK(tags_over(A).size() == 2);
  CHECK_THROWS_AS(MatD::dotted(A), InvalidIndex);
  CHECK_THROWS_AS(MatD::signed_pair(A, +1, -1), InvalidIndex);  // sgn is +
  const MatD P = MatD::signed_pair(A, +1, +1);
  CHECK(rw(P) == SignedComposition(Composition{{2, 0}}, Mark::Plus));
  CHECK(cw(P) == SignedComposition(Composition{{2, 0}}, Mark::Plus));
  const MatD Dot = MatD::dotted(MatB::diag(1, 2, {1, 2, 1}));
  CHECK(rw(Dot).mark == Mark::Dot);
}

TEST_CASE("eta on diagonal indices") {
  const MatD dotD = MatD::dotted(MatB::diag(1, 2, {1, 2, 1}));
  const EtaTriple t = eta(dotD);
  CHECK(t.alpha == SignedComposition(Composition{{1, 1}}, Mark::Dot));
  CHECK(t.d.is_identity());
  CHECK(t.beta == t.alpha);

  const MatD plusD = MatD::signed_pair(MatB::diag(1, 2, {2, 0, 2}), +1, +1);
  const EtaTriple t2 = eta(plusD);
  CHECK(t2.alpha.mark == Mark::Plus);
  CHECK(t2.d.is_identity());
}

TEST_CASE("eta is a bijection at (1,2)") {
  const auto XiD = enumerate_XiD(1, 2);
  REQUIRE(XiD.size() == 25);
  std::set<std::string> triples;
  for (const auto& Ad : XiD) {
    const EtaTriple t = eta(Ad);
    triples.insert(t.str());
    CHECK(eta_inv(t, 1, 2) == Ad);
  }
  CHECK(triples.size() == 25);
}

TEST_CASE("weight idempotent indices") {
  for (const auto& al : all_signed_compositions(1, 2)) {
    const MatD I = weight_idempotent_index(al, 1, 2);
    const EtaTriple t = eta(I);
    CHECK(t.alpha == al);
    CHECK(t.beta == al);
    CHECK(t.d.is_identity());
  }
}

TEST_CASE("eta stays well-posed at rank 3") {
  // Below the rank hypothesis of the type-D product formulas, the labelled
  // coset correspondence itself still round-trips.
  const auto XiD = enumerate_XiD(1, 3);
  std::set<std::string> triples;
  for (const auto& Ad : XiD) {
    const EtaTriple t = eta(Ad);
    triples.insert(t.str());
    CHECK(eta_inv(t, 1, 3) == Ad);
  }
  CHECK(triples.size() == XiD.size());
}

TEST_CASE("class census identity at small sizes") {
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 3; ++r) {
      long long dod = 0;
      for (const auto& A : enumerate_XiB(n, r))
        if (A.classify() == MatClass::DOD) ++dod;
      CHECK(static_cast<unsigned long long>(dod) == count_class_DOD(n, r));
    }
}

TEST_CASE("json round trips") {
  const MatB A = MatB::from_rows(1, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK(matb_from_json(to_json(A)) == A);
  const MatD Ad = MatD::signed_pair(A, +1, +1);  // corner sum 0, sgn +
  CHECK(matd_from_json(to_json(Ad)) == Ad);
  const MatB S = MatB::from_rows(1, 2, {{0, 0, 1}, {1, 0, 1}, {1, 0, 0}});  // corner sum 1
  const MatD Sd = MatD::signed_pair(S, +1, -1);
  CHECK(matd_from_json(to_json(Sd)) == Sd);
}
