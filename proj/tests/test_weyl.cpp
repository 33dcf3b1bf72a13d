#include <doctest.h>

#include <algorithm>
#include <set>

#include "qschur/weyl.hpp"

using namespace qschur;

TEST_CASE("generators at r = 4") {
  const SignedPerm s1 = SignedPerm::generator(4, 1);
  CHECK(s1.images() == std::vector<int>{2, 1, 3, 4, 5, 6, 8, 7});
  const SignedPerm s4 = SignedPerm::generator(4, 4);
  CHECK(s4.images() == std::vector<int>{1, 2, 3, 5, 4, 6, 7, 8});
  const SignedPerm vs = SignedPerm::generator(4, kSigma);
  CHECK(vs.images() == std::vector<int>{1, 2, 5, 6, 3, 4, 7, 8});  // (3,5)(4,6)
  CHECK_THROWS_AS(SignedPerm::generator(4, 5), BadLabel);
}

TEST_CASE("centro-symmetry enforced") {
  CHECK_THROWS_AS(SignedPerm(2, std::vector<int>{2, 1, 3, 4}), BadLabel);
  CHECK_NOTHROW(SignedPerm(2, std::vector<int>{2, 1, 4, 3}));
}

TEST_CASE("length and n_r") {
  const SignedPerm id(3);
  CHECK(length(id, Ambient::B) == 0);
  CHECK(id.n_r() == 0);
  const SignedPerm sr = SignedPerm::generator(3, 3);
  CHECK(length(sr, Ambient::B) == 1);
  CHECK(sr.n_r() == 1);
  const SignedPerm vs = SignedPerm::generator(3, kSigma);
  CHECK(length(vs, Ambient::B) == 3);
  CHECK(vs.n_r() == 2);
  CHECK(vs.in_type_d());
  CHECK(length(vs, Ambient::D) == 1);
  // varsigma = s_r s_{r-1} s_r as permutations
  const SignedPerm s2 = SignedPerm::generator(3, 2);
  CHECK(vs == sr * s2 * sr);
}

TEST_CASE("group orders") {
  CHECK(WeylGroup::get(Ambient::B, 2).size() == 8);
  CHECK(WeylGroup::get(Ambient::B, 3).size() == 48);
  CHECK(WeylGroup::get(Ambient::B, 4).size() == 384);
  CHECK(WeylGroup::get(Ambient::D, 2).size() == 4);
  CHECK(WeylGroup::get(Ambient::D, 3).size() == 24);
  CHECK(WeylGroup::get(Ambient::D, 4).size() == 192);
}

TEST_CASE("greedy length equals word-graph distance") {
  for (int r : {3, 4}) {
    for (Ambient amb : {Ambient::B, Ambient::D}) {
      const WeylGroup& G = WeylGroup::get(amb, r);
      for (size_t id = 0; id < G.size(); ++id) {
        CHECK(length(G.elems[id], amb) == G.len[id]);
        // reduced words rebuild the element with the right length
        const auto word = reduced_word(G.elems[id], amb);
        CHECK(static_cast<int>(word.size()) == G.len[id]);
        SignedPerm w(r);
        for (Gen g : word) w = w * SignedPerm::generator(r, g);
        CHECK(w == G.elems[id]);
      }
    }
  }
}

TEST_CASE("flip") {
  const int r = 4;
  for (int i = 1; i <= r - 2; ++i)
    CHECK(flip(SignedPerm::generator(r, i)) == SignedPerm::generator(r, i));
  CHECK(flip(SignedPerm::generator(r, r - 1)) == SignedPerm::generator(r, kSigma));
  CHECK(flip(SignedPerm(r)) == SignedPerm(r));
  const WeylGroup& GD = WeylGroup::get(Ambient::D, 3);
  for (const auto& u : GD.elems) CHECK(flip(flip(u)) == u);
}

TEST_CASE("parabolic subgroups") {
  // B((r,0)): the symmetric-group copy generated by s_1..s_{r-1}.
  const auto sym = enumerate_parabolic(ParabolicSpec::typeB(1, 3, Composition{{3, 0}}));
  CHECK(sym.size() == 6);
  for (const auto& w : sym) CHECK(w.n_r() == 0);

  // D(lambda,+) equals B(lambda) when lambda_{n+1} = 0 and lambda_m > 1;
  // D(lambda,-) is its s_r-conjugate.
  const Composition la{{4, 0}};
  auto as_set = [](std::vector<SignedPerm> v) {
    std::set<std::vector<int>> s;
    for (const auto& w : v) s.insert(w.images());
    return s;
  };
  const auto plus = as_set(enumerate_parabolic(ParabolicSpec::typeD(1, 4, SignedComposition(la, Mark::Plus))));
  const auto minus = as_set(enumerate_parabolic(ParabolicSpec::typeD(1, 4, SignedComposition(la, Mark::Minus))));
  const auto bgrp = as_set(enumerate_parabolic(ParabolicSpec::typeB(1, 4, la)));
  CHECK(plus == bgrp);
  std::set<std::vector<int>> conj;
  for (const auto& img : plus) conj.insert(flip(SignedPerm(4, img)).images());
  CHECK(minus == conj);
}

TEST_CASE("distinguished representatives") {
  // Full group on both sides: only the identity.
  {
    const auto spec = ParabolicSpec::typeB(1, 2, Composition{{0, 2}});
    CHECK(enumerate_parabolic(spec).size() == 8);
    const auto reps = distinguished_reps(spec, spec);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].is_identity());
  }
  // Trivial subgroup on both sides: everything.
  {
    const auto spec = ParabolicSpec::typeB(2, 2, Composition{{1, 1, 0}});
    CHECK(enumerate_parabolic(spec).size() == 1);
    CHECK(distinguished_reps(spec, spec).size() == 8);
  }
  // S_2 double cosets in W(B_2): three cosets; minima have lengths 0, 1, 3.
  {
    const auto spec = ParabolicSpec::typeB(1, 2, Composition{{2, 0}});
    auto reps = distinguished_reps(spec, spec);
    REQUIRE(reps.size() == 3);
    std::multiset<int> lens;
    for (const auto& d : reps) lens.insert(length(d, Ambient::B));
    CHECK(lens == std::multiset<int>{0, 1, 3});
  }
}

TEST_CASE("enumeration budgets") {
  CHECK_THROWS_AS(enumerate_parabolic(ParabolicSpec::typeB(1, 4, Composition{{0, 4}}), 10),
                  TooLarge);
}

TEST_CASE("double coset minima are unique and minimal") {
  const WeylGroup& G = WeylGroup::get(Ambient::B, 3);
  const Subgroup P1 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(1, 3, Composition{{2, 1}}));
  const Subgroup P2 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(1, 3, Composition{{1, 2}}));
  const auto part = double_cosets(P1, P2);
  size_t covered = 0;
  for (size_t ci = 0; ci < part.rep_ids.size(); ++ci) {
    covered += part.members[ci].size();
    for (int m : part.members[ci])
      CHECK(G.len[static_cast<size_t>(m)] >= G.len[static_cast<size_t>(part.rep_ids[ci])]);
  }
  CHECK(covered == G.size());
}
