#include "qschur/oracle.hpp"

#include <algorithm>

namespace qschur {

namespace {

// y * T_{d} along a reduced word of d.
HeckeElt fold_word(const HeckeElt& y, const std::vector<Gen>& word) {
  HeckeElt cur = y;
  for (Gen g : word) cur = cur.mul_gen(g);
  return cur;
}

HeckeElt coset_sum_from(Ambient type, int n, int r, const Subgroup& P1, int d_id,
                        const Subgroup& P2) {
  (void)n;
  HeckeElt x(type, r);
  for (int id : double_coset_members(P1, d_id, P2)) x.add_term(id, PolyQ(1));
  return x;
}

}  // namespace

HeckeElt double_coset_sum_B(int n, int r, const Composition& lambda, const SignedPerm& d,
                            const Composition& mu) {
  const WeylGroup& G = WeylGroup::get(Ambient::B, r);
  Subgroup P1 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, lambda));
  Subgroup P2 = enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, mu));
  int id = G.id_of(d);
  if (id < 0) throw AmbientMismatch("double_coset_sum_B: d not in W(B_r)");
  return coset_sum_from(Ambient::B, n, r, P1, id, P2);
}

HeckeElt double_coset_sum_D(int n, int r, const SignedComposition& alpha, const SignedPerm& d,
                            const SignedComposition& beta) {
  const WeylGroup& G = WeylGroup::get(Ambient::D, r);
  Subgroup P1 = enumerate_parabolic_subgroup(ParabolicSpec::typeD(n, r, alpha));
  Subgroup P2 = enumerate_parabolic_subgroup(ParabolicSpec::typeD(n, r, beta));
  int id = G.id_of(d);
  if (id < 0) throw AmbientMismatch("double_coset_sum_D: d not in W(D_r)");
  return coset_sum_from(Ambient::D, n, r, P1, id, P2);
}

// -- OracleB -------------------------------------------------------------------

OracleB::OracleB(int n, int r) : n_(n), r_(r) {
  if (r > 4) throw TooLarge("OracleB: rank budget is r <= 4");
  G_ = &WeylGroup::get(Ambient::B, r);
  lambdas_ = all_compositions(n + 1, r);
  subgroups_.reserve(lambdas_.size());
  for (const auto& la : lambdas_)
    subgroups_.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, la)));
  basis_ = enumerate_XiB(n, r);
  for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));

  auto weight_index = [&](const Composition& la) {
    for (size_t i = 0; i < lambdas_.size(); ++i)
      if (lambdas_[i] == la) return static_cast<int>(i);
    throw InvalidIndex("OracleB: weight not found");
  };

  for (size_t i = 0; i < basis_.size(); ++i) {
    const MatB& A = basis_[i];
    const SignedPerm dA = matrix_to_dA(A);
    const int did = G_->id_of(dA);
    dA_id_.push_back(did);
    row_of_.push_back(weight_index(A.row_comp()));
    col_of_.push_back(weight_index(A.col_comp()));
    const Subgroup& P1 = subgroups_[static_cast<size_t>(row_of_.back())];
    const Subgroup& P2 = subgroups_[static_cast<size_t>(col_of_.back())];
    auto members = double_coset_members(P1, did, P2);
    HeckeElt s(Ambient::B, r);
    std::vector<int> dmins;
    for (int id : members) {
      s.add_term(id, PolyQ(1));
      if (is_min_in_right_coset(P1, id)) dmins.push_back(id);
    }
    sums_.push_back(std::move(s));
    min_right_reps_.push_back(std::move(dmins));
    bucket_[{row_of_.back(), col_of_.back()}].push_back(static_cast<int>(i));
  }
}

int OracleB::index_of(const MatB& A) const {
  auto it = index_.find(A);
  return it == index_.end() ? -1 : it->second;
}

std::vector<CosetBasisIndexB> OracleB::module_basis(const Composition& mu) const {
  int mi = -1;
  for (size_t i = 0; i < lambdas_.size(); ++i)
    if (lambdas_[i] == mu) mi = static_cast<int>(i);
  if (mi < 0) throw InvalidIndex("module_basis: bad weight");
  const Subgroup& P = subgroups_[static_cast<size_t>(mi)];
  std::vector<CosetBasisIndexB> out;
  for (size_t id = 0; id < G_->size(); ++id)
    if (is_min_in_right_coset(P, static_cast<int>(id)))
      out.push_back(CosetBasisIndexB{mu, G_->elems[id]});
  return out;
}

SchurB OracleB::product(const MatB& L, const MatB& R) const {
  const int li = index_of(L), ri = index_of(R);
  if (li < 0 || ri < 0) throw InvalidIndex("OracleB::product: index outside basis");
  SchurB out(n_, r_);
  if (col_of_[static_cast<size_t>(li)] != row_of_[static_cast<size_t>(ri)]) return out;

  // Y = T_{coset(L)} * sum over minimal right reps of coset(R).
  HeckeElt Y(Ambient::B, r_);
  for (int did : min_right_reps_[static_cast<size_t>(ri)])
    Y += fold_word(sums_[static_cast<size_t>(li)], G_->word_of(did));

  HeckeElt residual = Y;
  const auto key = std::make_pair(row_of_[static_cast<size_t>(li)], col_of_[static_cast<size_t>(ri)]);
  auto bit = bucket_.find(key);
  if (bit != bucket_.end()) {
    for (int cand : bit->second) {
      PolyQ c = Y.coefficient(dA_id_[static_cast<size_t>(cand)]);
      if (c.is_zero()) continue;
      out.add(basis_[static_cast<size_t>(cand)], c);
      residual -= sums_[static_cast<size_t>(cand)].scaled(c);
    }
  }
  if (!residual.is_zero())
    throw InconsistentExpansion("OracleB: nonzero residual after re-expansion");
  return out;
}

// -- OracleD -------------------------------------------------------------------

OracleD::OracleD(int n, int r) : n_(n), r_(r) {
  if (r > 4) throw TooLarge("OracleD: rank budget is r = 4");
  if (r < 4) throw InvalidIndex("OracleD: type-D products need r >= 4");
  G_ = &WeylGroup::get(Ambient::D, r);
  alphas_ = all_signed_compositions(n, r);
  subgroups_.reserve(alphas_.size());
  for (const auto& al : alphas_)
    subgroups_.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeD(n, r, al)));
  basis_ = enumerate_XiD(n, r);
  for (size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));

  auto weight_index = [&](const SignedComposition& al) {
    for (size_t i = 0; i < alphas_.size(); ++i)
      if (alphas_[i] == al) return static_cast<int>(i);
    throw InvalidIndex("OracleD: weight not found");
  };

  for (size_t i = 0; i < basis_.size(); ++i) {
    EtaTriple t = eta(basis_[i]);
    const int did = G_->id_of(t.d);
    d_id_.push_back(did);
    row_of_.push_back(weight_index(t.alpha));
    col_of_.push_back(weight_index(t.beta));
    etas_.push_back(std::move(t));
    const Subgroup& P1 = subgroups_[static_cast<size_t>(row_of_.back())];
    const Subgroup& P2 = subgroups_[static_cast<size_t>(col_of_.back())];
    auto members = double_coset_members(P1, did, P2);
    HeckeElt s(Ambient::D, r);
    std::vector<int> dmins;
    for (int id : members) {
      s.add_term(id, PolyQ(1));
      if (is_min_in_right_coset(P1, id)) dmins.push_back(id);
    }
    sums_.push_back(std::move(s));
    min_right_reps_.push_back(std::move(dmins));
    bucket_[{row_of_.back(), col_of_.back()}].push_back(static_cast<int>(i));
  }
}

int OracleD::index_of(const MatD& A) const {
  auto it = index_.find(A);
  return it == index_.end() ? -1 : it->second;
}

std::vector<CosetBasisIndexD> OracleD::module_basis(const SignedComposition& beta) const {
  int mi = -1;
  for (size_t i = 0; i < alphas_.size(); ++i)
    if (alphas_[i] == beta) mi = static_cast<int>(i);
  if (mi < 0) throw InvalidIndex("module_basis: bad weight");
  const Subgroup& P = subgroups_[static_cast<size_t>(mi)];
  std::vector<CosetBasisIndexD> out;
  for (size_t id = 0; id < G_->size(); ++id)
    if (is_min_in_right_coset(P, static_cast<int>(id)))
      out.push_back(CosetBasisIndexD{beta, G_->elems[id]});
  return out;
}

SchurD OracleD::product(const MatD& L, const MatD& R) const {
  const int li = index_of(L), ri = index_of(R);
  if (li < 0 || ri < 0) throw InvalidIndex("OracleD::product: index outside basis");
  SchurD out(n_, r_);
  if (col_of_[static_cast<size_t>(li)] != row_of_[static_cast<size_t>(ri)]) return out;

  HeckeElt Y(Ambient::D, r_);
  for (int did : min_right_reps_[static_cast<size_t>(ri)])
    Y += fold_word(sums_[static_cast<size_t>(li)], G_->word_of(did));

  HeckeElt residual = Y;
  const auto key = std::make_pair(row_of_[static_cast<size_t>(li)], col_of_[static_cast<size_t>(ri)]);
  auto bit = bucket_.find(key);
  if (bit != bucket_.end()) {
    for (int cand : bit->second) {
      PolyQ c = Y.coefficient(d_id_[static_cast<size_t>(cand)]);
      if (c.is_zero()) continue;
      out.add(basis_[static_cast<size_t>(cand)], c);
      residual -= sums_[static_cast<size_t>(cand)].scaled(c);
    }
  }
  if (!residual.is_zero())
    throw InconsistentExpansion("OracleD: nonzero residual after re-expansion");
  return out;
}

}  // namespace qschur
