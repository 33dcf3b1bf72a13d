#pragma once

// Brute-force ground truth for Schur-algebra products: basis elements are
// realized as double-coset sums in the Hecke algebra, composed there, and the
// result re-expanded in the natural basis by reading coefficients at
// distinguished representatives, with an exactness check by subtraction.

#include <map>
#include <vector>

#include "qschur/hecke.hpp"
#include "qschur/matcomb.hpp"
#include "qschur/schur.hpp"

namespace qschur {

// Basis element of a q-permutation module: a summand label and a minimal
// right-coset representative.
struct CosetBasisIndexB {
  Composition summand;
  SignedPerm rep;
};
struct CosetBasisIndexD {
  SignedComposition summand;
  SignedPerm rep;
};

// Sum of T_w over the (lambda, mu) double coset of d, coefficient 1 each.
HeckeElt double_coset_sum_B(int n, int r, const Composition& lambda, const SignedPerm& d,
                            const Composition& mu);
HeckeElt double_coset_sum_D(int n, int r, const SignedComposition& alpha, const SignedPerm& d,
                            const SignedComposition& beta);

class OracleB {
 public:
  // Rank budget: r <= 4 (TooLarge beyond).
  OracleB(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<MatB>& basis() const { return basis_; }
  const std::vector<Composition>& weights() const { return lambdas_; }
  int index_of(const MatB& A) const;

  const HeckeElt& coset_sum(int basis_idx) const { return sums_[static_cast<size_t>(basis_idx)]; }
  // Exact product e_L * e_R; InconsistentExpansion if the re-expansion leaves
  // a residual.
  SchurB product(const MatB& L, const MatB& R) const;

  // Module basis x_mu T_d of the summand labelled mu.
  std::vector<CosetBasisIndexB> module_basis(const Composition& mu) const;

 private:
  int n_, r_;
  const WeylGroup* G_;
  std::vector<Composition> lambdas_;
  std::vector<Subgroup> subgroups_;
  std::vector<MatB> basis_;
  std::map<MatB, int> index_;
  std::vector<int> dA_id_, row_of_, col_of_;
  std::vector<std::vector<int>> min_right_reps_;  // per basis index
  std::vector<HeckeElt> sums_;
  std::map<std::pair<int, int>, std::vector<int>> bucket_;
};

class OracleD {
 public:
  // Rank budget: exactly r = 4 (TooLarge above, InvalidIndex below).
  OracleD(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<MatD>& basis() const { return basis_; }
  const std::vector<SignedComposition>& weights() const { return alphas_; }
  int index_of(const MatD& A) const;
  const EtaTriple& eta_of(int basis_idx) const { return etas_[static_cast<size_t>(basis_idx)]; }

  const HeckeElt& coset_sum(int basis_idx) const { return sums_[static_cast<size_t>(basis_idx)]; }
  SchurD product(const MatD& L, const MatD& R) const;

  std::vector<CosetBasisIndexD> module_basis(const SignedComposition& beta) const;

 private:
  int n_, r_;
  const WeylGroup* G_;
  std::vector<SignedComposition> alphas_;
  std::vector<Subgroup> subgroups_;
  std::vector<MatD> basis_;
  std::map<MatD, int> index_;
  std::vector<EtaTriple> etas_;
  std::vector<int> d_id_, row_of_, col_of_;
  std::vector<std::vector<int>> min_right_reps_;
  std::vector<HeckeElt> sums_;
  std::map<std::pair<int, int>, std::vector<int>> bucket_;
};

}  // namespace qschur
