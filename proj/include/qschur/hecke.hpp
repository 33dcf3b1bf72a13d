#pragma once

// Hecke algebras over Z[q] on the T_w basis: type B_r with unequal
// parameters (q, 1) and type D_r, both realized on enumerated Weyl group
// tables. Terms are keyed by element id for speed; the JSON layer converts
// to one-line permutations.

#include <map>

#include "qschur/polyq.hpp"
#include "qschur/weyl.hpp"

namespace qschur {

// The parameter table {q_s}: data, not code. Type B maps s_1..s_{r-1} to q
// and s_r to 1; type D maps every generator to q.
struct HeckeParams {
  std::vector<PolyQ> q_of_gen;  // indexed like WeylGroup::gens
  static HeckeParams standard(const WeylGroup& G);
};

class HeckeElt {
 public:
  HeckeElt(Ambient type, int r);

  Ambient type() const { return G_->type; }
  int rank() const { return G_->r; }
  const WeylGroup& group() const { return *G_; }

  static HeckeElt zero(Ambient type, int r) { return HeckeElt(type, r); }
  static HeckeElt unit(Ambient type, int r);
  static HeckeElt basis(Ambient type, int r, const SignedPerm& w);
  static HeckeElt basis_id(Ambient type, int r, int elem_id);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<int, PolyQ>& terms() const { return terms_; }
  PolyQ coefficient(int elem_id) const;
  PolyQ coefficient(const SignedPerm& w) const;
  void add_term(int elem_id, const PolyQ& c);

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { a += b; return a; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { a -= b; return a; }
  HeckeElt scaled(const PolyQ& c) const;
  bool operator==(const HeckeElt& o) const;

  // Right multiplication by T_s for a generator label of the ambient type.
  HeckeElt mul_gen(Gen g) const;
  // Product, expanding the right factor along stored reduced words.
  HeckeElt mul(const HeckeElt& o) const;
  // The anti-involution T_w -> T_{w^{-1}}.
  HeckeElt tau() const;

  std::string str() const;

 private:
  const WeylGroup* G_;
  HeckeParams params_;
  std::map<int, PolyQ> terms_;  // element id -> coefficient, no zeros stored
};

// Sum of T_w over a parabolic subgroup (x_lambda resp. xcheck_alpha).
HeckeElt x_parabolic(const ParabolicSpec& spec, size_t max_size = 200000);
// Sum of T_w over a subgroup given by ids.
HeckeElt subgroup_sum(Ambient type, int r, const Subgroup& H);

}  // namespace qschur
