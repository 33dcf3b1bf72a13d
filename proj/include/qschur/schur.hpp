#pragma once

// The q-Schur algebras: natural-basis elements with Z[q] coefficients,
// the structure-constant polynomials of the fundamental products, the
// single-shift product dispatcher for both the type-B and the type-D
// families, dimension formulas, and the embedding of the type-B algebra
// into the type-D one.

#include <map>
#include <optional>
#include <string>

#include "qschur/matcomb.hpp"
#include "qschur/polyq.hpp"

namespace qschur {

template <class Index>
class SchurElt {
 public:
  SchurElt(int n, int r) : n_(n), r_(r) {}

  int n() const { return n_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Index, PolyQ>& terms() const { return terms_; }
  PolyQ coefficient(const Index& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? PolyQ() : it->second;
  }

  void add(const Index& k, const PolyQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  SchurElt& operator+=(const SchurElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  SchurElt& operator-=(const SchurElt& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  SchurElt scaled(const PolyQ& c) const {
    SchurElt out(n_, r_);
    if (!c.is_zero())
      for (const auto& [k, v] : terms_) out.add(k, v * c);
    return out;
  }
  bool operator==(const SchurElt& o) const {
    return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
  }
  bool operator!=(const SchurElt& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")*e" + k.str();
    }
    return s;
  }

 private:
  int n_, r_;
  std::map<Index, PolyQ> terms_;
};

using SchurB = SchurElt<MatB>;
using SchurD = SchurElt<MatD>;

// g_{h,A,p}: q^{sum_{j>p} a_{h,j}} [[a_{h,p}+1]] when a_{h+1,p} > 0, else 0.
PolyQ coef_raise(const MatB& A, int h, int p);
// g'_{h,A,p-bar}: the three-branch lowering coefficient, with the extra
// central q^{a/2} summand at (h,p) = (n,n+1).
PolyQ coef_lower(const MatB& A, int h, int p);

enum class FundKind : uint8_t { Diagonal, Raise, Lower };
struct FundShape {
  FundKind kind;
  int h;  // 0 for Diagonal
};
// Recognizes diagonal matrices and matrices differing from a diagonal by a
// single E^theta shift; nullopt otherwise.
std::optional<FundShape> fundamental_shape(const MatB& L);

// e_L * e_A in the type-B algebra; zero unless co(L) = ro(A).
// NotFundamental when L is not of single-shift (or diagonal) form.
SchurB mult_fund_B(const MatB& L, const MatB& A);

struct DProduct {
  SchurD value;
  // Structural provenance: direction, left and right class, h position,
  // plus ".split" when a non-split index expanded into a sign pair and
  // ".half" when a halved coefficient fired.
  std::string label;
};
// phi_L * phi_A in the type-D algebra (r >= 4); zero with label
// "weight-mismatch" when cw(L) != rw(A).
DProduct mult_fund_D(const MatD& L, const MatD& A);

inline unsigned long long dim_B(int n, int r) { return dim_XiB(n, r); }
inline unsigned long long dim_D(int n, int r) { return dim_XiD(n, r); }

// e_A viewed in the type-D algebra: phi of the dotted index, or the sum of
// the two sign-tagged indices when the central entry vanishes.
SchurD embed_B_in_D(const MatB& A);
SchurD embed(const SchurB& x);

}  // namespace qschur
