#pragma once

// The matrix index sets Xi_{N,2r} (centro-symmetric natural matrices) and
// their signed refinement used by the type-D basis; the coset<->matrix
// bijections; weights, corner sums, sign classes, and the single-shift
// matrices used by the fundamental multiplication formulas.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qschur/weyl.hpp"

namespace qschur {

// Class of A under the tests (lambda_{n+1} ? 0, a_{n+1,n+1} ? 0, mu_{n+1} ? 0)
// where hat(lambda) = ro(A), hat(mu) = co(A).
// Dot   : central entry nonzero.
// OOO   : all three vanish.            OOD : only mu_{n+1} nonzero.
// DOO   : only lambda_{n+1} nonzero.   DOD : lambda and mu parts nonzero.
enum class MatClass : uint8_t { Dot, OOO, OOD, DOO, DOD };

std::string mat_class_name(MatClass c);

class MatB {
 public:
  MatB(int n, int r, std::vector<int> entries);  // row-major N*N, N = 2n+1
  static MatB diag(int n, int r, const std::vector<int>& hat_vector);
  static MatB from_rows(int n, int r, const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int r() const { return r_; }
  int N() const { return 2 * n_ + 1; }
  int at(int i, int j) const {  // 1-based
    return a_[static_cast<size_t>((i - 1) * N() + (j - 1))];
  }
  const std::vector<int>& entries() const { return a_; }

  std::vector<int> ro() const;  // row sums, = hat(row_comp())
  std::vector<int> co() const;
  Composition row_comp() const;
  Composition col_comp() const;
  int center() const { return at(n_ + 1, n_ + 1); }
  // Entry sum of the upper-right n x n corner block.
  int corner_sum() const;
  int sgn() const { return corner_sum() % 2 == 0 ? +1 : -1; }
  MatClass classify() const;
  bool is_diagonal() const;
  MatB transpose() const;

  // Row-major partial sums: rtilde(i,j) = sum of entries up to (i,j) reading
  // row by row; rtilde(i,0) = sum of rows < i. Column-major likewise.
  int rtilde(int i, int j) const;
  int ctilde(int i, int j) const;
  // I_{j,l} = [rtilde(j,l-1)+1, rtilde(j,l-1)+a_{j,l}] as a (begin,end] pair.
  std::pair<int, int> block_interval(int j, int l) const;

  bool operator==(const MatB& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const MatB& o) const { return !(*this == o); }
  bool operator<(const MatB& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    if (r_ != o.r_) return r_ < o.r_;
    return a_ < o.a_;
  }
  std::string str() const;

 private:
  int n_, r_;
  std::vector<int> a_;
};

std::vector<MatB> enumerate_XiB(int n, int r, size_t max_size = 2000000);

// The map from coset triples to intersection-cardinality matrices, and its
// inverse built blockwise from the partial-sum intervals.
MatB coset_to_matrix(const Composition& lambda, const SignedPerm& d, const Composition& mu);
SignedPerm matrix_to_dA(const MatB& A);

// A +- (E^theta_{h,p} - E^theta_{h+1,p}); InvalidShift when an entry would go
// negative. shift_up needs a_{h+1,p} >= 1 (>= 2 at the center); shift_down
// needs a_{h,p} >= 1.
MatB shift_up(const MatB& A, int h, int p);
MatB shift_down(const MatB& A, int h, int p);
std::optional<MatB> try_shift_up(const MatB& A, int h, int p);
std::optional<MatB> try_shift_down(const MatB& A, int h, int p);

// Signed/dotted index: tag is Dot iff the central entry is nonzero, and a
// sign pair with e1*e2 = sgn(A) otherwise.
struct Tag {
  bool dot;
  int e1, e2;  // +1 / -1, meaningful when !dot

  static Tag Dot() { return Tag{true, 0, 0}; }
  static Tag Signs(int e1, int e2) { return Tag{false, e1, e2}; }
  bool operator==(const Tag& o) const { return dot == o.dot && e1 == o.e1 && e2 == o.e2; }
  bool operator<(const Tag& o) const {
    if (dot != o.dot) return dot < o.dot;
    if (e1 != o.e1) return e1 < o.e1;
    return e2 < o.e2;
  }
  std::string str() const;
};

class MatD {
 public:
  MatD(MatB base, Tag tag);
  static MatD dotted(MatB base) { return MatD(std::move(base), Tag::Dot()); }
  static MatD signed_pair(MatB base, int e1, int e2) {
    return MatD(std::move(base), Tag::Signs(e1, e2));
  }

  const MatB& base() const { return base_; }
  const Tag& tag() const { return tag_; }
  int n() const { return base_.n(); }
  int r() const { return base_.r(); }

  bool operator==(const MatD& o) const { return tag_ == o.tag_ && base_ == o.base_; }
  bool operator!=(const MatD& o) const { return !(*this == o); }
  bool operator<(const MatD& o) const {
    if (base_ != o.base_) return base_ < o.base_;
    return tag_ < o.tag_;
  }
  std::string str() const;

 private:
  MatB base_;
  Tag tag_;
};

std::vector<MatD> enumerate_XiD(int n, int r, size_t max_size = 2000000);
// The two (or one) tagged indices over a given base matrix.
std::vector<MatD> tags_over(const MatB& A);

// Row/column weights in Lambda^D(n,r): the mark is Dot when the corresponding
// part lambda_{n+1} (mu_{n+1}) is nonzero, and otherwise the first (second)
// sign of the tag.
SignedComposition rw(const MatD& A);
SignedComposition cw(const MatD& A);

// The diagonal tagged index whose eta-image is (alpha, identity, alpha).
MatD weight_idempotent_index(const SignedComposition& alpha, int n, int r);

struct EtaTriple {
  SignedComposition alpha;
  SignedPerm d;
  SignedComposition beta;

  bool operator==(const EtaTriple& o) const {
    return alpha == o.alpha && d == o.d && beta == o.beta;
  }
  std::string str() const;
};

// The bijection between tagged indices and labelled double cosets of W(D_r),
// computed by locating distinguished representatives inside explicitly
// constructed subsets. Requires r >= 2.
EtaTriple eta(const MatD& A, size_t max_size = 200000);
MatD eta_inv(const EtaTriple& t, int n, int r, size_t max_size = 200000);

// Closed-form counts.
unsigned long long binomial(int a, int b);
unsigned long long dim_XiB(int n, int r);   // #Xi_{N,2r}
unsigned long long dim_XiD(int n, int r);   // #XiCheck(n,r)
unsigned long long count_class_DOD(int n, int r);  // #(DOD class), closed form

}  // namespace qschur
