#pragma once

// Finite-geometry oracle over F_p (odd p): subspaces in reduced row-echelon
// canonical form, isotropic flags with their perp-extension, the orbit
// invariant matrix of a flag pair, sign labels for special-orthogonal orbit
// splitting, and convolution structure constants by direct counting.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qschur/matcomb.hpp"

namespace qschur {

// Row-major matrix over F_p. 0-based.
struct FpMat {
  int p = 3;
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  FpMat() = default;
  FpMat(int p_, int rows_, int cols_) : p(p_), rows(rows_), cols(cols_), a(static_cast<size_t>(rows_ * cols_), 0) {}
  int& at(int i, int j) { return a[static_cast<size_t>(i * cols + j)]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

// In-place reduced row echelon form; returns rank.
int rref(FpMat& m);
int rank_of(FpMat m);
// Basis (as rows, canonicalized) of the right kernel {x : m x = 0}.
FpMat kernel(const FpMat& m);
FpMat stack(const FpMat& a, const FpMat& b);

class Subspace {
 public:
  // Canonicalizes the spanning rows. dim_ambient = 2r.
  Subspace(int p, int dim_ambient, FpMat spanning_rows);
  static Subspace zero(int p, int dim_ambient);
  static Subspace full(int p, int dim_ambient);
  static Subspace coordinate(int p, int dim_ambient, const std::vector<int>& unit_indices);

  int p() const { return basis_.p; }
  int ambient() const { return basis_.cols; }
  int dim() const { return basis_.rows; }
  const FpMat& basis() const { return basis_; }

  bool contains(const std::vector<int>& v) const;
  bool subspace_of(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis_.a == o.basis_.a && basis_.rows == o.basis_.rows; }
  std::string key() const;

 private:
  FpMat basis_;  // RREF, no zero rows
};

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
int dim_intersect(const Subspace& u, const Subspace& v);
// Orthogonal complement w.r.t. the split symmetric form J (antidiagonal).
Subspace perp(const Subspace& s);
bool is_isotropic(const Subspace& s);

long long count_isotropic_lines(int p, int r);

// n-step isotropic flag extended to N = 2n+1 steps by perps.
class IsoFlag {
 public:
  // pure: F_1 <= ... <= F_n isotropic; the extension is computed.
  IsoFlag(int n, int r, std::vector<Subspace> pure);

  int n() const { return n_; }
  int r() const { return r_; }
  int N() const { return 2 * n_ + 1; }
  // Step i for 0 <= i <= N (F_0 = 0, F_N = full).
  const Subspace& step(int i) const { return steps_[static_cast<size_t>(i)]; }
  std::vector<int> dim_vector() const;  // hat-shaped, length N
  std::string key() const;

 private:
  int n_, r_;
  std::vector<Subspace> steps_;
};

// All n-step isotropic flags in F_p^{2r}.
struct FlagVariety {
  int n, r, p;
  std::vector<IsoFlag> flags;
  std::unordered_map<std::string, int> index;

  static FlagVariety build(int n, int r, int p, size_t max_size = 100000);
  int id_of(const IsoFlag& f) const;
};

// The orbit invariant: a_{ij} = dim(F_{i,j}/F_{i,j-1}) for the pairwise
// refinement F_{i,j} = F_{i-1} + F_i cap F'_j.
MatB orbit_matrix(const IsoFlag& F, const IsoFlag& Fp);

// Standard-basis pair with orbit_matrix == A.
std::pair<IsoFlag, IsoFlag> make_orbit_rep(const MatB& A, int p);

// dim((F_n + F_{n+1} cap F'_{n+1}) cap M_r) for the standard maximal
// isotropic M_r.
int split_dim(const IsoFlag& F, const IsoFlag& Fp);
// Dot when the central entry of the orbit matrix is nonzero; otherwise the
// sign pair read from the parities of split_dim both ways.
Tag so_labels(const IsoFlag& F, const IsoFlag& Fp);

// Precomputed pair classification over a flag variety.
struct GeomTables {
  const FlagVariety* X = nullptr;
  std::vector<MatB> mats;           // distinct orbit-invariant values
  std::map<MatB, int> mat_index;
  std::vector<int32_t> cls;         // |X|^2, row-major by (x,y)
  std::vector<int8_t> eps1, eps2;   // +1/-1, 0 on non-split pairs

  static GeomTables build(const FlagVariety& X, bool parallel);
  int cls_at(int x, int y) const { return cls[static_cast<size_t>(x) * X->flags.size() + static_cast<size_t>(y)]; }
  std::pair<int, int> eps_at(int x, int y) const {
    size_t k = static_cast<size_t>(x) * X->flags.size() + static_cast<size_t>(y);
    return {eps1[k], eps2[k]};
  }
};

// #{z : (x,z) in O_L, (z,y) in O_R} for (x,y) a representative pair of O_W.
long long convolution_constant_B(const GeomTables& T, const MatB& L, const MatB& R, const MatB& W);

// The special-orthogonal refinement: orbits are tagged, membership checks the
// sign labels as well. The count is independent of the representative pair
// (checked by the geometry suite); rep_index selects among them.
long long convolution_constant_D(const GeomTables& T, const MatD& L, const MatD& R, const MatD& W,
                                 int rep_index = 0);
// Number of pairs in the tagged orbit of W.
long long tagged_orbit_size(const GeomTables& T, const MatD& W);

// Counts of intermediate flags split by the sign label of (E, F'), for the
// halving claim; the pair must realize the central lowering shift of A.
std::pair<long long, long long> verify_halving(const GeomTables& T, const MatB& A);

}  // namespace qschur
