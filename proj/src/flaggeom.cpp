#include "qschur/flaggeom.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace qschur {

int rref(FpMat& m) {
  const int p = m.p;
  int pivot_row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < m.rows; ++i)
      if (m.at(i, col) != 0) { sel = i; break; }
    if (sel < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.a[static_cast<size_t>(sel * m.cols + j)], m.a[static_cast<size_t>(pivot_row * m.cols + j)]);
    const int inv = [&] {
      int a = m.at(pivot_row, col) % p, t = 1;
      for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) t = t * a % p;
        a = a * a % p;
      }
      return t;
    }();
    for (int j = col; j < m.cols; ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == pivot_row) continue;
      const int f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = ((m.at(i, j) - f * m.at(pivot_row, j)) % p + p) % p;
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivot_row;
}

int rank_of(FpMat m) { return rref(m); }

FpMat kernel(const FpMat& m) {
  FpMat red = m;
  const int rk = rref(red);
  const int p = m.p;
  std::vector<int> pivot_col_of_row(static_cast<size_t>(rk), -1);
  std::vector<char> is_pivot(static_cast<size_t>(m.cols), 0);
  for (int i = 0; i < rk; ++i) {
    for (int j = 0; j < m.cols; ++j)
      if (red.at(i, j) != 0) {
        pivot_col_of_row[static_cast<size_t>(i)] = j;
        is_pivot[static_cast<size_t>(j)] = 1;
        break;
      }
  }
  FpMat ker(p, m.cols - rk, m.cols);
  int kr = 0;
  for (int free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    ker.at(kr, free_col) = 1;
    for (int i = 0; i < rk; ++i) {
      const int pc = pivot_col_of_row[static_cast<size_t>(i)];
      ker.at(kr, pc) = (p - red.at(i, free_col) % p) % p;
    }
    ++kr;
  }
  rref(ker);
  return ker;
}

FpMat stack(const FpMat& a, const FpMat& b) {
  FpMat out(a.p, a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), out.a.begin());
  std::copy(b.a.begin(), b.a.end(), out.a.begin() + a.a.size());
  return out;
}

Subspace::Subspace(int p, int dim_ambient, FpMat rows) {
  if (p < 3 || p % 2 == 0) throw InvalidIndex("Subspace: p must be an odd prime");
  rows.p = p;
  rows.cols = dim_ambient;
  const int rk = rref(rows);
  FpMat b(p, rk, dim_ambient);
  std::copy(rows.a.begin(), rows.a.begin() + static_cast<long>(rk) * dim_ambient, b.a.begin());
  basis_ = std::move(b);
}

Subspace Subspace::zero(int p, int dim_ambient) { return Subspace(p, dim_ambient, FpMat(p, 0, dim_ambient)); }

Subspace Subspace::full(int p, int dim_ambient) {
  FpMat m(p, dim_ambient, dim_ambient);
  for (int i = 0; i < dim_ambient; ++i) m.at(i, i) = 1;
  return Subspace(p, dim_ambient, std::move(m));
}

Subspace Subspace::coordinate(int p, int dim_ambient, const std::vector<int>& unit_indices) {
  FpMat m(p, static_cast<int>(unit_indices.size()), dim_ambient);
  for (size_t i = 0; i < unit_indices.size(); ++i) m.at(static_cast<int>(i), unit_indices[i] - 1) = 1;
  return Subspace(p, dim_ambient, std::move(m));
}

bool Subspace::contains(const std::vector<int>& v) const {
  FpMat m = basis_;
  FpMat vm(p(), 1, ambient());
  for (int j = 0; j < ambient(); ++j) vm.at(0, j) = ((v[static_cast<size_t>(j)] % p()) + p()) % p();
  return rank_of(stack(m, vm)) == dim();
}

bool Subspace::subspace_of(const Subspace& o) const {
  return rank_of(stack(o.basis_, basis_)) == o.dim();
}

std::string Subspace::key() const {
  std::string s;
  s.reserve(basis_.a.size() + 2);
  s.push_back(static_cast<char>('0' + basis_.rows));
  s.push_back(':');
  for (int v : basis_.a) s.push_back(static_cast<char>('0' + v));
  return s;
}

Subspace sum(const Subspace& u, const Subspace& v) {
  return Subspace(u.p(), u.ambient(), stack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  // Left kernel of [U; V] gives the coefficient pairs (x, y) with xU = -yV.
  const FpMat st = stack(u.basis(), v.basis());
  FpMat stT(st.p, st.cols, st.rows);
  for (int i = 0; i < st.rows; ++i)
    for (int j = 0; j < st.cols; ++j) stT.at(j, i) = st.at(i, j);
  FpMat coef = kernel(stT);  // rows: (x | y)
  FpMat out(u.p(), coef.rows, u.ambient());
  for (int i = 0; i < coef.rows; ++i)
    for (int k = 0; k < u.dim(); ++k) {
      const int c = coef.at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < u.ambient(); ++j)
        out.at(i, j) = (out.at(i, j) + c * u.basis().at(k, j)) % u.p();
    }
  return Subspace(u.p(), u.ambient(), std::move(out));
}

int dim_intersect(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - rank_of(stack(u.basis(), v.basis()));
}

Subspace perp(const Subspace& s) {
  // x in perp iff (S J) x = 0; J is the antidiagonal.
  const int m = s.ambient();
  FpMat sj(s.p(), s.dim(), m);
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < m; ++j) sj.at(i, j) = s.basis().at(i, m - 1 - j);
  return Subspace(s.p(), m, kernel(sj));
}

bool is_isotropic(const Subspace& s) {
  const int m = s.ambient();
  for (int i = 0; i < s.dim(); ++i)
    for (int k = i; k < s.dim(); ++k) {
      int acc = 0;
      for (int j = 0; j < m; ++j) acc = (acc + s.basis().at(i, j) * s.basis().at(k, m - 1 - j)) % s.p();
      if (acc != 0) return false;
    }
  return true;
}

long long count_isotropic_lines(int p, int r) {
  if (p % 2 == 0) throw InvalidIndex("count_isotropic_lines: p must be odd");
  const int m = 2 * r;
  long long count = 0;
  std::vector<int> v(static_cast<size_t>(m), 0);
  // Canonical line representatives: first nonzero coordinate equals 1.
  std::function<void(int, bool)> rec = [&](int pos, bool leading) {
    if (pos == m) {
      if (leading) return;  // zero vector
      int acc = 0;
      for (int j = 0; j < m; ++j) acc = (acc + v[static_cast<size_t>(j)] * v[static_cast<size_t>(m - 1 - j)]) % p;
      if (acc == 0) ++count;
      return;
    }
    if (leading) {
      v[static_cast<size_t>(pos)] = 0;
      rec(pos + 1, true);
      v[static_cast<size_t>(pos)] = 1;
      rec(pos + 1, false);
      v[static_cast<size_t>(pos)] = 0;
    } else {
      for (int c = 0; c < p; ++c) {
        v[static_cast<size_t>(pos)] = c;
        rec(pos + 1, false);
      }
      v[static_cast<size_t>(pos)] = 0;
    }
  };
  rec(0, true);
  return count;
}

IsoFlag::IsoFlag(int n, int r, std::vector<Subspace> pure) : n_(n), r_(r) {
  if (n < 1) throw InvalidIndex("IsoFlag: need n >= 1");
  if (static_cast<int>(pure.size()) != n) throw InvalidIndex("IsoFlag: need n pure steps");
  const int p = pure.front().p();
  const int m = 2 * r;
  steps_.reserve(static_cast<size_t>(N()) + 1);
  steps_.push_back(Subspace::zero(p, m));
  for (int i = 0; i < n; ++i) {
    if (!is_isotropic(pure[static_cast<size_t>(i)])) throw InvalidIndex("IsoFlag: step not isotropic");
    if (i > 0 && !pure[static_cast<size_t>(i - 1)].subspace_of(pure[static_cast<size_t>(i)]))
      throw InvalidIndex("IsoFlag: steps not nested");
    steps_.push_back(pure[static_cast<size_t>(i)]);
  }
  for (int i = 1; i <= n; ++i) steps_.push_back(perp(steps_[static_cast<size_t>(n + 1 - i)]));
  steps_.push_back(Subspace::full(p, m));
}

std::vector<int> IsoFlag::dim_vector() const {
  std::vector<int> d;
  for (int i = 1; i <= N(); ++i)
    d.push_back(steps_[static_cast<size_t>(i)].dim() - steps_[static_cast<size_t>(i - 1)].dim());
  return d;
}

std::string IsoFlag::key() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    s += steps_[static_cast<size_t>(i)].key();
    s.push_back('|');
  }
  return s;
}

FlagVariety FlagVariety::build(int n, int r, int p, size_t max_size) {
  FlagVariety X;
  X.n = n;
  X.r = r;
  X.p = p;
  const int m = 2 * r;

  // Isotropic subspaces by dimension, via one-dimensional extensions.
  std::vector<std::vector<Subspace>> iso(static_cast<size_t>(r) + 1);
  iso[0].push_back(Subspace::zero(p, m));
  for (int d = 1; d <= r; ++d) {
    std::set<std::string> seen;
    for (const Subspace& s : iso[static_cast<size_t>(d - 1)]) {
      const Subspace sp = perp(s);
      // candidate vectors in s^perp, canonical leading-1 form
      std::vector<int> coef(static_cast<size_t>(sp.dim()), 0);
      std::function<void(int, bool)> rec = [&](int pos, bool leading) {
        if (pos == sp.dim()) {
          if (leading) return;
          std::vector<int> v(static_cast<size_t>(m), 0);
          for (int k = 0; k < sp.dim(); ++k) {
            if (coef[static_cast<size_t>(k)] == 0) continue;
            for (int j = 0; j < m; ++j)
              v[static_cast<size_t>(j)] = (v[static_cast<size_t>(j)] + coef[static_cast<size_t>(k)] * sp.basis().at(k, j)) % p;
          }
          int norm = 0;
          for (int j = 0; j < m; ++j) norm = (norm + v[static_cast<size_t>(j)] * v[static_cast<size_t>(m - 1 - j)]) % p;
          if (norm != 0) return;
          if (s.contains(v)) return;
          FpMat rows(p, s.dim() + 1, m);
          std::copy(s.basis().a.begin(), s.basis().a.end(), rows.a.begin());
          for (int j = 0; j < m; ++j) rows.at(s.dim(), j) = v[static_cast<size_t>(j)];
          Subspace ext(p, m, std::move(rows));
          if (seen.insert(ext.key()).second) iso[static_cast<size_t>(d)].push_back(std::move(ext));
          return;
        }
        if (leading) {
          coef[static_cast<size_t>(pos)] = 0;
          rec(pos + 1, true);
          coef[static_cast<size_t>(pos)] = 1;
          rec(pos + 1, false);
          coef[static_cast<size_t>(pos)] = 0;
        } else {
          for (int c = 0; c < p; ++c) {
            coef[static_cast<size_t>(pos)] = c;
            rec(pos + 1, false);
          }
          coef[static_cast<size_t>(pos)] = 0;
        }
      };
      rec(0, true);
      if (iso[static_cast<size_t>(d)].size() > max_size) throw TooLarge("FlagVariety: too many isotropic subspaces");
    }
  }

  // Chains with prescribed dimensions, one per composition.
  for (const auto& la : all_compositions(n + 1, r)) {
    const auto dims = la.partial_sums();  // first n entries are pure-step dims
    std::vector<Subspace> chain;
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        X.flags.emplace_back(n, r, chain);
        if (X.flags.size() > max_size) throw TooLarge("FlagVariety: budget exceeded");
        return;
      }
      const int d = dims[static_cast<size_t>(i)];
      for (const Subspace& s : iso[static_cast<size_t>(d)]) {
        if (i > 0 && !chain.back().subspace_of(s)) continue;
        chain.push_back(s);
        rec(i + 1);
        chain.pop_back();
      }
    };
    rec(0);
  }
  for (size_t i = 0; i < X.flags.size(); ++i) X.index.emplace(X.flags[i].key(), static_cast<int>(i));
  return X;
}

int FlagVariety::id_of(const IsoFlag& f) const {
  auto it = index.find(f.key());
  return it == index.end() ? -1 : it->second;
}

MatB orbit_matrix(const IsoFlag& F, const IsoFlag& Fp) {
  const int N = F.N();
  const int n = F.n();
  // D(i,j) = dim(F_i cap F'_j); a_{ij} = D(i,j)-D(i-1,j)-D(i,j-1)+D(i-1,j-1).
  std::vector<std::vector<int>> D(static_cast<size_t>(N) + 1, std::vector<int>(static_cast<size_t>(N) + 1, 0));
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) D[static_cast<size_t>(i)][static_cast<size_t>(j)] = dim_intersect(F.step(i), Fp.step(j));
  std::vector<int> e(static_cast<size_t>(N * N), 0);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      e[static_cast<size_t>((i - 1) * N + (j - 1))] =
          D[static_cast<size_t>(i)][static_cast<size_t>(j)] - D[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] -
          D[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] + D[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  return MatB(n, F.r(), std::move(e));
}

std::pair<IsoFlag, IsoFlag> make_orbit_rep(const MatB& A, int p) {
  const int n = A.n();
  const int r = A.r();
  const int N = A.N();
  std::vector<Subspace> pureF, pureFA;
  std::vector<int> rowIdx, colIdx;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= N; ++j) {
      auto [lo, hi] = A.block_interval(i, j);
      for (int k = lo + 1; k <= hi; ++k) rowIdx.push_back(k);
    }
    pureF.push_back(Subspace::coordinate(p, 2 * r, rowIdx));
  }
  for (int l = 1; l <= n; ++l) {
    for (int j = 1; j <= N; ++j) {
      auto [lo, hi] = A.block_interval(j, l);
      for (int k = lo + 1; k <= hi; ++k) colIdx.push_back(k);
    }
    pureFA.push_back(Subspace::coordinate(p, 2 * r, colIdx));
  }
  return {IsoFlag(n, r, std::move(pureF)), IsoFlag(n, r, std::move(pureFA))};
}

int split_dim(const IsoFlag& F, const IsoFlag& Fp) {
  const int n = F.n();
  const Subspace S = intersect(F.step(n + 1), Fp.step(n + 1));
  const Subspace T = sum(F.step(n), S);
  std::vector<int> mr(static_cast<size_t>(F.r()));
  for (int k = 1; k <= F.r(); ++k) mr[static_cast<size_t>(k - 1)] = k;
  return dim_intersect(T, Subspace::coordinate(T.p(), 2 * F.r(), mr));
}

Tag so_labels(const IsoFlag& F, const IsoFlag& Fp) {
  const MatB m = orbit_matrix(F, Fp);
  if (m.center() != 0) return Tag::Dot();
  const int e1 = (split_dim(F, Fp) - F.r()) % 2 == 0 ? +1 : -1;
  const int e2 = (split_dim(Fp, F) - F.r()) % 2 == 0 ? +1 : -1;
  return Tag::Signs(e1, e2);
}

GeomTables GeomTables::build(const FlagVariety& X, bool parallel) {
  GeomTables T;
  T.X = &X;
  const int sz = static_cast<int>(X.flags.size());
  if (static_cast<size_t>(sz) > 4000)
    throw TooLarge("GeomTables: pair table over " + std::to_string(sz) + " flags exceeds budget");
  T.cls.assign(static_cast<size_t>(sz) * static_cast<size_t>(sz), -1);
  T.eps1.assign(T.cls.size(), 0);
  T.eps2.assign(T.cls.size(), 0);

  std::vector<MatB> local_mats;
  std::map<MatB, int> local_index;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int x = 0; x < sz; ++x) {
    for (int y = 0; y < sz; ++y) {
      const size_t k = static_cast<size_t>(x) * static_cast<size_t>(sz) + static_cast<size_t>(y);
      const MatB m = orbit_matrix(X.flags[static_cast<size_t>(x)], X.flags[static_cast<size_t>(y)]);
      if (m.center() == 0) {
        const int e1 = (split_dim(X.flags[static_cast<size_t>(x)], X.flags[static_cast<size_t>(y)]) - X.r) % 2 == 0 ? +1 : -1;
        const int e2 = (split_dim(X.flags[static_cast<size_t>(y)], X.flags[static_cast<size_t>(x)]) - X.r) % 2 == 0 ? +1 : -1;
        T.eps1[k] = static_cast<int8_t>(e1);
        T.eps2[k] = static_cast<int8_t>(e2);
      }
#pragma omp critical(geom_tables_intern)
      {
        auto it = local_index.find(m);
        if (it == local_index.end()) it = local_index.emplace(m, static_cast<int>(local_mats.size())).first, local_mats.push_back(m);
        T.cls[k] = it->second;
      }
    }
  }
  // Canonical renumbering so the table is independent of thread interleaving.
  std::vector<int> order(local_mats.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return local_mats[static_cast<size_t>(a)] < local_mats[static_cast<size_t>(b)]; });
  std::vector<int> renum(local_mats.size());
  for (size_t newid = 0; newid < order.size(); ++newid) renum[static_cast<size_t>(order[newid])] = static_cast<int>(newid);
  for (auto& c : T.cls) c = renum[static_cast<size_t>(c)];
  T.mats.reserve(local_mats.size());
  for (size_t newid = 0; newid < order.size(); ++newid) T.mats.push_back(local_mats[static_cast<size_t>(order[newid])]);
  for (size_t i = 0; i < T.mats.size(); ++i) T.mat_index.emplace(T.mats[i], static_cast<int>(i));
  return T;
}

long long convolution_constant_B(const GeomTables& T, const MatB& L, const MatB& R, const MatB& W) {
  auto lit = T.mat_index.find(L);
  auto rit = T.mat_index.find(R);
  auto wit = T.mat_index.find(W);
  if (wit == T.mat_index.end()) throw InvalidIndex("convolution_constant_B: target orbit not realized");
  if (lit == T.mat_index.end() || rit == T.mat_index.end()) return 0;
  const int sz = static_cast<int>(T.X->flags.size());
  // representative pair of O_W
  int x = -1, y = -1;
  for (int a = 0; a < sz && x < 0; ++a)
    for (int b = 0; b < sz; ++b)
      if (T.cls_at(a, b) == wit->second) {
        x = a;
        y = b;
        break;
      }
  if (x < 0) throw InvalidIndex("convolution_constant_B: empty orbit");
  long long count = 0;
  for (int z = 0; z < sz; ++z)
    if (T.cls_at(x, z) == lit->second && T.cls_at(z, y) == rit->second) ++count;
  return count;
}

namespace {

bool tagged_member(const GeomTables& T, int x, int y, int cls_id, const Tag& tag) {
  if (T.cls_at(x, y) != cls_id) return false;
  auto [e1, e2] = T.eps_at(x, y);
  if (tag.dot) return e1 == 0;
  return e1 == tag.e1 && e2 == tag.e2;
}

int tagged_cls(const GeomTables& T, const MatD& W) {
  auto it = T.mat_index.find(W.base());
  if (it == T.mat_index.end()) throw InvalidIndex("tagged orbit not realized in this variety");
  return it->second;
}

}  // namespace

long long tagged_orbit_size(const GeomTables& T, const MatD& W) {
  const int cid = tagged_cls(T, W);
  const int sz = static_cast<int>(T.X->flags.size());
  long long count = 0;
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      if (tagged_member(T, x, y, cid, W.tag())) ++count;
  return count;
}

long long convolution_constant_D(const GeomTables& T, const MatD& L, const MatD& R, const MatD& W,
                                 int rep_index) {
  const int lc = tagged_cls(T, L), rc = tagged_cls(T, R), wc = tagged_cls(T, W);
  const int sz = static_cast<int>(T.X->flags.size());
  int x = -1, y = -1, seen = 0;
  for (int a = 0; a < sz && x < 0; ++a)
    for (int b = 0; b < sz; ++b)
      if (tagged_member(T, a, b, wc, W.tag()) && seen++ == rep_index) {
        x = a;
        y = b;
        break;
      }
  if (x < 0) throw InvalidIndex("convolution_constant_D: representative pair not found");
  long long count = 0;
  for (int z = 0; z < sz; ++z)
    if (tagged_member(T, x, z, lc, L.tag()) && tagged_member(T, z, y, rc, R.tag())) ++count;
  return count;
}

std::pair<long long, long long> verify_halving(const GeomTables& T, const MatB& A) {
  const int n = A.n();
  if (A.center() != 0) throw InvalidIndex("verify_halving: central entry must vanish");
  if (A.at(n, n + 1) < 1) return {0, 0};
  const MatB Ashift = shift_down(A, n, n + 1);
  // C = E^theta_{n+1,n} + diag(ro(A) - e^theta_n)
  std::vector<int> gamma = A.ro();
  gamma[static_cast<size_t>(n - 1)] -= 1;
  gamma[static_cast<size_t>(A.N() - n)] -= 1;
  const int N = A.N();
  std::vector<int> ce(static_cast<size_t>(N * N), 0);
  for (int i = 0; i < N; ++i) ce[static_cast<size_t>(i * N + i)] = gamma[static_cast<size_t>(i)];
  ce[static_cast<size_t>(n * N + (n - 1))] += 1;            // (n+1, n)
  ce[static_cast<size_t>((N - 1 - n) * N + (N - n))] += 1;  // (N-n, N+1-n)
  const MatB C(n, A.r(), std::move(ce));
  auto ait = T.mat_index.find(A);
  auto cit = T.mat_index.find(C);
  auto sit = T.mat_index.find(Ashift);
  if (ait == T.mat_index.end() || cit == T.mat_index.end() || sit == T.mat_index.end())
    throw InvalidIndex("verify_halving: orbit not realized in this variety");
  const int sz = static_cast<int>(T.X->flags.size());
  int x = -1, y = -1;
  for (int a = 0; a < sz && x < 0; ++a)
    for (int b = 0; b < sz; ++b)
      if (T.cls_at(a, b) == sit->second) {
        x = a;
        y = b;
        break;
      }
  if (x < 0) throw InvalidIndex("verify_halving: empty shifted orbit");
  const int eps = A.sgn();
  long long plus = 0, minus = 0;
  for (int z = 0; z < sz; ++z) {
    if (T.cls_at(x, z) != cit->second || T.cls_at(z, y) != ait->second) continue;
    auto [e1, e2] = T.eps_at(z, y);
    if (e1 == +1 && e2 == eps) ++plus;
    else if (e1 == -1 && e2 == -eps) ++minus;
    else throw InvalidIndex("verify_halving: intermediate pair carries an invalid label");
  }
  return {plus, minus};
}

}  // namespace qschur
