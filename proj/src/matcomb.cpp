#include "qschur/matcomb.hpp"

#include "qschur/polyq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qschur {

std::string mat_class_name(MatClass c) {
  switch (c) {
    case MatClass::Dot: return "dot";
    case MatClass::OOO: return "ooo";
    case MatClass::OOD: return "ood";
    case MatClass::DOO: return "doo";
    case MatClass::DOD: return "dod";
  }
  return "?";
}

MatB::MatB(int n, int r, std::vector<int> entries) : n_(n), r_(r), a_(std::move(entries)) {
  const int N = 2 * n + 1;
  if (n < 1 || r < 1) throw InvalidIndex("MatB: need n,r >= 1");
  if (static_cast<int>(a_.size()) != N * N) throw InvalidIndex("MatB: wrong entry count");
  long long total = 0;
  for (int v : a_) {
    if (v < 0) throw InvalidIndex("MatB: negative entry");
    total += v;
  }
  if (total != 2LL * r) throw InvalidIndex("MatB: entries must sum to 2r");
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (at(i, j) != at(N + 1 - i, N + 1 - j))
        throw InvalidIndex("MatB: centro-symmetry violated");
  if (center() % 2 != 0) throw InvalidIndex("MatB: central entry must be even");
}

MatB MatB::diag(int n, int r, const std::vector<int>& hat_vector) {
  const int N = 2 * n + 1;
  if (static_cast<int>(hat_vector.size()) != N) throw InvalidIndex("MatB::diag: bad length");
  std::vector<int> e(static_cast<size_t>(N * N), 0);
  for (int i = 0; i < N; ++i) e[static_cast<size_t>(i * N + i)] = hat_vector[static_cast<size_t>(i)];
  return MatB(n, r, std::move(e));
}

MatB MatB::from_rows(int n, int r, const std::vector<std::vector<int>>& rows) {
  std::vector<int> e;
  for (const auto& row : rows) e.insert(e.end(), row.begin(), row.end());
  return MatB(n, r, std::move(e));
}

std::vector<int> MatB::ro() const {
  std::vector<int> s(static_cast<size_t>(N()), 0);
  for (int i = 1; i <= N(); ++i)
    for (int j = 1; j <= N(); ++j) s[static_cast<size_t>(i - 1)] += at(i, j);
  return s;
}

std::vector<int> MatB::co() const {
  std::vector<int> s(static_cast<size_t>(N()), 0);
  for (int i = 1; i <= N(); ++i)
    for (int j = 1; j <= N(); ++j) s[static_cast<size_t>(j - 1)] += at(i, j);
  return s;
}

static Composition comp_from_hat(const std::vector<int>& hat, int n) {
  Composition la;
  la.parts.assign(static_cast<size_t>(n + 1), 0);
  for (int i = 0; i < n; ++i) la.parts[static_cast<size_t>(i)] = hat[static_cast<size_t>(i)];
  la.parts[static_cast<size_t>(n)] = hat[static_cast<size_t>(n)] / 2;
  return la;
}

Composition MatB::row_comp() const { return comp_from_hat(ro(), n_); }
Composition MatB::col_comp() const { return comp_from_hat(co(), n_); }

int MatB::corner_sum() const {
  int s = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = n_ + 2; j <= N(); ++j) s += at(i, j);
  return s;
}

MatClass MatB::classify() const {
  if (center() != 0) return MatClass::Dot;
  const bool lam = row_comp().parts.back() != 0;
  const bool mu = col_comp().parts.back() != 0;
  if (!lam && !mu) return MatClass::OOO;
  if (!lam && mu) return MatClass::OOD;
  if (lam && !mu) return MatClass::DOO;
  return MatClass::DOD;
}

bool MatB::is_diagonal() const {
  for (int i = 1; i <= N(); ++i)
    for (int j = 1; j <= N(); ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

MatB MatB::transpose() const {
  std::vector<int> e(a_.size());
  for (int i = 1; i <= N(); ++i)
    for (int j = 1; j <= N(); ++j)
      e[static_cast<size_t>((j - 1) * N() + (i - 1))] = at(i, j);
  return MatB(n_, r_, std::move(e));
}

int MatB::rtilde(int i, int j) const {
  int s = 0;
  for (int i2 = 1; i2 < i; ++i2)
    for (int j2 = 1; j2 <= N(); ++j2) s += at(i2, j2);
  for (int j2 = 1; j2 <= j; ++j2) s += at(i, j2);
  return s;
}

int MatB::ctilde(int i, int j) const {
  int s = 0;
  for (int j2 = 1; j2 < j; ++j2)
    for (int i2 = 1; i2 <= N(); ++i2) s += at(i2, j2);
  for (int i2 = 1; i2 <= i; ++i2) s += at(i2, j);
  return s;
}

std::pair<int, int> MatB::block_interval(int j, int l) const {
  const int lo = rtilde(j, l - 1);
  return {lo, lo + at(j, l)};
}

std::string MatB::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= N(); ++i) {
    os << (i > 1 ? ";" : "") << "[";
    for (int j = 1; j <= N(); ++j) os << (j > 1 ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<MatB> enumerate_XiB(int n, int r, size_t max_size) {
  const int N = 2 * n + 1;
  // Free data: full rows 1..n, row n+1 up to column n, and half the center.
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= N; ++j) slots.emplace_back(i, j);
  for (int j = 1; j <= n; ++j) slots.emplace_back(n + 1, j);
  slots.emplace_back(n + 1, n + 1);  // holds center/2

  std::vector<MatB> out;
  std::vector<int> val(slots.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t pos, int left) {
    if (pos + 1 == slots.size()) {
      val[pos] = left;
      std::vector<int> e(static_cast<size_t>(N * N), 0);
      auto put = [&](int i, int j, int v) { e[static_cast<size_t>((i - 1) * N + (j - 1))] = v; };
      for (size_t k = 0; k < slots.size(); ++k) {
        auto [i, j] = slots[k];
        int v = val[k];
        if (i == n + 1 && j == n + 1) {
          put(i, j, 2 * v);
        } else {
          put(i, j, v);
          put(N + 1 - i, N + 1 - j, v);
        }
      }
      if (out.size() >= max_size) throw TooLarge("enumerate_XiB: budget exceeded");
      out.emplace_back(n, r, std::move(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      val[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

MatB coset_to_matrix(const Composition& lambda, const SignedPerm& d, const Composition& mu) {
  const int n = lambda.size() - 1;
  const int r = lambda.sum();
  if (mu.size() != n + 1 || mu.sum() != r) throw InvalidIndex("coset_to_matrix: shape mismatch");
  const int N = 2 * n + 1;
  const auto lh = Composition{lambda}.hat();
  const auto mh = Composition{mu}.hat();
  std::vector<int> lps(static_cast<size_t>(N) + 1, 0), mps(lps);
  for (int i = 1; i <= N; ++i) {
    lps[static_cast<size_t>(i)] = lps[static_cast<size_t>(i - 1)] + lh[static_cast<size_t>(i - 1)];
    mps[static_cast<size_t>(i)] = mps[static_cast<size_t>(i - 1)] + mh[static_cast<size_t>(i - 1)];
  }
  std::vector<int> e(static_cast<size_t>(N * N), 0);
  for (int j = 1; j <= N; ++j) {
    for (int x = mps[static_cast<size_t>(j - 1)] + 1; x <= mps[static_cast<size_t>(j)]; ++x) {
      const int y = d(x);
      // locate row block containing y
      int i = 1;
      while (y > lps[static_cast<size_t>(i)]) ++i;
      e[static_cast<size_t>((i - 1) * N + (j - 1))]++;
    }
  }
  MatB A(n, r, std::move(e));
  if (matrix_to_dA(A) != d) throw NotDistinguished("coset_to_matrix: d is not the distinguished representative");
  return A;
}

SignedPerm matrix_to_dA(const MatB& A) {
  const int N = A.N();
  std::vector<int> img(static_cast<size_t>(2 * A.r()), 0);
  for (int j = 1; j <= N; ++j) {
    for (int i = 1; i <= N; ++i) {
      const int a = A.at(i, j);
      if (a == 0) continue;
      const int pos0 = A.ctilde(i - 1, j);
      const int val0 = A.rtilde(i, j - 1);
      for (int k = 1; k <= a; ++k) img[static_cast<size_t>(pos0 + k - 1)] = val0 + k;
    }
  }
  return SignedPerm(A.r(), std::move(img));
}

static MatB apply_shift(const MatB& A, int h, int p, int up_sign, const char* what) {
  const int N = A.N();
  if (h < 1 || h > A.n() || p < 1 || p > N) throw InvalidIndex("shift: h or p out of range");
  std::vector<int> e = A.entries();
  auto add = [&](int i, int j, int v) { e[static_cast<size_t>((i - 1) * N + (j - 1))] += v; };
  // +-(E^theta_{h,p} - E^theta_{h+1,p})
  add(h, p, up_sign);
  add(N + 1 - h, N + 1 - p, up_sign);
  add(h + 1, p, -up_sign);
  add(N - h, N + 1 - p, -up_sign);
  for (int v : e)
    if (v < 0) throw InvalidShift(what);
  return MatB(A.n(), A.r(), std::move(e));
}

MatB shift_up(const MatB& A, int h, int p) { return apply_shift(A, h, p, +1, "shift_up: entry would go negative"); }
MatB shift_down(const MatB& A, int h, int p) { return apply_shift(A, h, p, -1, "shift_down: entry would go negative"); }

std::optional<MatB> try_shift_up(const MatB& A, int h, int p) {
  try {
    return shift_up(A, h, p);
  } catch (const InvalidShift&) {
    return std::nullopt;
  }
}

std::optional<MatB> try_shift_down(const MatB& A, int h, int p) {
  try {
    return shift_down(A, h, p);
  } catch (const InvalidShift&) {
    return std::nullopt;
  }
}

std::string Tag::str() const {
  if (dot) return "dot";
  std::string s;
  s += (e1 > 0 ? '+' : '-');
  s += (e2 > 0 ? '+' : '-');
  return s;
}

MatD::MatD(MatB base, Tag tag) : base_(std::move(base)), tag_(tag) {
  if (tag_.dot) {
    if (base_.center() == 0) throw InvalidIndex("MatD: dot tag needs nonzero central entry");
  } else {
    if (base_.center() != 0) throw InvalidIndex("MatD: sign tag needs zero central entry");
    if (tag_.e1 * tag_.e2 != base_.sgn())
      throw InvalidIndex("MatD: sign product must equal sgn of the corner sum");
  }
}

std::string MatD::str() const { return base_.str() + tag_.str(); }

std::vector<MatD> tags_over(const MatB& A) {
  std::vector<MatD> out;
  if (A.center() != 0) {
    out.push_back(MatD::dotted(A));
  } else if (A.sgn() > 0) {
    out.push_back(MatD::signed_pair(A, +1, +1));
    out.push_back(MatD::signed_pair(A, -1, -1));
  } else {
    out.push_back(MatD::signed_pair(A, +1, -1));
    out.push_back(MatD::signed_pair(A, -1, +1));
  }
  return out;
}

std::vector<MatD> enumerate_XiD(int n, int r, size_t max_size) {
  std::vector<MatD> out;
  for (const auto& A : enumerate_XiB(n, r, max_size)) {
    for (auto& t : tags_over(A)) out.push_back(std::move(t));
    if (out.size() > max_size) throw TooLarge("enumerate_XiD: budget exceeded");
  }
  return out;
}

SignedComposition rw(const MatD& A) {
  Composition la = A.base().row_comp();
  Mark m = la.parts.back() != 0 ? Mark::Dot
                                : (A.tag().e1 > 0 ? Mark::Plus : Mark::Minus);
  return SignedComposition(std::move(la), m);
}

SignedComposition cw(const MatD& A) {
  Composition mu = A.base().col_comp();
  Mark m = mu.parts.back() != 0 ? Mark::Dot
                                : (A.tag().e2 > 0 ? Mark::Plus : Mark::Minus);
  return SignedComposition(std::move(mu), m);
}

MatD weight_idempotent_index(const SignedComposition& alpha, int n, int r) {
  MatB D = MatB::diag(n, r, alpha.base.hat());
  if (alpha.mark == Mark::Dot) return MatD::dotted(std::move(D));
  const int e = alpha.mark == Mark::Plus ? +1 : -1;
  return MatD::signed_pair(std::move(D), e, e);
}

std::string EtaTriple::str() const {
  return "(" + alpha.str() + ", " + d.str() + ", " + beta.str() + ")";
}

// Cached parabolic subgroups of the enumerated groups.
static const Subgroup& parabolic_cached(const ParabolicSpec& spec, size_t max_size) {
  static std::map<std::string, Subgroup> cache;
  static std::mutex mtx;
  std::ostringstream key;
  key << (spec.ambient == Ambient::B ? 'B' : 'D') << spec.r << ':' << spec.n << ':'
      << spec.lambda.str() << mark_char(spec.mark);
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key.str());
  if (it == cache.end())
    it = cache.emplace(key.str(), enumerate_parabolic_subgroup(spec, max_size)).first;
  return it->second;
}

EtaTriple eta(const MatD& Ad, size_t max_size) {
  const MatB& A = Ad.base();
  const int r = A.r();
  if (r < 2) throw InvalidIndex("eta: needs r >= 2");
  const WeylGroup& G = WeylGroup::get(Ambient::D, r, max_size);
  const SignedPerm dA = matrix_to_dA(A);
  const SignedComposition alpha = rw(Ad);
  const SignedComposition beta = cw(Ad);
  const SignedPerm sr = SignedPerm::generator(r, r);

  SignedPerm u = dA;
  if (Ad.tag().dot) {
    if (!u.in_type_d()) u = sr * u;
  } else {
    if (Ad.tag().e1 < 0) u = sr * u;
    if (Ad.tag().e2 < 0) u = u * sr;
  }
  if (!u.in_type_d()) throw InvalidIndex("eta: candidate element escapes W(D_r)");

  const Subgroup& P1 = parabolic_cached(ParabolicSpec::typeD(A.n(), r, alpha), max_size);
  const Subgroup& P2 = parabolic_cached(ParabolicSpec::typeD(A.n(), r, beta), max_size);
  const int uid = G.id_of(u);
  if (uid < 0) throw InvalidIndex("eta: element not found in W(D_r)");
  const int did = distinguished_rep_in(P1, uid, P2);
  return EtaTriple{alpha, G.elems[static_cast<size_t>(did)], beta};
}

MatD eta_inv(const EtaTriple& t, int n, int r, size_t max_size) {
  const Composition& la = t.alpha.base;
  const Composition& mu = t.beta.base;
  // The underlying index lies in the type-B double coset of one of the four
  // s_r-translates of d (eta may have moved d_A across W(B_r) \ W(D_r)).
  const WeylGroup& GB = WeylGroup::get(Ambient::B, r, max_size);
  const Subgroup& Q1 = parabolic_cached(ParabolicSpec::typeB(n, r, la), max_size);
  const Subgroup& Q2 = parabolic_cached(ParabolicSpec::typeB(n, r, mu), max_size);
  const SignedPerm sr = SignedPerm::generator(r, r);
  std::vector<MatB> seen;
  for (const SignedPerm& v : {t.d, sr * t.d, t.d * sr, sr * t.d * sr}) {
    const int vid = GB.id_of(v);
    if (vid < 0) throw InvalidIndex("eta_inv: element not a member of W(B_r)");
    const int rep = distinguished_rep_in(Q1, vid, Q2);
    const MatB A = coset_to_matrix(la, GB.elems[static_cast<size_t>(rep)], mu);
    if (std::find(seen.begin(), seen.end(), A) != seen.end()) continue;
    seen.push_back(A);
    for (const auto& cand : tags_over(A)) {
      if (eta(cand, max_size) == t) return cand;
    }
  }
  throw InvalidIndex("eta_inv: no tagged index maps to the given triple");
}

unsigned long long binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  Int v = 1;
  for (int i = 1; i <= b; ++i) {
    v *= (a - b + i);
    v /= i;
  }
  if (v > Int(~0ull)) throw TooLarge("binomial: overflow");
  return v.convert_to<unsigned long long>();
}

unsigned long long dim_XiB(int n, int r) { return binomial(2 * n * n + 2 * n + r, r); }

unsigned long long dim_XiD(int n, int r) {
  return binomial(2 * n * n + 2 * n + r, r) + binomial(2 * n * n + 2 * n + r - 1, r);
}

unsigned long long count_class_DOD(int n, int r) {
  Int v = Int(binomial(2 * n * n + 2 * n + r - 1, r)) - 2 * Int(binomial(2 * n * n + n + r - 1, r)) +
          Int(binomial(2 * n * n + r - 1, r));
  if (v < 0) throw InvalidIndex("count_class_DOD: negative");
  return v.convert_to<unsigned long long>();
}

}  // namespace qschur
