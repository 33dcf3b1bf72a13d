#include "qschur/schur.hpp"

namespace qschur {

PolyQ coef_raise(const MatB& A, int h, int p) {
  const int N = A.N();
  if (h < 1 || h > A.n() || p < 1 || p > N) throw InvalidIndex("coef_raise: h or p out of range");
  if (A.at(h + 1, p) == 0) return PolyQ();
  int e = 0;
  for (int j = p + 1; j <= N; ++j) e += A.at(h, j);
  return PolyQ::q_power(e) * PolyQ::gauss(A.at(h, p) + 1);
}

PolyQ coef_lower(const MatB& A, int h, int p) {
  const int N = A.N();
  const int n = A.n();
  if (h < 1 || h > n || p < 1 || p > N) throw InvalidIndex("coef_lower: h or p out of range");
  if (A.at(h, p) == 0) return PolyQ();
  int e = 0;
  for (int j = 1; j < p; ++j) e += A.at(h + 1, j);
  if (h == n && p == n + 1) {
    const int a = A.at(n + 1, n + 1);
    return PolyQ::q_power(e) * (PolyQ::gauss(a + 1) + PolyQ::q_power(a / 2));
  }
  return PolyQ::q_power(e) * PolyQ::gauss(A.at(h + 1, p) + 1);
}

std::optional<FundShape> fundamental_shape(const MatB& L) {
  const int N = L.N();
  std::vector<std::pair<int, int>> off;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (i != j && L.at(i, j) != 0) off.emplace_back(i, j);
  if (off.empty()) return FundShape{FundKind::Diagonal, 0};
  if (off.size() != 2) return std::nullopt;
  for (int h = 1; h <= L.n(); ++h) {
    if (off[0] == std::make_pair(h, h + 1) && off[1] == std::make_pair(N + 1 - h, N - h) &&
        L.at(h, h + 1) == 1)
      return FundShape{FundKind::Raise, h};
    if (off[0] == std::make_pair(h + 1, h) && off[1] == std::make_pair(N - h, N + 1 - h) &&
        L.at(h + 1, h) == 1)
      return FundShape{FundKind::Lower, h};
  }
  return std::nullopt;
}

SchurB mult_fund_B(const MatB& L, const MatB& A) {
  if (L.n() != A.n() || L.r() != A.r()) throw AmbientMismatch("mult_fund_B: shape mismatch");
  auto shape = fundamental_shape(L);
  if (!shape) throw NotFundamental("mult_fund_B: left factor not of single-shift form");
  SchurB out(A.n(), A.r());
  if (L.co() != A.ro()) return out;
  if (shape->kind == FundKind::Diagonal) {
    out.add(A, PolyQ(1));
    return out;
  }
  const int h = shape->h;
  for (int p = 1; p <= A.N(); ++p) {
    if (shape->kind == FundKind::Raise) {
      PolyQ g = coef_raise(A, h, p);
      if (!g.is_zero()) out.add(shift_up(A, h, p), g);
    } else {
      PolyQ g = coef_lower(A, h, p);
      if (!g.is_zero()) out.add(shift_down(A, h, p), g);
    }
  }
  return out;
}

DProduct mult_fund_D(const MatD& L, const MatD& Ad) {
  const MatB& A = Ad.base();
  const int n = A.n();
  const int r = A.r();
  if (L.n() != n || L.r() != r) throw AmbientMismatch("mult_fund_D: shape mismatch");
  if (r < 4) throw InvalidIndex("mult_fund_D: type-D products need r >= 4");
  auto shape = fundamental_shape(L.base());
  if (!shape) throw NotFundamental("mult_fund_D: left factor not of single-shift form");

  SchurD out(n, r);
  if (cw(L) != rw(Ad)) return DProduct{out, "weight-mismatch"};
  if (shape->kind == FundKind::Diagonal) {
    out.add(Ad, PolyQ(1));
    return DProduct{out, "idem"};
  }

  const bool raise = shape->kind == FundKind::Raise;
  const int h = shape->h;
  const SignedComposition left_rw = rw(L);
  bool fired_split = false, fired_half = false;
  for (int p = 1; p <= A.N(); ++p) {
    PolyQ g = raise ? coef_raise(A, h, p) : coef_lower(A, h, p);
    if (g.is_zero()) continue;
    MatB X = raise ? shift_up(A, h, p) : shift_down(A, h, p);
    const bool sign_flip = (h == n && p > n + 1);
    if (Ad.tag().dot) {
      if (X.center() != 0) {
        out.add(MatD::dotted(std::move(X)), g);
      } else {
        // A non-split index whose shift splits: both sign labels occur.
        fired_split = true;
        for (const auto& cand : tags_over(X))
          if (rw(cand) == left_rw) out.add(cand, g);
      }
    } else {
      if (X.center() != 0) {
        // Only the central lowering shift of a split index: halved constant.
        if (raise || h != n || p != n + 1)
          throw InvalidIndex("mult_fund_D: unexpected non-split shift");
        fired_half = true;
        out.add(MatD::dotted(std::move(X)), halve(g));
      } else {
        const int o1 = sign_flip ? -Ad.tag().e1 : Ad.tag().e1;
        MatD cand = MatD::signed_pair(std::move(X), o1, Ad.tag().e2);
        if (rw(cand) == left_rw) out.add(cand, g);
      }
    }
  }

  // Weight bookkeeping: every output index carries (rw(L), cw(A)).
  const SignedComposition right_cw = cw(Ad);
  for (const auto& [k, c] : out.terms()) {
    (void)c;
    if (rw(k) != left_rw || cw(k) != right_cw)
      throw InvalidIndex("mult_fund_D: output weight bookkeeping violated");
  }

  std::string label = std::string(raise ? "raise" : "lower") + "." +
                      mat_class_name(L.base().classify()) + "." +
                      mat_class_name(A.classify()) + "." + (h < n ? "hlt" : "heq");
  if (fired_split) label += ".split";
  if (fired_half) label += ".half";
  return DProduct{out, label};
}

SchurD embed_B_in_D(const MatB& A) {
  SchurD out(A.n(), A.r());
  for (const auto& t : tags_over(A)) out.add(t, PolyQ(1));
  return out;
}

SchurD embed(const SchurB& x) {
  SchurD out(x.n(), x.r());
  for (const auto& [k, c] : x.terms()) out += embed_B_in_D(k).scaled(c);
  return out;
}

}  // namespace qschur
