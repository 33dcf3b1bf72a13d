#include "qschur/sweeps.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace qschur {

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

long long ipow(long long b, int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= b;
  return v;
}

}  // namespace

void SweepReport::fail(const std::string& what) {
  ok = false;
  if (failures.size() < 12) failures.push_back(what);
}

void SweepReport::merge(const SweepReport& o) {
  ok = ok && o.ok;
  checked += o.checked;
  seconds += o.seconds;
  for (const auto& f : o.failures)
    if (failures.size() < 12) failures.push_back(f);
  for (const auto& [k, v] : o.census) census[k] += v;
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok ? "PASS" : "FAIL") << " (checked " << checked << ", " << seconds
     << " s)";
  for (const auto& f : failures) os << "\n    " << f;
  return os.str();
}

SweepReport sweep_dimensions(int n_max, int r_max) {
  SweepReport rep;
  rep.name = "dimensions";
  const double t0 = now_seconds();
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 1; r <= r_max; ++r) {
      const auto XiB = enumerate_XiB(n, r);
      const auto XiD = enumerate_XiD(n, r);
      long long center_zero = 0, dod = 0;
      for (const auto& A : XiB) {
        if (A.center() == 0) ++center_zero;
        if (A.classify() == MatClass::DOD) ++dod;
      }
      std::ostringstream tag;
      tag << "(n=" << n << ",r=" << r << ")";
      if (XiB.size() != dim_XiB(n, r))
        rep.fail("XiB count != closed form at " + tag.str());
      if (XiD.size() != dim_XiD(n, r))
        rep.fail("XiD count != closed form at " + tag.str());
      if (XiD.size() != XiB.size() + static_cast<size_t>(center_zero))
        rep.fail("XiD != XiB + #(central entry 0) at " + tag.str());
      if (static_cast<unsigned long long>(dod) != count_class_DOD(n, r))
        rep.fail("DOD class census != closed form at " + tag.str());
      rep.checked += 4;
    }
  }
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_bijections(int n, int r, bool with_d) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "bijections(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();

  const auto XiB = enumerate_XiB(n, r);
  const WeylGroup& GB = WeylGroup::get(Ambient::B, r);
  const SignedPerm sr = SignedPerm::generator(r, r);
  for (const auto& A : XiB) {
    const SignedPerm d = matrix_to_dA(A);
    if ((d.n_r() % 2 == 0) != (A.corner_sum() % 2 == 0))
      rep.fail("corner-sum parity != n_r parity at " + A.str());
    if (d.n_r() != A.corner_sum()) rep.fail("n_r(d_A) != corner sum at " + A.str());
    try {
      const MatB back = coset_to_matrix(A.row_comp(), d, A.col_comp());
      if (back != A) rep.fail("matrix -> coset -> matrix round trip failed at " + A.str());
    } catch (const std::exception& e) {
      rep.fail(std::string("round trip raised: ") + e.what());
    }
    ++rep.checked;
  }

  // The triple census: total number of double cosets over all weight pairs.
  {
    const auto lambdas = all_compositions(n + 1, r);
    std::vector<Subgroup> subs;
    for (const auto& la : lambdas)
      subs.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, la)));
    long long cosets = 0;
    for (const auto& P1 : subs)
      for (const auto& P2 : subs) cosets += static_cast<long long>(double_cosets(P1, P2).rep_ids.size());
    if (cosets != static_cast<long long>(XiB.size()))
      rep.fail("number of B double cosets != |XiB|");
    ++rep.checked;

    // s_r containment: s_r in W_lambda cap dW_mu d^{-1} iff central entry >= 2.
    const int sr_id = GB.id_of(sr);
    for (const auto& A : XiB) {
      const SignedPerm d = matrix_to_dA(A);
      int li = -1, mi = -1;
      for (size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == A.row_comp()) li = static_cast<int>(i);
        if (lambdas[i] == A.col_comp()) mi = static_cast<int>(i);
      }
      const bool in_left = subs[static_cast<size_t>(li)].contains(sr_id);
      const int conj = GB.id_of(d.inverse() * sr * d);
      const bool in_both = in_left && subs[static_cast<size_t>(mi)].contains(conj);
      if (in_both != (A.center() >= 2))
        rep.fail("s_r containment criterion failed at " + A.str());
      ++rep.checked;
    }
  }

  if (with_d && r >= 2) {
    const auto XiD = enumerate_XiD(n, r);
    std::set<std::string> triples;
    for (const auto& Ad : XiD) {
      EtaTriple t = eta(Ad);
      // weight marks follow the class pattern
      const MatClass c = Ad.base().classify();
      const bool rw_dot = t.alpha.mark == Mark::Dot;
      const bool cw_dot = t.beta.mark == Mark::Dot;
      bool pattern_ok = true;
      switch (c) {
        case MatClass::Dot: pattern_ok = rw_dot && cw_dot; break;
        case MatClass::OOO: pattern_ok = !rw_dot && !cw_dot; break;
        case MatClass::OOD: pattern_ok = !rw_dot && cw_dot; break;
        case MatClass::DOO: pattern_ok = rw_dot && !cw_dot; break;
        case MatClass::DOD: pattern_ok = rw_dot && cw_dot; break;
      }
      if (!pattern_ok) rep.fail("weight mark pattern failed at " + Ad.str());
      if (t.alpha != rw(Ad) || t.beta != cw(Ad))
        rep.fail("eta weights disagree with rw/cw at " + Ad.str());
      triples.insert(t.str());
      try {
        if (eta_inv(t, n, r) != Ad) rep.fail("eta_inv round trip failed at " + Ad.str());
      } catch (const std::exception& e) {
        rep.fail(std::string("eta_inv raised at ") + Ad.str() + ": " + e.what());
      }
      ++rep.checked;
    }
    if (triples.size() != XiD.size()) rep.fail("eta is not injective");

    const auto alphas = all_signed_compositions(n, r);
    std::vector<Subgroup> subs;
    for (const auto& al : alphas)
      subs.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeD(n, r, al)));
    long long cosets = 0;
    for (const auto& P1 : subs)
      for (const auto& P2 : subs) cosets += static_cast<long long>(double_cosets(P1, P2).rep_ids.size());
    if (cosets != static_cast<long long>(XiD.size()))
      rep.fail("number of labelled D double cosets != |XiD|");
    ++rep.checked;
  }

  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_b_oracle(int n, int r, bool parallel) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "b-oracle(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();

  const OracleB oracle(n, r);
  const auto& basis = oracle.basis();
  std::vector<std::pair<int, int>> inst;
  for (size_t li = 0; li < basis.size(); ++li) {
    const auto shape = fundamental_shape(basis[li]);
    if (!shape || shape->kind == FundKind::Diagonal) continue;
    const auto lco = basis[li].co();
    for (size_t ri = 0; ri < basis.size(); ++ri)
      if (basis[ri].ro() == lco) inst.emplace_back(static_cast<int>(li), static_cast<int>(ri));
  }

#pragma omp parallel if (parallel)
  {
    SweepReport local;
#pragma omp for schedule(dynamic) nowait
    for (long long k = 0; k < static_cast<long long>(inst.size()); ++k) {
      const MatB& L = basis[static_cast<size_t>(inst[static_cast<size_t>(k)].first)];
      const MatB& A = basis[static_cast<size_t>(inst[static_cast<size_t>(k)].second)];
      const auto shape = *fundamental_shape(L);
      try {
        const SchurB lhs = mult_fund_B(L, A);
        const SchurB rhs = oracle.product(L, A);
        if (lhs != rhs)
          local.fail("formula != oracle for L=" + L.str() + " A=" + A.str());
        for (const auto& [idx, c] : rhs.terms()) {
          (void)idx;
          if (!c.all_coeffs_nonneg()) local.fail("negative oracle coefficient at L=" + L.str());
        }
        std::string label = shape.kind == FundKind::Raise ? "B.raise." : "B.lower.";
        label += shape.h < n ? "hlt" : "heq";
        if (shape.kind == FundKind::Lower && shape.h == n)
          label += A.at(n, n + 1) > 0 ? ".center" : ".side";
        local.census[label]++;
      } catch (const std::exception& e) {
        local.fail(std::string("exception: ") + e.what());
      }
      ++local.checked;
    }
#pragma omp critical(b_oracle_merge)
    rep.merge(local);
  }
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_d_oracle(int n, int r, bool parallel) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "d-oracle(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();

  const OracleD oracle(n, r);
  const auto& basis = oracle.basis();
  std::vector<std::pair<int, int>> inst;
  for (size_t li = 0; li < basis.size(); ++li) {
    const auto shape = fundamental_shape(basis[li].base());
    if (!shape || shape->kind == FundKind::Diagonal) continue;
    const auto lco = basis[li].base().co();
    for (size_t ri = 0; ri < basis.size(); ++ri)
      if (basis[ri].base().ro() == lco) inst.emplace_back(static_cast<int>(li), static_cast<int>(ri));
  }

#pragma omp parallel if (parallel)
  {
    SweepReport local;
#pragma omp for schedule(dynamic) nowait
    for (long long k = 0; k < static_cast<long long>(inst.size()); ++k) {
      const MatD& L = basis[static_cast<size_t>(inst[static_cast<size_t>(k)].first)];
      const MatD& A = basis[static_cast<size_t>(inst[static_cast<size_t>(k)].second)];
      try {
        const DProduct lhs = mult_fund_D(L, A);
        const SchurD rhs = oracle.product(L, A);
        if (lhs.value != rhs)
          local.fail("formula != oracle for L=" + L.str() + " A=" + A.str() + " [" + lhs.label +
                     "]");
        for (const auto& [idx, c] : rhs.terms()) {
          (void)idx;
          if (!c.all_coeffs_nonneg()) local.fail("negative oracle coefficient at L=" + L.str());
        }
        if (lhs.label != "weight-mismatch") local.census[lhs.label]++;
      } catch (const std::exception& e) {
        local.fail(std::string("exception: ") + e.what());
      }
      ++local.checked;
    }
#pragma omp critical(d_oracle_merge)
    rep.merge(local);
  }
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_halving_algebraic(int n, int r) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "halving-algebraic(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();
  for (const auto& A : enumerate_XiB(n, r)) {
    if (A.center() != 0 || A.at(n, n + 1) < 1) continue;
    const PolyQ g = coef_lower(A, n, n + 1);
    try {
      const PolyQ h = halve(g);
      if (h + h != g) rep.fail("halve(g) doubled != g at " + A.str());
    } catch (const NotDivisible&) {
      rep.fail("central lowering coefficient not even at " + A.str());
    }
    ++rep.checked;
  }
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_geometry(int n, int r, int p, bool parallel, bool full) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "geometry(n=" << n << ",r=" << r << ",p=" << p << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();

  const FlagVariety X = FlagVariety::build(n, r, p, 4000);
  const GeomTables T = GeomTables::build(X, parallel);
  const int sz = static_cast<int>(X.flags.size());

  // (a) isotropic line count matches the closed form.
  {
    const long long lines = count_isotropic_lines(p, r);
    const long long formula = (ipow(p, r) - 1) * (ipow(p, r - 1) + 1) / (p - 1);
    if (lines != formula) rep.fail("isotropic line count != closed form");
    rep.census["isotropic-lines"] = lines;
    ++rep.checked;
  }

  // (b) the orbit invariant takes exactly |XiB| distinct values.
  if (T.mats.size() != dim_XiB(n, r)) rep.fail("distinct orbit invariants != |XiB|");
  ++rep.checked;

  // (c) splitting census: label sets per orbit.
  {
    std::vector<std::set<std::pair<int, int>>> seen(T.mats.size());
    for (int x = 0; x < sz; ++x)
      for (int y = 0; y < sz; ++y) {
        const size_t k = static_cast<size_t>(x) * static_cast<size_t>(sz) + static_cast<size_t>(y);
        seen[static_cast<size_t>(T.cls[k])].insert({T.eps1[k], T.eps2[k]});
      }
    for (size_t m = 0; m < T.mats.size(); ++m) {
      const MatB& A = T.mats[m];
      const auto& labels = seen[m];
      if (A.center() != 0) {
        if (!(labels.size() == 1 && labels.count({0, 0})))
          rep.fail("non-split orbit carries sign labels at " + A.str());
      } else {
        std::set<std::pair<int, int>> expect;
        if (A.sgn() > 0)
          expect = {{+1, +1}, {-1, -1}};
        else
          expect = {{+1, -1}, {-1, +1}};
        if (labels != expect) rep.fail("split orbit labels wrong at " + A.str());
      }
      ++rep.checked;
    }
  }

  // (e) sign-label consistency with the corner-sum sign on every pair.
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      const size_t k = static_cast<size_t>(x) * static_cast<size_t>(sz) + static_cast<size_t>(y);
      if (T.eps1[k] == 0) continue;
      if (T.eps1[k] * T.eps2[k] != T.mats[static_cast<size_t>(T.cls[k])].sgn()) {
        rep.fail("eps1*eps2 != sgn(corner) on a pair");
        x = sz;
        break;
      }
    }
  ++rep.checked;

  // (d) convolution constants of fundamental products = coefficients at q = p.
  {
    const auto XiB = enumerate_XiB(n, r);
    for (const auto& L : XiB) {
      const auto shape = fundamental_shape(L);
      if (!shape || shape->kind == FundKind::Diagonal) continue;
      for (const auto& A : XiB) {
        if (A.ro() != L.co()) continue;
        const SchurB prod = mult_fund_B(L, A);
        for (const auto& W : XiB) {
          if (W.ro() != L.ro() || W.co() != A.co()) continue;
          const long long cnt = convolution_constant_B(T, L, A, W);
          const Int expect = prod.coefficient(W).eval_at(p);
          if (Int(cnt) != expect)
            rep.fail("convolution count != coefficient at L=" + L.str() + " A=" + A.str() +
                     " W=" + W.str());
          ++rep.checked;
        }
      }
    }
  }

  // Tagged structure constants are well defined: independent of the chosen
  // representative pair inside the special-orthogonal orbit.
  if (full) {
    const auto XiD = enumerate_XiD(n, r);
    int sampled = 0;
    for (const auto& L : XiD) {
      const auto shape = fundamental_shape(L.base());
      if (!shape || shape->kind == FundKind::Diagonal) continue;
      for (const auto& A : XiD) {
        if (A.base().ro() != L.base().co()) continue;
        for (const auto& W : XiD) {
          if (W.base().ro() != L.base().ro() || W.base().co() != A.base().co()) continue;
          const long long orbit = tagged_orbit_size(T, W);
          const long long first = convolution_constant_D(T, L, A, W, 0);
          for (int k = 1; k < orbit; ++k)
            if (convolution_constant_D(T, L, A, W, k) != first) {
              rep.fail("tagged constant depends on the representative pair");
              break;
            }
          ++rep.checked;
          if (++sampled >= 20) break;
        }
        if (sampled >= 20) break;
      }
      if (sampled >= 20) break;
    }
  }

  // Single-shift triangle direction: a lowering step composed with A lands on
  // one of the shifted matrices.
  if (full) {
    std::vector<int> lower_h(T.mats.size(), 0);
    for (size_t m = 0; m < T.mats.size(); ++m) {
      const auto shape = fundamental_shape(T.mats[m]);
      if (shape && shape->kind == FundKind::Lower) lower_h[m] = shape->h;
    }
    std::vector<std::set<int>> shifted_of(T.mats.size());
    for (size_t m = 0; m < T.mats.size(); ++m) {
      for (int h = 1; h <= n; ++h)
        for (int pp = 1; pp <= T.mats[m].N(); ++pp) {
          auto s = try_shift_down(T.mats[m], h, pp);
          if (!s) continue;
          auto it = T.mat_index.find(*s);
          if (it != T.mat_index.end()) shifted_of[m].insert(it->second * 16 + h);
        }
    }
    bool bad = false;
    for (int x = 0; x < sz && !bad; ++x)
      for (int e = 0; e < sz && !bad; ++e) {
        const int c1 = T.cls_at(x, e);
        const int h = lower_h[static_cast<size_t>(c1)];
        if (h == 0) continue;
        for (int y = 0; y < sz; ++y) {
          const int a = T.cls_at(e, y);
          if (T.mats[static_cast<size_t>(a)].ro() != T.mats[static_cast<size_t>(c1)].co()) continue;
          const int w = T.cls_at(x, y);
          if (!shifted_of[static_cast<size_t>(a)].count(w * 16 + h)) {
            rep.fail("composed pair not of single-shift form");
            bad = true;
            break;
          }
        }
      }
    ++rep.checked;
  }

  // Representative round trips and isotropy of the pairwise refinement.
  if (full) {
    for (const auto& A : enumerate_XiB(n, r)) {
      auto [F, FA] = make_orbit_rep(A, p);
      if (orbit_matrix(F, FA) != A) rep.fail("make_orbit_rep round trip failed at " + A.str());
      for (int i = 1; i <= n + 1; ++i)
        for (int j = 1; j <= (i <= n ? A.N() : n); ++j) {
          const Subspace Fij = sum(F.step(i - 1), intersect(F.step(i), FA.step(j)));
          if (!is_isotropic(Fij)) rep.fail("refinement step not isotropic at " + A.str());
        }
      ++rep.checked;
    }
  }

  // Line counts inside 2-step flags match the two closed forms.
  if (n == 2) {
    std::vector<Subspace> lines;
    {
      // all isotropic lines, via canonical representatives
      std::vector<int> v(static_cast<size_t>(2 * r), 0);
      std::function<void(int, bool)> rec = [&](int pos, bool leading) {
        if (pos == 2 * r) {
          if (leading) return;
          int acc = 0;
          for (int j = 0; j < 2 * r; ++j)
            acc = (acc + v[static_cast<size_t>(j)] * v[static_cast<size_t>(2 * r - 1 - j)]) % p;
          if (acc != 0) return;
          FpMat m(p, 1, 2 * r);
          for (int j = 0; j < 2 * r; ++j) m.at(0, j) = v[static_cast<size_t>(j)];
          lines.emplace_back(p, 2 * r, std::move(m));
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
    }
    for (const auto& F : X.flags) {
      const auto d = F.dim_vector();
      const int a1 = d[0], a2 = d[1], a3 = d[2], a4 = d[3];
      long long z3 = 0, z4 = 0;
      for (const auto& L : lines) {
        if (L.subspace_of(F.step(3)) && !L.subspace_of(F.step(2))) ++z3;
        if (L.subspace_of(F.step(4)) && !L.subspace_of(F.step(3))) ++z4;
      }
      if (a3 >= 2) {
        const long long want =
            ipow(p, a1 + a2) * ((ipow(p, a3 - 1) - 1) / (p - 1) + ipow(p, a3 / 2 - 1));
        if (z3 != want) rep.fail("Z3 count != closed form");
        ++rep.checked;
      }
      {
        const long long want = ipow(p, a1 + a2 + a3 - 1) * (ipow(p, a4) - 1) / (p - 1);
        if (z4 != want) rep.fail("Z4 count != closed form");
        ++rep.checked;
      }
    }
  }

  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_halving_geometric(int n, int r, int p, bool parallel) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "halving-geometric(n=" << n << ",r=" << r << ",p=" << p << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();
  const FlagVariety X = FlagVariety::build(n, r, p, 4000);
  const GeomTables T = GeomTables::build(X, parallel);
  for (const auto& A : enumerate_XiB(n, r)) {
    if (A.center() != 0 || A.at(n, n + 1) < 1) continue;
    try {
      auto [plus, minus] = verify_halving(T, A);
      if (plus != minus) rep.fail("unequal halving counts at " + A.str());
      const Int total = coef_lower(A, n, n + 1).eval_at(p);
      if (Int(plus + minus) != total) rep.fail("halving counts do not sum to g' at " + A.str());
    } catch (const std::exception& e) {
      rep.fail(std::string("halving raised at ") + A.str() + ": " + e.what());
    }
    ++rep.checked;
  }
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_structural(uint64_t seed) {
  SweepReport rep;
  rep.name = "structural";
  const double t0 = now_seconds();
  std::mt19937_64 rng(seed);

  // Group orders and the even-n_r description of W(D_r).
  for (int r = 2; r <= 4; ++r) {
    const WeylGroup& GB = WeylGroup::get(Ambient::B, r);
    const WeylGroup& GD = WeylGroup::get(Ambient::D, r);
    unsigned long long bord = 1, fact = 1;
    for (int i = 1; i <= r; ++i) fact *= static_cast<unsigned>(i);
    bord = (1ull << r) * fact;
    if (GB.size() != bord) rep.fail("wrong |W(B_r)| at r=" + std::to_string(r));
    if (GD.size() != bord / 2) rep.fail("wrong |W(D_r)| at r=" + std::to_string(r));
    std::set<std::vector<int>> even_b, dset;
    for (const auto& w : GB.elems)
      if (w.in_type_d()) even_b.insert(w.images());
    for (const auto& w : GD.elems) dset.insert(w.images());
    if (even_b != dset) rep.fail("W(D_r) != even-n_r part of W(B_r) at r=" + std::to_string(r));
    rep.checked += 3;

    // Generator relations as permutations.
    auto s = [&](int i) { return SignedPerm::generator(r, i); };
    const SignedPerm e(r);
    for (int i = 1; i <= r; ++i) {
      if (s(i) * s(i) != e) rep.fail("generator not an involution");
      ++rep.checked;
    }
    for (int i = 1; i <= r; ++i)
      for (int j = i + 2; j <= r; ++j) {
        if ((i < r && j < r) || j == r) {
          if (s(i) * s(j) != s(j) * s(i)) rep.fail("distant generators do not commute");
          ++rep.checked;
        }
      }
    for (int j = 1; j + 1 <= r - 1; ++j) {
      if (s(j) * s(j + 1) * s(j) != s(j + 1) * s(j) * s(j + 1)) rep.fail("braid relation failed");
      ++rep.checked;
    }
    if (r >= 2) {
      if (s(r - 1) * s(r) * s(r - 1) * s(r) != s(r) * s(r - 1) * s(r) * s(r - 1))
        rep.fail("order-4 braid relation failed");
      ++rep.checked;
    }

    // Hecke relations as element identities.
    auto Tb = [&](int i) { return HeckeElt::basis(Ambient::B, r, s(i)); };
    const HeckeElt one = HeckeElt::unit(Ambient::B, r);
    const PolyQ q = PolyQ::q_power(1);
    for (int i = 1; i < r; ++i) {
      if (Tb(i).mul(Tb(i)) != Tb(i).scaled(q - PolyQ(1)) + one.scaled(q))
        rep.fail("quadratic Hecke relation failed");
      ++rep.checked;
    }
    if (Tb(r).mul(Tb(r)) != one) rep.fail("T_r^2 != 1");
    ++rep.checked;
    for (int i = 1; i < r; ++i)
      for (int j = i + 2; j <= r; ++j) {
        if (Tb(i).mul(Tb(j)) != Tb(j).mul(Tb(i))) rep.fail("Hecke commuting relation failed");
        ++rep.checked;
      }
    for (int j = 1; j + 1 <= r - 1; ++j) {
      if (Tb(j).mul(Tb(j + 1)).mul(Tb(j)) != Tb(j + 1).mul(Tb(j)).mul(Tb(j + 1)))
        rep.fail("Hecke braid relation failed");
      ++rep.checked;
    }
    if (Tb(r - 1).mul(Tb(r)).mul(Tb(r - 1)).mul(Tb(r)) !=
        Tb(r).mul(Tb(r - 1)).mul(Tb(r)).mul(Tb(r - 1)))
      rep.fail("Hecke order-4 braid relation failed");
    ++rep.checked;

    // Type-D presentation.
    auto Td = [&](Gen g) { return HeckeElt::basis(Ambient::D, r, SignedPerm::generator(r, g)); };
    const HeckeElt oneD = HeckeElt::unit(Ambient::D, r);
    if (Td(kSigma).mul(Td(kSigma)) != Td(kSigma).scaled(q - PolyQ(1)) + oneD.scaled(q))
      rep.fail("T_sigma quadratic relation failed");
    ++rep.checked;
    for (int i = 1; i <= r - 1; ++i) {
      if (i == r - 2) continue;
      if (Td(kSigma).mul(Td(i)) != Td(i).mul(Td(kSigma)))
        rep.fail("T_sigma commuting relation failed");
      ++rep.checked;
    }
    if (r >= 3) {
      if (Td(r - 2).mul(Td(kSigma)).mul(Td(r - 2)) != Td(kSigma).mul(Td(r - 2)).mul(Td(kSigma)))
        rep.fail("T_sigma braid relation failed");
      ++rep.checked;
    }

    // The type-D engine agrees with folding T_sigma = T_r T_{r-1} T_r in type B.
    if (r >= 3) {
      const WeylGroup& GDr = WeylGroup::get(Ambient::D, r);
      for (size_t id = 0; id < GDr.size(); ++id) {
        const SignedPerm& w = GDr.elems[id];
        HeckeElt lhs = HeckeElt::basis(Ambient::D, r, w).mul_gen(kSigma);
        HeckeElt viaB = HeckeElt::basis(Ambient::B, r, w).mul_gen(r).mul_gen(r - 1).mul_gen(r);
        HeckeElt lhs_in_b(Ambient::B, r);
        for (const auto& [tid, c] : lhs.terms())
          lhs_in_b.add_term(WeylGroup::get(Ambient::B, r).id_of(GDr.elems[static_cast<size_t>(tid)]), c);
        if (lhs_in_b != viaB) rep.fail("type-D engine disagrees with type-B folding");
        ++rep.checked;
      }
    }
  }

  // flip is an involutive automorphism fixing the short generators.
  {
    const int r = 4;
    const WeylGroup& GD = WeylGroup::get(Ambient::D, r);
    for (int i = 1; i <= r - 2; ++i) {
      if (flip(SignedPerm::generator(r, i)) != SignedPerm::generator(r, i))
        rep.fail("flip moves a fixed generator");
      ++rep.checked;
    }
    if (flip(SignedPerm::generator(r, r - 1)) != SignedPerm::generator(r, kSigma))
      rep.fail("flip(s_{r-1}) != varsigma");
    ++rep.checked;
    for (const auto& u : GD.elems) {
      if (flip(flip(u)) != u) rep.fail("flip not involutive");
      ++rep.checked;
    }
    std::uniform_int_distribution<size_t> pick(0, GD.size() - 1);
    for (int k = 0; k < 2000; ++k) {
      const SignedPerm& u = GD.elems[pick(rng)];
      const SignedPerm& v = GD.elems[pick(rng)];
      if (flip(u * v) != flip(u) * flip(v)) rep.fail("flip not multiplicative");
      ++rep.checked;
    }
  }

  // Parabolic subgroups equal tabloid stabilizers; distinguished reps are
  // coset minima.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}) {
    const WeylGroup& GB = WeylGroup::get(Ambient::B, r);
    for (const auto& la : all_compositions(n + 1, r)) {
      const ParabolicSpec spec = ParabolicSpec::typeB(n, r, la);
      const Subgroup H = enumerate_parabolic_subgroup(spec);
      const auto blocks = spec.blocks();
      std::vector<int> stab;
      for (size_t id = 0; id < GB.size(); ++id) {
        const SignedPerm& w = GB.elems[id];
        bool ok = true;
        for (const auto& b : blocks) {
          std::set<int> bs(b.begin(), b.end());
          for (int x : b)
            if (!bs.count(w(x))) { ok = false; break; }
          if (!ok) break;
        }
        if (ok) stab.push_back(static_cast<int>(id));
      }
      if (stab != H.elem_ids) rep.fail("type-B parabolic != stabilizer at " + spec.str());
      ++rep.checked;
    }
    const WeylGroup& GD = WeylGroup::get(Ambient::D, r);
    for (const auto& al : all_signed_compositions(n, r)) {
      const ParabolicSpec spec = ParabolicSpec::typeD(n, r, al);
      const Subgroup H = enumerate_parabolic_subgroup(spec);
      const auto blocks = spec.blocks();
      std::vector<int> stab;
      for (size_t id = 0; id < GD.size(); ++id) {
        const SignedPerm& w = GD.elems[id];
        bool ok = true;
        for (const auto& b : blocks) {
          std::set<int> bs(b.begin(), b.end());
          for (int x : b)
            if (!bs.count(w(x))) { ok = false; break; }
          if (!ok) break;
        }
        if (ok) stab.push_back(static_cast<int>(id));
      }
      if (stab != H.elem_ids) rep.fail("type-D parabolic != stabilizer at " + spec.str());
      ++rep.checked;
    }
  }

  // Minimality of distinguished representatives, exhaustively at small rank.
  auto check_minimality = [&rep](const WeylGroup& G, const std::vector<Subgroup>& subs) {
    for (const auto& P1 : subs)
      for (const auto& P2 : subs) {
        const auto part = double_cosets(P1, P2);
        size_t covered = 0;
        for (size_t ci = 0; ci < part.rep_ids.size(); ++ci) {
          covered += part.members[ci].size();
          for (int mid : part.members[ci])
            if (G.len[static_cast<size_t>(mid)] < G.len[static_cast<size_t>(part.rep_ids[ci])])
              rep.fail("non-minimal distinguished representative");
        }
        if (covered != G.size()) rep.fail("double cosets do not tile the group");
        ++rep.checked;
      }
  };
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}}) {
    std::vector<Subgroup> subs;
    for (const auto& la : all_compositions(n + 1, r))
      subs.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeB(n, r, la)));
    check_minimality(WeylGroup::get(Ambient::B, r), subs);
    std::vector<Subgroup> dsubs;
    for (const auto& al : all_signed_compositions(n, r))
      dsubs.push_back(enumerate_parabolic_subgroup(ParabolicSpec::typeD(n, r, al)));
    check_minimality(WeylGroup::get(Ambient::D, r), dsubs);
  }

  // Parabolic sums absorb their own generators: x_lambda T_s = q x_lambda.
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    for (const auto& la : all_compositions(n + 1, r)) {
      const ParabolicSpec spec = ParabolicSpec::typeB(n, r, la);
      const HeckeElt x = x_parabolic(spec);
      for (Gen g : spec.generators()) {
        if (g == r) continue;
        if (x.mul_gen(g) != x.scaled(PolyQ::q_power(1)))
          rep.fail("parabolic absorption failed at " + spec.str());
        ++rep.checked;
      }
    }
  }

  // tau: anti-involution on both algebras.
  for (Ambient amb : {Ambient::B, Ambient::D}) {
    const int r = 3;
    const WeylGroup& G = WeylGroup::get(amb, r);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    for (int k = 0; k < 25; ++k) {
      const HeckeElt x = HeckeElt::basis_id(amb, r, static_cast<int>(pick(rng)));
      const HeckeElt y = HeckeElt::basis_id(amb, r, static_cast<int>(pick(rng)));
      if (x.mul(y).tau() != y.tau().mul(x.tau())) rep.fail("tau is not an anti-homomorphism");
      if (x.tau().tau() != x) rep.fail("tau is not an involution");
      rep.checked += 2;
    }
  }

  // Specialization q -> 1 turns products into the group algebra of W.
  {
    const int r = 3;
    const WeylGroup& G = WeylGroup::get(Ambient::B, r);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    for (int k = 0; k < 25; ++k) {
      const size_t ui = pick(rng), vi = pick(rng);
      const HeckeElt prod = HeckeElt::basis_id(Ambient::B, r, static_cast<int>(ui))
                                .mul(HeckeElt::basis_id(Ambient::B, r, static_cast<int>(vi)));
      const int uv = G.id_of(G.elems[ui] * G.elems[vi]);
      for (const auto& [id, c] : prod.terms()) {
        const Int v = c.eval_at(1);
        if (v != (id == uv ? 1 : 0)) rep.fail("q=1 specialization is not the group algebra");
      }
      ++rep.checked;
    }
  }

  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_idempotent_identity(int n, int r, bool parallel) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "idempotent-identity(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();
  const OracleD oracle(n, r);
  const auto& basis = oracle.basis();
  const auto alphas = all_signed_compositions(n, r);
  std::vector<MatD> idems;
  for (const auto& al : alphas) idems.push_back(weight_idempotent_index(al, n, r));

#pragma omp parallel if (parallel)
  {
    SweepReport local;
#pragma omp for schedule(dynamic) nowait
    for (long long k = 0; k < static_cast<long long>(basis.size()); ++k) {
      const MatD& A = basis[static_cast<size_t>(k)];
      SchurD left_sum(n, r), right_sum(n, r);
      try {
        for (const auto& I : idems) {
          left_sum += oracle.product(I, A);
          right_sum += oracle.product(A, I);
        }
        SchurD expect(n, r);
        expect.add(A, PolyQ(1));
        if (left_sum != expect) local.fail("sum of idempotents not a left identity at " + A.str());
        if (right_sum != expect)
          local.fail("sum of idempotents not a right identity at " + A.str());
      } catch (const std::exception& e) {
        local.fail(std::string("exception: ") + e.what());
      }
      ++local.checked;
    }
#pragma omp critical(idem_merge)
    rep.merge(local);
  }
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.seconds = now_seconds() - t0;
  return rep;
}

SweepReport sweep_embedding(int n, int r) {
  SweepReport rep;
  std::ostringstream nm;
  nm << "embedding(n=" << n << ",r=" << r << ")";
  rep.name = nm.str();
  const double t0 = now_seconds();
  const auto XiB = enumerate_XiB(n, r);
  for (const auto& L : XiB) {
    const auto shape = fundamental_shape(L);
    if (!shape) continue;
    for (const auto& A : XiB) {
      if (A.ro() != L.co()) continue;
      SchurD lhs(n, r);
      for (const auto& tl : tags_over(L))
        for (const auto& ta : tags_over(A)) lhs += mult_fund_D(tl, ta).value;
      const SchurD rhs = embed(mult_fund_B(L, A));
      if (lhs != rhs) rep.fail("embedding not multiplicative at L=" + L.str() + " A=" + A.str());
      ++rep.checked;
    }
  }
  rep.seconds = now_seconds() - t0;
  return rep;
}

std::vector<std::string> required_d_branches() {
  return {
      "raise.dot.dot.hlt",       "raise.dot.dot.heq",      "raise.dot.dot.heq.split",
      "raise.dot.doo.hlt",       "raise.dot.doo.heq",      "raise.dot.dod.hlt",
      "raise.dot.dod.heq",       "raise.ooo.ooo.hlt",      "raise.ooo.ood.hlt",
      "raise.ood.dot.heq.split", "raise.ood.doo.heq",      "raise.ood.dod.heq",
      "lower.dot.dot.hlt",       "lower.dot.dot.heq",      "lower.dot.doo.hlt",
      "lower.dot.doo.heq",       "lower.dot.dod.hlt",      "lower.dot.dod.heq.half",
      "lower.ooo.ooo.hlt",       "lower.ooo.ood.hlt",      "lower.doo.ooo.heq",
      "lower.doo.ood.heq.half",
  };
}

}  // namespace qschur
