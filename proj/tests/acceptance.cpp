// Acceptance suite: runs every exactness criterion at its pinned parameters
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <omp.h>

#include <cstdio>
#include <iostream>
#include <set>

#include "qschur/sweeps.hpp"

using namespace qschur;

namespace {

int failures = 0;

void line(int k, const char* what, bool ok, const std::string& detail) {
  std::printf("criterion %d [%s]: %s%s%s\n", k, what, ok ? "PASS" : "FAIL",
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string brief(const SweepReport& r) {
  std::string s = "checked " + std::to_string(r.checked) + " in " +
                  std::to_string(r.seconds).substr(0, 6) + "s";
  for (const auto& f : r.failures) s += "; " + f;
  return s;
}

}  // namespace

int main() {
  std::printf("acceptance suite, %d thread(s)\n", omp_get_max_threads());

  // 1. Dimension formulas and class census identity for n <= 2, r <= 4.
  {
    SweepReport rep = sweep_dimensions(2, 4);
    line(1, "dimension formulas", rep.ok, brief(rep));
  }

  // 2. Type-B fundamental products vs the Hecke oracle.
  {
    SweepReport all;
    all.ok = true;
    for (auto [n, r] : {std::pair<int, int>{1, 2}, {1, 3}, {2, 3}})
      all.merge(sweep_b_oracle(n, r));
    const std::set<std::string> need = {"B.raise.hlt",        "B.raise.heq",
                                        "B.lower.hlt",        "B.lower.heq.side",
                                        "B.lower.heq.center"};
    std::string miss;
    for (const auto& k : need)
      if (!all.census.count(k)) miss += " missing:" + k;
    line(2, "type-B formulas vs Hecke oracle", all.ok && miss.empty(), brief(all) + miss);
  }

  // 3. Type-D fundamental products vs the type-D Hecke oracle, with branch
  //    coverage at r = 4, n in {1, 2}.
  {
    SweepReport all;
    all.ok = true;
    all.merge(sweep_d_oracle(1, 4));
    all.merge(sweep_d_oracle(2, 4));
    std::string miss;
    for (const auto& k : required_d_branches())
      if (!all.census.count(k)) miss += " missing:" + k;
    line(3, "type-D formulas vs Hecke oracle", all.ok && miss.empty(), brief(all) + miss);
    std::printf("    fired branches:\n");
    for (const auto& [k, v] : all.census) std::printf("      %-28s %lld\n", k.c_str(), v);
  }

  // 4. Halving claims, algebraic (r = 4) and geometric at (1,2,3).
  {
    SweepReport all;
    all.ok = true;
    all.merge(sweep_halving_algebraic(1, 4));
    all.merge(sweep_halving_algebraic(2, 4));
    all.merge(sweep_halving_geometric(1, 2, 3));
    line(4, "halving claims", all.ok, brief(all));
  }

  // 5. Geometry censuses and convolution constants at (1,2,3), with the
  //    census checks repeated at p = 5.
  {
    SweepReport p3 = sweep_geometry(1, 2, 3, true, true);
    bool lines16 = p3.census.count("isotropic-lines") && p3.census["isotropic-lines"] == 16;
    SweepReport p5 = sweep_geometry(1, 2, 5, true, false);
    SweepReport big = sweep_geometry(1, 3, 3, true, false);  // optional third instance
    SweepReport all;
    all.ok = true;
    all.merge(p3);
    all.merge(p5);
    all.merge(big);
    line(5, "geometry censuses and constants", all.ok && lines16,
         brief(all) + (lines16 ? "" : " missing: 16 isotropic lines at p=3"));
  }

  // 6. Structural invariants: relations, tau, bijection round trips, the
  //    idempotent identity at (1,4), and the flip automorphism.
  {
    SweepReport all;
    all.ok = true;
    all.merge(sweep_structural(0x5eed));
    all.merge(sweep_bijections(1, 2));
    all.merge(sweep_bijections(1, 3, /*with_d=*/false));
    all.merge(sweep_bijections(2, 3, /*with_d=*/false));
    all.merge(sweep_bijections(1, 4));
    all.merge(sweep_bijections(2, 4));
    all.merge(sweep_idempotent_identity(1, 4));
    line(6, "structural invariants", all.ok, brief(all));
  }

  // 7. Embedding multiplicativity on fundamental products at (1,4).
  {
    SweepReport rep = sweep_embedding(1, 4);
    line(7, "embedding multiplicativity", rep.ok, brief(rep));
  }

  if (failures) {
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("acceptance: all criteria passed\n");
  return 0;
}
