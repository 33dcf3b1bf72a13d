#pragma once

// Verification sweeps: data-parallel kernels checking the closed-form
// products against the Hecke-algebra and finite-geometry oracles, plus the
// enumerative and structural invariant suites. Every kernel has an OpenMP
// path and a plain serial reference path selected by `parallel`; the two
// must produce identical reports.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qschur/flaggeom.hpp"
#include "qschur/oracle.hpp"
#include "qschur/schur.hpp"

namespace qschur {

struct SweepReport {
  std::string name;
  bool ok = true;
  long long checked = 0;
  std::vector<std::string> failures;        // first few, with details
  std::map<std::string, long long> census;  // fired case labels, counters
  double seconds = 0;

  void fail(const std::string& what);
  void merge(const SweepReport& o);
  std::string summary() const;
};

// Criterion-style sweeps. All comparisons are exact.
SweepReport sweep_dimensions(int n_max, int r_max);
// with_d controls whether the type-D (eta) side runs; the type-D formula
// theory assumes r >= 4, so mid ranks only exercise the type-B side.
SweepReport sweep_bijections(int n, int r, bool with_d = true);
SweepReport sweep_b_oracle(int n, int r, bool parallel = true);
SweepReport sweep_d_oracle(int n, int r, bool parallel = true);
SweepReport sweep_halving_algebraic(int n, int r);
SweepReport sweep_geometry(int n, int r, int p, bool parallel = true, bool full = true);
SweepReport sweep_halving_geometric(int n, int r, int p, bool parallel = true);
SweepReport sweep_structural(uint64_t seed);
SweepReport sweep_idempotent_identity(int n, int r, bool parallel = true);
SweepReport sweep_embedding(int n, int r);

// Branch labels that must fire during the type-D oracle sweeps at r = 4,
// n in {1,2} combined (the dispatcher coverage assertion).
std::vector<std::string> required_d_branches();

}  // namespace qschur
