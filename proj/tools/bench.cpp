// Benchmark comparing the serial reference paths of the verification
// kernels with their OpenMP counterparts, checking that both produce the
// same reports.

#include <omp.h>

#include <cstdio>

#include "qschur/sweeps.hpp"

using namespace qschur;

namespace {

bool same(const SweepReport& a, const SweepReport& b) {
  return a.ok == b.ok && a.checked == b.checked && a.census == b.census;
}

template <class F>
void run(const char* label, F&& kernel) {
  const SweepReport serial = kernel(false);
  const SweepReport parallel = kernel(true);
  std::printf("%-28s serial %8.3fs   omp %8.3fs   speedup %5.2fx   %s\n", label, serial.seconds,
              parallel.seconds, parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0,
              same(serial, parallel) ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("benchmark, max threads = %d\n", omp_get_max_threads());
  run("d-oracle (1,4)", [](bool par) { return sweep_d_oracle(1, 4, par); });
  run("b-oracle (2,3)", [](bool par) { return sweep_b_oracle(2, 3, par); });
  run("geometry (1,2,5)", [](bool par) { return sweep_geometry(1, 2, 5, par, false); });
  run("idempotent identity (1,4)", [](bool par) { return sweep_idempotent_identity(1, 4, par); });
  return 0;
}
