#include <doctest.h>

#include "qschur/sweeps.hpp"

using namespace qschur;

namespace {
void expect_clean(const SweepReport& rep) {
  CHECK(rep.ok);
  CHECK(rep.checked > 0);
  for (const auto& f : rep.failures) CHECK_MESSAGE(false, f);
}
}  // namespace

TEST_CASE("rank-4 type-B products agree with the oracle at both h positions") {
  expect_clean(sweep_b_oracle(1, 4, false));
  expect_clean(sweep_b_oracle(2, 4, false));
}

TEST_CASE("embedding multiplicativity including h < n") {
  expect_clean(sweep_embedding(2, 4));
}

TEST_CASE("serial and parallel sweeps agree") {
  const SweepReport s = sweep_d_oracle(1, 4, false);
  const SweepReport p = sweep_d_oracle(1, 4, true);
  CHECK(s.ok == p.ok);
  CHECK(s.checked == p.checked);
  CHECK(s.census == p.census);
  const SweepReport gs = sweep_geometry(1, 2, 3, false, true);
  const SweepReport gp = sweep_geometry(1, 2, 3, true, true);
  CHECK(gs.ok == gp.ok);
  CHECK(gs.checked == gp.checked);
  CHECK(gs.census == gp.census);
}
