#include "doctest.h"

#include <algorithm>

#include "hkquot/verify.hpp"

using namespace hkq;

TEST_CASE("fresh verification passes with exactly the registered tensions") {
  const auto rep = run_verification();
  for (const auto& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.passed);
  }
  CHECK(rep.ok());
  CHECK(rep.tensions.size() == 3);
  CHECK(rep.tensions.size() <= known_tension_registry().size());
  for (const auto& t : rep.tensions) {
    const auto& reg = known_tension_registry();
    CHECK(std::find(reg.begin(), reg.end(), t.location) != reg.end());
    CHECK(t.match == (t.fixture == t.recomputed));
  }
  CHECK(rep.tensions[0].fixture == "75");
  CHECK(rep.tensions[0].recomputed == "76");
}

TEST_CASE("corrupted table data fails verification") {
  auto table = reference_ys_table();
  table[20].h22 += 1;
  CHECK_FALSE(run_verification(table).ok());

  auto dropped = reference_ys_table();
  dropped.pop_back();
  CHECK_FALSE(run_verification(dropped).ok());

  auto bogus = reference_ys_table();
  bogus[3].Nprime = 11;
  CHECK_FALSE(run_verification(bogus).ok());
}

TEST_CASE("verification is deterministic") {
  const auto a = run_verification();
  const auto b = run_verification();
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}
