#include "helpers.hpp"
#include "iads/suites.hpp"

#include <doctest.h>

using namespace iads;
using namespace iads::testing;

namespace {
void expect_green(const std::vector<SuiteReport>& reports) {
  for (const auto& rep : reports)
    for (const auto& c : rep.checks) {
      INFO(rep.suite, " / ", c.name, ": ", c.detail);
      CHECK(c.status != "fail");
    }
}
}  // namespace

TEST_CASE("property suites pass on (Z, x2, x3)") {
  expect_green(run_all_suites(z_2_3(), 42, 40));
}

TEST_CASE("property suites pass on the 2x2 lattice system") {
  expect_green(run_all_suites(lattice2(), 42, 16));
}

TEST_CASE("property suites pass on the order-2 shift") {
  expect_green(run_all_suites(shift_system(2), 42, 24));
}

TEST_CASE("property suites pass on the two-generator shift pair") {
  expect_green(run_all_suites(shift_pair(), 42, 24));
}

TEST_CASE("property suites pass on the mixed direct sum") {
  expect_green(run_all_suites(direct_sum_mixed(), 42, 12));
}

TEST_CASE("property suites pass on the mixed-index system") {
  expect_green(run_all_suites(mixed_index(), 42, 12));
}

TEST_CASE("suites are deterministic in the seed") {
  auto a = run_all_suites(z_2_3(), 7, 10);
  auto b = run_all_suites(z_2_3(), 7, 10);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].checks.size() == b[i].checks.size());
    for (size_t j = 0; j < a[i].checks.size(); ++j) {
      CHECK(a[i].checks[j].status == b[i].checks[j].status);
      CHECK(a[i].checks[j].detail == b[i].checks[j].detail);
    }
  }
}
