#include <doctest.h>

#include "repst/sweeps.hpp"

using namespace repst;

TEST_CASE("small sweeps pass") {
  CHECK(dimension_oracle_sweep(4, 12).pass());
  CHECK(central_oracle_sweep(3, 4, 8).pass());
  CHECK(jm_agreement_sweep(5).pass());
  CHECK(variable_stability_sweep(3, 3).pass());
  CHECK(pieri_sweep(5).pass());
  CHECK(integer_valued_sweep(4, 3, 4).pass());
  CHECK(stirling_sweep(4, 10, 8).pass());
  CHECK(bounds_sweep(12).pass());
  CHECK(graded_sweep(2, 4).pass());
}

TEST_CASE("sweeps count their checks") {
  const auto r = dimension_oracle_sweep(2, 6);
  // lambda = (), (1), (2), (1,1) with n from |lambda| + lambda_1 to 6.
  CHECK(r.checks == 7 + 5 + 3 + 4);
}

TEST_CASE("flipped content convention is caught") {
  const auto r = central_oracle_sweep(4, 5, 10, ContentConvention::RowMinusCol);
  REQUIRE_FALSE(r.pass());
  bool at_five = false;
  for (const auto& f : r.failures) {
    CHECK(f.check == "jm-oracle");
    if (f.detail.at("n") == 5) at_five = true;
  }
  CHECK(at_five);
}

TEST_CASE("reports are deterministic and serializable") {
  const auto a = central_oracle_sweep(3, 3, 7, ContentConvention::RowMinusCol);
  const auto b = central_oracle_sweep(3, 3, 7, ContentConvention::RowMinusCol);
  CHECK(a.to_json() == b.to_json());
  const Json j = a.to_json();
  CHECK(j["pass"] == false);
  CHECK(j["failures"].size() == a.failures.size());

  SuiteReport merged{"x", 0, {}};
  merged.merge(a);
  merged.merge(b);
  CHECK(merged.checks == a.checks + b.checks);
  CHECK(merged.failures.size() == 2 * a.failures.size());
}
