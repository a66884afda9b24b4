#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fishburn/verify.hpp"

using namespace fishburn;

// ===== the suites =====

TEST_CASE("every suite passes at moderate depth") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteResult result = run_suite(name, 5);
    CHECK(result.pass);
    CHECK(result.suite == name);
    CHECK(result.n_max == 5);
    CHECK(result.instances > 0);
    CHECK(!result.notes.empty());
    CHECK(result.failures.empty());
  }
}

TEST_CASE("suite names dispatch to the matching functions") {
  const auto names = suite_names();
  const std::vector<std::string> expected = {
      "involution",     "involution-refined", "phi-roundtrip", "identity-eq1",
      "identity-eq7-eq8", "embedding",        "eulerian",      "insertion-cases"};
  CHECK(names == expected);
  CHECK_THROWS_AS(run_suite("no-such-suite", 4), std::invalid_argument);
}

TEST_CASE("suite results are deterministic") {
  const SuiteResult first = run_suite("involution", 4);
  const SuiteResult second = run_suite("involution", 4);
  CHECK(first.instances == second.instances);
  CHECK(first.notes == second.notes);
}

TEST_CASE("suites respect the cap") {
  CHECK_THROWS_AS(verify_involution(8, Cap{1000}), CapExceeded);
  CHECK_THROWS_AS(verify_eulerian(8, Cap{1000}), CapExceeded);
}

TEST_CASE("suites validate their depth") {
  CHECK_THROWS_AS(run_suite("involution", 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_phi_roundtrip(-1), std::invalid_argument);
}

// ===== deeper single-suite runs =====

TEST_CASE("involution suite at depth six") {
  const SuiteResult result = verify_involution(6);
  CHECK(result.pass);
  // one object per diagram with up to six dots
  CHECK(result.instances == 1 + 2 + 7 + 33 + 197 + 1419);
}

TEST_CASE("phi suite at depth five") {
  const SuiteResult result = verify_phi_roundtrip(5);
  CHECK(result.pass);
}

TEST_CASE("insertion suite at depth five") {
  const SuiteResult result = verify_insertion_cases(5);
  CHECK(result.pass);
}
