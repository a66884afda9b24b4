#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fishburn/enumeration.hpp"

namespace fishburn {

// Outcome of one verification suite: `pass` iff no check disagreed.
// `instances` counts the objects examined; `notes` carries one deterministic
// summary line per n; `failures` describes every disagreement found (truncated
// after a few dozen to keep reports readable).
struct SuiteResult {
  std::string suite;
  int n_max = 0;
  bool pass = true;
  std::int64_t instances = 0;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};

// The suites, in the order suite_names() reports them:
//
//   involution         psi is a sign-reversing involution on n-dot diagrams,
//                      preserving dots, d-statistic, and violation level, and
//                      changing length by exactly one off its fixed points.
//   involution-refined the same for the composition-paired involution, with
//                      fixed points counted against the cdf-table refinement.
//   phi-roundtrip      the matching <-> inversion-table bijection round-trips
//                      both ways, and cdf tables correspond exactly to the
//                      2-nesting-free matchings.
//   identity-eq1       the univariate identity: series coefficients, cdf
//                      tables, involution fixed points, signed diagram sums,
//                      ascent sequences, pattern-avoiding permutations, and
//                      (for small n) nesting-free matching counts all agree.
//   identity-eq7-eq8   the bivariate identity: both refined series agree with
//                      each other, with the cdf tables split by d-statistic,
//                      with refined fixed points, with ascent-sequence zero
//                      counts, and collapse to the univariate series at z = 1.
//   embedding          the paired-diagram embedding is injective with exactly
//                      the characterized image, and matches fixed points.
//   eulerian           the left-nesting distribution: exhaustive counts equal
//                      the recurrence and the reflected second-order Eulerian
//                      triangle, with the stated row sums and edge values.
//   insertion-cases    the rightmost-arc insertion slots split into n + j
//                      preserving and n - 1 - j incrementing ones on every
//                      matching on [2n-2] with j left-nestings.
SuiteResult verify_involution(int n_max, Cap cap = {});
SuiteResult verify_involution_refined(int n_max, Cap cap = {});
SuiteResult verify_phi_roundtrip(int n_max, Cap cap = {});
SuiteResult verify_series_identity(int n_max, Cap cap = {});
SuiteResult verify_refined_identity(int n_max, Cap cap = {});
SuiteResult verify_embedding(int n_max, Cap cap = {});
SuiteResult verify_eulerian(int n_max, Cap cap = {});
SuiteResult verify_insertion_cases(int n_max, Cap cap = {});

std::vector<std::string> suite_names();

// Dispatch by suite name; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, int n_max, Cap cap = {});

}  // namespace fishburn
