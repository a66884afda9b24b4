#pragma once

#include "fishburn/polynomial.hpp"

namespace fishburn {

// Truncations of the three generating functions whose coefficients this
// library enumerates. All take the truncation order N >= 1 and sum the first
// N product terms; that suffices because the m-th summand of each series has
// no term of t-degree below m (see the summand accessors, which the tests use
// to check exactly that bound).

// 1 + sum_{m>=1} prod_{i=1}^{m} (1 - (1-t)^i); the t^n coefficient is the
// n-th Fishburn number.
TruncatedPolynomial fishburn_series(int order);

// 1 + sum_{m>=1} prod_{i=1}^{m} (1 - (1-t)^{i-1} (1-zt)); z marks the
// d-statistic, so the (t^n, z^d) coefficient refines the Fishburn numbers.
TruncatedPolynomial refined_series_simple(int order);

// 1 + sum_{m>=1} [ sum_{r>=0} binom(m+r-1, r) z^{r+1} t^{r+1} ]
//              * prod_{i=1}^{m-1} (1 - (1-t)^i);
// a different derivation of the same refinement — the two agree coefficient
// by coefficient, which the verification suites check.
TruncatedPolynomial refined_series_rk(int order);

// The m-th summand of each series (m >= 1), truncated at `order`. Exposed so
// the low-degree bound justifying the finite sums is a tested fact rather
// than a comment.
TruncatedPolynomial fishburn_summand(int m, int order);
TruncatedPolynomial refined_simple_summand(int m, int order);
TruncatedPolynomial refined_rk_summand(int m, int order);

}  // namespace fishburn
