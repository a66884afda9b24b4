#include "fishburn/series.hpp"

#include <stdexcept>

namespace fishburn {

namespace {

void require_order(int order) {
  if (order < 1) throw std::invalid_argument("series: order must be >= 1");
}

TruncatedPolynomial t_monomial(int order) {
  return TruncatedPolynomial::term(order, 1, 1, 0);
}

// 1 - (1-t)^i
TruncatedPolynomial one_minus_pow(int order, int i) {
  auto one = TruncatedPolynomial::constant(order, 1);
  return one - (one - t_monomial(order)).pow(i);
}

// 1 - (1-t)^{i-1} (1-zt)
TruncatedPolynomial one_minus_pow_refined(int order, int i) {
  auto one = TruncatedPolynomial::constant(order, 1);
  auto zt = TruncatedPolynomial::term(order, 1, 1, 1);
  return one - (one - t_monomial(order)).pow(i - 1) * (one - zt);
}

// sum_{r >= 0} binom(m+r-1, r) z^{r+1} t^{r+1}, truncated: r+1 <= order.
TruncatedPolynomial geometric_block(int order, int m) {
  TruncatedPolynomial out(order);
  std::int64_t binom = 1;  // binom(m-1, 0)
  for (int r = 0; r + 1 <= order; ++r) {
    if (r > 0) binom = checked_mul(binom, m + r - 1) / r;  // consecutive ratio is exact
    out += TruncatedPolynomial::term(order, binom, r + 1, r + 1);
  }
  return out;
}

}  // namespace

TruncatedPolynomial fishburn_summand(int m, int order) {
  require_order(order);
  if (m < 1) throw std::invalid_argument("series: summand index must be >= 1");
  auto out = TruncatedPolynomial::constant(order, 1);
  for (int i = 1; i <= m; ++i) out *= one_minus_pow(order, i);
  return out;
}

TruncatedPolynomial refined_simple_summand(int m, int order) {
  require_order(order);
  if (m < 1) throw std::invalid_argument("series: summand index must be >= 1");
  auto out = TruncatedPolynomial::constant(order, 1);
  for (int i = 1; i <= m; ++i) out *= one_minus_pow_refined(order, i);
  return out;
}

TruncatedPolynomial refined_rk_summand(int m, int order) {
  require_order(order);
  if (m < 1) throw std::invalid_argument("series: summand index must be >= 1");
  auto out = geometric_block(order, m);
  for (int i = 1; i <= m - 1; ++i) out *= one_minus_pow(order, i);
  return out;
}

// Each series below truncates the sum at m = order: the m-th summand is a
// product of m factors all divisible by t (respectively starts at z t and
// gains a t per extra factor), so it contributes nothing below t^m. The
// tests pin that bound through the summand accessors.

TruncatedPolynomial fishburn_series(int order) {
  require_order(order);
  auto out = TruncatedPolynomial::constant(order, 1);
  for (int m = 1; m <= order; ++m) out += fishburn_summand(m, order);
  return out;
}

TruncatedPolynomial refined_series_simple(int order) {
  require_order(order);
  auto out = TruncatedPolynomial::constant(order, 1);
  for (int m = 1; m <= order; ++m) out += refined_simple_summand(m, order);
  return out;
}

TruncatedPolynomial refined_series_rk(int order) {
  require_order(order);
  auto out = TruncatedPolynomial::constant(order, 1);
  for (int m = 1; m <= order; ++m) out += refined_rk_summand(m, order);
  return out;
}

}  // namespace fishburn
