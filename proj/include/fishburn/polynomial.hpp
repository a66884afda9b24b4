#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "fishburn/checked.hpp"

namespace fishburn {

// A bivariate polynomial in t and z with exact 64-bit integer coefficients,
// truncated at a fixed t-degree (terms with t-degree > order are discarded by
// every operation; z-degrees are unconstrained). Coefficient arithmetic is
// checked: overflow throws rather than wrapping. Zero coefficients are never
// stored.
class TruncatedPolynomial {
 public:
  // (t_degree, z_degree) -> coefficient, ordered by t-degree then z-degree.
  using TermMap = std::map<std::pair<int, int>, std::int64_t>;

  explicit TruncatedPolynomial(int order);  // the zero polynomial; order >= 0
  static TruncatedPolynomial constant(int order, std::int64_t value);
  static TruncatedPolynomial term(int order, std::int64_t coefficient, int t_degree,
                                  int z_degree = 0);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }

  // Throws std::out_of_range when t_degree exceeds the truncation order
  // (the coefficient there is unknown, not zero).
  std::int64_t coefficient(int t_degree, int z_degree = 0) const;

  // Smallest t-degree carrying a nonzero term; order()+1 when zero.
  int min_t_degree() const;

  const TermMap& terms() const { return terms_; }

  // Operands must share the same truncation order.
  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
  TruncatedPolynomial& operator*=(const TruncatedPolynomial& other);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
    return a += b;
  }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
    return a -= b;
  }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a,
                                       const TruncatedPolynomial& b);

  TruncatedPolynomial pow(int exponent) const;  // exponent >= 0

  // Substitute z := 1, collapsing each t-degree to a single coefficient.
  TruncatedPolynomial substitute_z_one() const;

  // JSON object text mapping "t^a z^b" to the coefficient, keys ordered by
  // (a, b); "{}" for the zero polynomial.
  std::string to_json_string() const;

  friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

 private:
  void set(int t_degree, int z_degree, std::int64_t value);

  int order_;
  TermMap terms_;
};

}  // namespace fishburn
