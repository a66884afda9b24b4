#include "fishburn/polynomial.hpp"

#include <stdexcept>

namespace fishburn {

TruncatedPolynomial::TruncatedPolynomial(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("polynomial: order must be >= 0");
}

TruncatedPolynomial TruncatedPolynomial::constant(int order, std::int64_t value) {
  return term(order, value, 0, 0);
}

TruncatedPolynomial TruncatedPolynomial::term(int order, std::int64_t coefficient,
                                              int t_degree, int z_degree) {
  if (t_degree < 0 || z_degree < 0)
    throw std::invalid_argument("polynomial: negative degree");
  TruncatedPolynomial out(order);
  if (t_degree <= order) out.set(t_degree, z_degree, coefficient);
  return out;
}

void TruncatedPolynomial::set(int t_degree, int z_degree, std::int64_t value) {
  if (value == 0)
    terms_.erase({t_degree, z_degree});
  else
    terms_[{t_degree, z_degree}] = value;
}

std::int64_t TruncatedPolynomial::coefficient(int t_degree, int z_degree) const {
  if (t_degree > order_)
    throw std::out_of_range("polynomial: coefficient of t^" + std::to_string(t_degree) +
                            " is beyond the truncation order " + std::to_string(order_));
  auto found = terms_.find({t_degree, z_degree});
  return found == terms_.end() ? 0 : found->second;
}

int TruncatedPolynomial::min_t_degree() const {
  return terms_.empty() ? order_ + 1 : terms_.begin()->first.first;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
  if (order_ != other.order_)
    throw std::invalid_argument("polynomial: mixed truncation orders");
  const TermMap terms = other.terms_;  // copy: `other` may alias *this
  for (const auto& [degrees, value] : terms)
    set(degrees.first, degrees.second, checked_add(coefficient(degrees.first, degrees.second), value));
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
  if (order_ != other.order_)
    throw std::invalid_argument("polynomial: mixed truncation orders");
  const TermMap terms = other.terms_;  // copy: `other` may alias *this
  for (const auto& [degrees, value] : terms)
    set(degrees.first, degrees.second, checked_sub(coefficient(degrees.first, degrees.second), value));
  return *this;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("polynomial: mixed truncation orders");
  TruncatedPolynomial out(a.order());
  for (const auto& [da, va] : a.terms()) {
    if (da.first > a.order()) continue;
    for (const auto& [db, vb] : b.terms()) {
      const int t_degree = da.first + db.first;
      if (t_degree > a.order()) break;  // keys ascend by t-degree first
      const int z_degree = da.second + db.second;
      out.set(t_degree, z_degree,
              checked_add(out.coefficient(t_degree, z_degree), checked_mul(va, vb)));
    }
  }
  return out;
}

TruncatedPolynomial& TruncatedPolynomial::operator*=(const TruncatedPolynomial& other) {
  *this = *this * other;
  return *this;
}

TruncatedPolynomial TruncatedPolynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("polynomial: negative exponent");
  TruncatedPolynomial out = constant(order_, 1);
  for (int i = 0; i < exponent; ++i) out *= *this;
  return out;
}

TruncatedPolynomial TruncatedPolynomial::substitute_z_one() const {
  TruncatedPolynomial out(order_);
  for (const auto& [degrees, value] : terms_)
    out.set(degrees.first, 0, checked_add(out.coefficient(degrees.first, 0), value));
  return out;
}

std::string TruncatedPolynomial::to_json_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [degrees, value] : terms_) {
    if (!first) out += ", ";
    first = false;
    out += "\"t^" + std::to_string(degrees.first) + " z^" + std::to_string(degrees.second) +
           "\": " + std::to_string(value);
  }
  out += "}";
  return out;
}

}  // namespace fishburn
