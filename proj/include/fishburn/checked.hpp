#pragma once

#include <cstdint>
#include <stdexcept>

namespace fishburn {

// Exact signed 64-bit arithmetic. Overflow is a hard error, never a silent
// wrap: every count and coefficient in this library is exact or an exception.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("64-bit overflow in addition");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("64-bit overflow in subtraction");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("64-bit overflow in multiplication");
  return out;
}

// n! for n >= 0.
inline std::int64_t checked_factorial(int n) {
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, i);
  return out;
}

// (2n-1)!! = 1*3*5*...*(2n-1), the number of perfect matchings on [2n].
inline std::int64_t odd_double_factorial(int n) {
  std::int64_t out = 1;
  for (int i = 3; i <= 2 * n - 1; i += 2) out = checked_mul(out, i);
  return out;
}

}  // namespace fishburn
