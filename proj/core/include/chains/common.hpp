#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chains {

class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication");
  return r;
}

/// Floor of sqrt(v) for v >= 0; exact for all v < 2^62.
std::int64_t isqrt(std::int64_t v);

/// Floor of cbrt(v) for v >= 0.
std::int64_t icbrt(std::int64_t v);

inline bool is_square(std::int64_t v) {
  if (v < 0) return false;
  std::int64_t s = isqrt(v);
  return s * s == v;
}

inline bool is_cube(std::int64_t v) {
  if (v < 0) return false;
  std::int64_t c = icbrt(v);
  return c * c * c == v;
}

inline bool is_triangular(std::int64_t v) {
  // v = k(k+1)/2  <=>  8v+1 is a perfect square
  if (v < 1) return false;
  return is_square(checked_add(checked_mul(8, v), 1));
}

// Generalized pentagonal k(3k +/- 1)/2: exactly the v with 24v+1 square.
inline bool is_gen_pentagonal(std::int64_t v) {
  if (v < 1) return false;
  return is_square(checked_add(checked_mul(24, v), 1));
}

}  // namespace chains
