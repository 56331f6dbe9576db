#pragma once

#include <cstdint>
#include <numeric>

#include "tsing/errors.hpp"

namespace tsing {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t narrow_checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_lcm(std::int64_t x, std::int64_t y) {
  if (x == 0 || y == 0) return 0;
  const std::int64_t g = std::gcd(x, y);
  return checked_mul(x / g, y < 0 ? -y : y);
}

// floor(x / y) for y > 0
inline std::int64_t floor_div(std::int64_t x, std::int64_t y) {
  std::int64_t q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace tsing
