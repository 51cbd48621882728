#pragma once

#include <cstdint>
#include <limits>

#include "sphere_lam/error.hpp"

// Overflow-detecting 64-bit arithmetic. Wraparound is never acceptable here.
namespace sphere_lam::checked {

__extension__ typedef __int128 int128;

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "64-bit addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "64-bit subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
  return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::int64_t narrow(int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::Overflow, "value does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

// Floor division for a positive divisor.
inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline int128 floor_div128(int128 n, int128 d) {
  int128 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

}  // namespace sphere_lam::checked
