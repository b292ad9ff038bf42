#pragma once

#include <cstdint>

#include "gmc/errors.hpp"

// Overflow-checked int64 arithmetic. Every matrix and slope computation goes
// through these; a wrapped value is never returned.
namespace gmc::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// Mathematical floor of a / b (rounds toward negative infinity). b != 0.
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw DomainError("division by zero");
  if (a == INT64_MIN && b == -1) throw OverflowError("int64 overflow in division");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Saturating unsigned multiply, used for search-space sizes.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return UINT64_MAX;
  return r;
}

inline std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return UINT64_MAX;
  return r;
}

}  // namespace gmc::checked
