#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "g2cy/error.hpp"

namespace g2cy {

using Int = std::int64_t;

// Checked integer arithmetic. Overflow raises ErrorCode::Overflow instead of wrapping.

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplication");
  return r;
}

/// Exact division; throws if `b` does not divide `a`.
inline Int div_exact(Int a, Int b) {
  if (b == 0 || a % b != 0)
    throw Error(ErrorCode::Inconsistent,
                "inexact division " + std::to_string(a) + " / " + std::to_string(b));
  return a / b;
}

inline Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = div_exact(mul(r, n - k + i), i);
  return r;
}

inline Int sign_power(Int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace g2cy
