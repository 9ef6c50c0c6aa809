#pragma once

#include <cstdint>
#include <string>

#include "faithrep/error.hpp"

namespace faithrep {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::overflow, "integer product exceeds 64 bits");
  }
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::overflow, "integer sum exceeds 64 bits");
  }
  return out;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

bool is_prime(std::int64_t n);

// Returns r with r*r == n, or -1 when n is not a perfect square.
std::int64_t exact_isqrt(std::int64_t n);

// If n == p^k for a prime p, returns p (and sets k); otherwise 0.
std::int64_t prime_power_base(std::int64_t n, int* k = nullptr);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Modular exponentiation and inverse for a prime modulus.
std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t invmod(std::int64_t a, std::int64_t mod);

}  // namespace faithrep
