#include "faithrep/arith.hpp"

#include <cmath>
#include <numeric>

namespace faithrep {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameters: return "invalid_parameters";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::not_generic: return "not_generic";
    case ErrorCode::char2_unsupported: return "char2_unsupported";
    case ErrorCode::not_two_step: return "not_two_step";
    case ErrorCode::commutator_not_cyclic: return "commutator_not_cyclic";
    case ErrorCode::non_square_index: return "non_square_index";
    case ErrorCode::pool_does_not_span: return "pool_does_not_span";
    case ErrorCode::constraint_violation: return "constraint_violation";
    case ErrorCode::not_subgroup: return "not_subgroup";
    case ErrorCode::chi_not_homomorphism: return "chi_not_homomorphism";
    case ErrorCode::modular_prime_not_found: return "modular_prime_not_found";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t exact_isqrt(std::int64_t n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(n))));
  for (std::int64_t c = (r > 1 ? r - 1 : 0); c <= r + 1; ++c) {
    if (c * c == n) return c;
  }
  return -1;
}

std::int64_t prime_power_base(std::int64_t n, int* k) {
  if (n < 2) return 0;
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return 0;
  if (k != nullptr) *k = e;
  return p;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return checked_mul(a / gcd64(a, b), b); }

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base = floor_mod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % mod);
    base = static_cast<std::int64_t>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t invmod(std::int64_t a, std::int64_t mod) {
  std::int64_t r0 = floor_mod(a, mod), r1 = mod;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    const std::int64_t qt = r0 / r1;
    std::int64_t tmp = r0 - qt * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - qt * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw Error(ErrorCode::invalid_parameters, "element is not invertible");
  return floor_mod(s0, mod);
}

}  // namespace faithrep
