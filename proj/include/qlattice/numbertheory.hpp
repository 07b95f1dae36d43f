#pragma once

#include "qlattice/core.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace qlattice {

/// C(n, k); zero for k outside [0, n].
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("binomial: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

/// C(2n, n) / (n + 1)
inline BigInt catalan(std::int64_t n) {
  if (n < 0) throw InvalidArgument("catalan: n must be >= 0, got " + std::to_string(n));
  return binomial(2 * n, n) / (n + 1);
}

/// C(2n, n) == 2 (2n - 1) C_{n-1}
inline bool verify_eq1(std::int64_t n) {
  if (n < 1) throw InvalidArgument("verify_eq1: n must be >= 1, got " + std::to_string(n));
  return binomial(2 * n, n) == 2 * (2 * n - 1) * catalan(n - 1);
}

/// Trial division.
inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Smallest generator of (Z/pZ)^*; 1 for p = 2.
inline std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (auto f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw InvariantViolation("primitive_root: no generator found for " + std::to_string(p));
}

/// The j in [0, p-2] with g^j = x (mod p), by scanning powers.
inline std::uint64_t discrete_log(std::uint64_t p, std::uint64_t g, std::uint64_t x) {
  if (p < 2) throw InvalidArgument("discrete_log: modulus must be prime");
  x %= p;
  if (x == 0) throw InvalidArgument("discrete_log: x is divisible by p");
  std::uint64_t power = 1 % p;
  for (std::uint64_t j = 0; j + 1 < p || j == 0; ++j) {
    if (power == x) return j;
    power = mul_mod(power, g, p);
  }
  throw InvalidArgument("discrete_log: " + std::to_string(x) + " is not a power of " + std::to_string(g) +
                        " mod " + std::to_string(p));
}

}  // namespace qlattice
