#pragma once

// Integer utilities used throughout the construction: primality by trial
// division, valuations, multiplicative orders and the prime search that
// picks p for a requested Morita Frobenius number.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "mfn/error.hpp"

namespace mfn {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Non-negative residue of a modulo m (m > 0).
inline constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

inline i64 powmod(i64 base, u64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  i64 b = mod(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, b, m);
    b = mulmod(b, b, m);
    exp >>= 1U;
  }
  return result;
}

/// base^exp, throwing when the result does not fit in 63 bits.
inline i64 checked_pow(i64 base, unsigned exp) {
  __int128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > static_cast<__int128>(INT64_MAX) || r < -static_cast<__int128>(INT64_MAX)) {
      throw BoundExceeded("integer power " + std::to_string(base) + "^" + std::to_string(exp) +
                          " overflows 63 bits");
    }
  }
  return static_cast<i64>(r);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (i64 d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

/// Largest e with l^e | x.
inline int l_adic_valuation(i64 l, i64 x) {
  if (l < 2) throw ParameterError("l_adic_valuation: l must be at least 2");
  if (x < 1) throw ParameterError("l_adic_valuation: x must be positive");
  int e = 0;
  while (x % l == 0) {
    x /= l;
    ++e;
  }
  return e;
}

/// True when x = base^k for some k >= 0 (so 1 counts as a power).
inline bool is_power_of(i64 base, i64 x) {
  if (x < 1) return false;
  while (x % base == 0) x /= base;
  return x == 1;
}

/// Smallest m >= 1 with a^m = 1 mod N; 1 for N = 1.
inline i64 multiplicative_order(i64 a, i64 N) {
  if (N < 1) throw ParameterError("multiplicative_order: modulus must be positive");
  if (N == 1) return 1;
  a = mod(a, N);
  if (std::gcd(a, N) != 1) {
    throw ParameterError("multiplicative_order: gcd(" + std::to_string(a) + ", " + std::to_string(N) +
                         ") != 1");
  }
  i64 order = euler_phi(N);
  for (i64 q : prime_factors(order)) {
    while (order % q == 0 && powmod(a, static_cast<u64>(order / q), N) == 1) order /= q;
  }
  return order;
}

/// Smallest generator of the multiplicative group mod a prime p.
inline i64 primitive_root(i64 p) {
  if (!is_prime(p)) throw ParameterError("primitive_root: " + std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto qs = prime_factors(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : qs) {
      if (powmod(g, static_cast<u64>((p - 1) / q), p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw ParameterError("primitive_root: none found");
}

inline constexpr i64 kDefaultPrimeSearchBound = 10'000'000;

/// Smallest prime p with p = 1 mod (l^n - 1), p != l and p - 1 not a power of l.
inline i64 find_prime(i64 l, int n, i64 search_bound = kDefaultPrimeSearchBound) {
  if (!is_prime(l)) throw ParameterError("find_prime: l = " + std::to_string(l) + " is not prime");
  if (n < 1) throw ParameterError("find_prime: n must be positive");
  const i64 step = checked_pow(l, static_cast<unsigned>(n)) - 1;
  for (i64 candidate = step + 1; candidate <= search_bound; candidate += step) {
    if (candidate != l && is_prime(candidate) && !is_power_of(l, candidate - 1)) return candidate;
  }
  throw BoundExceeded("find_prime: no admissible prime below search bound " + std::to_string(search_bound) +
                      " for l = " + std::to_string(l) + ", n = " + std::to_string(n));
}

}  // namespace mfn
