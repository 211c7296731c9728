#pragma once

// Reference computations written independently of the library: dense
// quadratic products, enumeration, Euler's criterion.  Slow on purpose.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Poly = std::vector<mpz_class>;

inline Poly poly_mul(const Poly& f, const Poly& g, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t i = 0; i < f.size() && i < len; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size() && i + j < len; ++j) out[i + j] += f[i] * g[j];
  }
  return out;
}

// (1 - q^k)^{+-1} truncated to len terms.
inline Poly binomial_power(std::int64_t k, int sign, std::size_t len) {
  Poly p(len, 0);
  p[0] = 1;
  if (k >= static_cast<std::int64_t>(len)) return p;
  if (sign > 0) {
    p[k] = -1;
  } else {
    for (std::size_t i = static_cast<std::size_t>(k); i < len; i += k) p[i] = 1;
  }
  return p;
}

// prod (q^a; q^b)^e by multiplying one binomial (or geometric series) at a time.
inline Poly pochhammer(const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>>& spec,
                       std::size_t len) {
  Poly acc(len, 0);
  acc[0] = 1;
  for (const auto& [a, b, e] : spec) {
    const int sign = e > 0 ? 1 : -1;
    const std::int64_t times = e > 0 ? e : -e;
    for (std::int64_t t = 0; t < times; ++t) {
      for (std::int64_t k = a; k < static_cast<std::int64_t>(len); k += b) {
        acc = poly_mul(acc, binomial_power(k, sign, len), len);
      }
    }
  }
  return acc;
}

// Number of partitions of n whose parts all satisfy `allowed`, by walking
// every partition with parts in non-increasing order.
inline std::uint64_t count_partitions(int n, int max_part,
                                      const std::function<bool(int)>& allowed) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part) {
    if (allowed(part)) total += count_partitions(n - part, part, allowed);
  }
  return total;
}

inline std::uint64_t regular_partitions(int ell, int n) {
  return count_partitions(n, n, [ell](int p) { return p % ell != 0; });
}

inline std::uint64_t odd_part_partitions(int n) {
  return count_partitions(n, n, [](int p) { return p % 2 == 1; });
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
    b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

// Legendre symbol through Euler's criterion; p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
  const auto r = static_cast<std::uint64_t>(((a % p) + p) % p);
  if (r == 0) return 0;
  const auto e = pow_mod(r, static_cast<std::uint64_t>(p - 1) / 2, static_cast<std::uint64_t>(p));
  return e == 1 ? 1 : -1;
}

// Kronecker symbol assembled from the prime factorization of n.
inline int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    const auto r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  for (std::int64_t p = 3; p * p <= n; p += 2) {
    while (n % p == 0) {
      n /= p;
      result *= legendre(a, p);
    }
  }
  if (n > 1) result *= legendre(a, n);
  return result;
}

// floor(k N prod (p+1) / (12 prod p)) in integer arithmetic.
inline std::int64_t sturm(std::int64_t k, std::int64_t N) {
  __int128 num = static_cast<__int128>(k) * N;
  __int128 den = 12;
  std::int64_t m = N;
  for (std::int64_t p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    num *= p + 1;
    den *= p;
  }
  return static_cast<std::int64_t>(num / den);
}

}  // namespace oracle
