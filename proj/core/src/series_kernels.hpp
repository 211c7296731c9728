#pragma once

// Coefficient-ring policies and dense kernels shared by the series
// translation units.  Not installed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "regulus/series.hpp"

namespace regulus::detail {

struct ExactOps {
  using T = mpz_class;

  static bool is_zero(const T& x) { return sgn(x) == 0; }
  void add(T& a, const T& b) const { a += b; }
  void sub(T& a, const T& b) const { a -= b; }
  void addmul(T& acc, const T& x, const T& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  T neg(const T& x) const { return -x; }
  T mul(const T& x, const T& y) const { return x * y; }
  T from_int(const mpz_class& c) const { return c; }
  mpz_class to_int(const T& x) const { return x; }
  T zero() const { return T(0); }
  T one() const { return T(1); }
  // Units of Z are +-1.
  std::optional<T> inverse(const T& x) const {
    if (x == 1 || x == -1) return x;
    return std::nullopt;
  }
  Ring ring() const { return Ring::integers(); }

  static std::span<const T> block(const TruncSeries& f) {
    return f.exact_block();
  }
  TruncSeries make(std::vector<T> block, Exponent valuation,
                   Exponent precision) const {
    return TruncSeries::from_exact_block(std::move(block), valuation, precision);
  }
};

struct ModOps {
  using T = std::uint64_t;

  std::uint64_t m;

  static bool is_zero(T x) { return x == 0; }
  void add(T& a, T b) const { a = (b >= m - a) ? b - (m - a) : a + b; }
  void sub(T& a, T b) const { a = (a >= b) ? a - b : a + (m - b); }
  T mul(T x, T y) const {
    return static_cast<T>(static_cast<unsigned __int128>(x) * y % m);
  }
  void addmul(T& acc, T x, T y) const { add(acc, mul(x, y)); }
  T neg(T x) const { return x == 0 ? 0 : m - x; }
  T from_int(const mpz_class& c) const {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(c.get_mpz_t(), m);
  }
  mpz_class to_int(T x) const {
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(T), 0, 0, &x);
    return r;
  }
  T zero() const { return 0; }
  T one() const { return m == 1 ? 0 : 1; }
  std::optional<T> inverse(T x) const {
    // Extended Euclid over signed 128-bit to avoid overflow near 2^64.
    __int128 r0 = m, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      std::tie(r0, r1) = std::pair<__int128, __int128>{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair<__int128, __int128>{s1, s0 - q * s1};
    }
    if (r0 != 1) {
      if (m == 1) return T{0};
      return std::nullopt;
    }
    __int128 inv = s0 % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<T>(inv);
  }
  Ring ring() const { return Ring::modulo(m); }

  // Number of (m-1)^2 products that fit in a uint64 accumulator on top of a
  // reduced value, or 0 when products themselves may overflow.
  std::uint64_t lazy_budget() const {
    if (m <= 1) return 0;
    const std::uint64_t top = m - 1;
    if (top > std::numeric_limits<std::uint32_t>::max()) return 0;
    const std::uint64_t sq = top * top;
    if (sq == 0) return 0;
    return (std::numeric_limits<std::uint64_t>::max() - top) / sq;
  }

  static std::span<const T> block(const TruncSeries& f) {
    return f.residue_block();
  }
  TruncSeries make(std::vector<T> block, Exponent valuation,
                   Exponent precision) const {
    return TruncSeries::from_residue_block(m, std::move(block), valuation,
                                           precision);
  }
};

template <class Fn>
decltype(auto) with_ops(Ring ring, Fn&& fn) {
  if (ring.exact()) return fn(ExactOps{});
  return fn(ModOps{ring.modulus()});
}

template <class T>
std::vector<std::pair<std::size_t, T>> nonzeros(std::span<const T> block,
                                                std::size_t limit) {
  std::vector<std::pair<std::size_t, T>> out;
  const std::size_t n = std::min(block.size(), limit);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(block[i] == T(0))) out.emplace_back(i, block[i]);
  }
  return out;
}

/// out[i + j] += s_j * d_i for every nonzero s_j, truncated to out.size().
template <class Ops>
void mul_accumulate(const Ops& ops, std::span<const typename Ops::T> dense,
                    const std::vector<std::pair<std::size_t, typename Ops::T>>& sparse,
                    std::vector<typename Ops::T>& out) {
  const std::size_t len = out.size();
  if constexpr (std::is_same_v<Ops, ModOps>) {
    const std::uint64_t budget = ops.lazy_budget();
    if (budget > 0) {
      std::uint64_t used = 0;
      for (const auto& [j, s] : sparse) {
        if (j >= len) break;
        const std::size_t n = std::min(dense.size(), len - j);
        std::uint64_t* dst = out.data() + j;
        const std::uint64_t* src = dense.data();
        for (std::size_t i = 0; i < n; ++i) dst[i] += s * src[i];
        if (++used == budget) {
          for (auto& x : out) x %= ops.m;
          used = 0;
        }
      }
      for (auto& x : out) x %= ops.m;
      return;
    }
  }
  for (const auto& [j, s] : sparse) {
    if (j >= len) break;
    const std::size_t n = std::min(dense.size(), len - j);
    for (std::size_t i = 0; i < n; ++i) ops.addmul(out[i + j], s, dense[i]);
  }
}

/// Solves g * h = f for h, g[0] a unit with inverse g0_inv; all blocks start
/// at exponent 0 relative to one another.  `g_tail` lists nonzeros of g at
/// positive offsets.
template <class Ops>
std::vector<typename Ops::T> divide_dense(
    const Ops& ops, std::span<const typename Ops::T> f,
    const std::vector<std::pair<std::size_t, typename Ops::T>>& g_tail,
    const typename Ops::T& g0_inv, std::size_t len) {
  using T = typename Ops::T;
  std::vector<T> h(len, ops.zero());
  if constexpr (std::is_same_v<Ops, ModOps>) {
    const std::uint64_t budget = ops.lazy_budget();
    if (budget > 0) {
      for (std::size_t r = 0; r < len; ++r) {
        std::uint64_t acc = 0;
        std::uint64_t used = 0;
        for (const auto& [i, gi] : g_tail) {
          if (i > r) break;
          acc += gi * h[r - i];
          if (++used == budget) {
            acc %= ops.m;
            used = 0;
          }
        }
        acc %= ops.m;
        T v = r < f.size() ? f[r] : 0;
        ops.sub(v, acc);
        h[r] = ops.mul(v, g0_inv);
      }
      return h;
    }
  }
  T acc = ops.zero();
  for (std::size_t r = 0; r < len; ++r) {
    acc = ops.zero();
    for (const auto& [i, gi] : g_tail) {
      if (i > r) break;
      ops.addmul(acc, gi, h[r - i]);
    }
    T v = r < f.size() ? f[r] : ops.zero();
    ops.sub(v, acc);
    h[r] = ops.mul(v, g0_inv);
  }
  return h;
}

// In place: c <- c * (1 - q^d).
template <class Ops>
void mul_binomial(const Ops& ops, std::vector<typename Ops::T>& c, std::size_t d) {
  for (std::size_t n = c.size(); n-- > d;) ops.sub(c[n], c[n - d]);
}

// In place: c <- c / (1 - q^d).
template <class Ops>
void div_binomial(const Ops& ops, std::vector<typename Ops::T>& c, std::size_t d) {
  for (std::size_t n = d; n < c.size(); ++n) ops.add(c[n], c[n - d]);
}

}  // namespace regulus::detail
