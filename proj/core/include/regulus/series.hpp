#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "regulus/errors.hpp"

namespace regulus {

using Exponent = std::int64_t;

// Coefficient ring of a series: the integers, or the residues mod m.
class Ring {
 public:
  static Ring integers() noexcept { return Ring{}; }
  static Ring modulo(std::uint64_t m);

  bool exact() const noexcept { return modulus_ == 0; }
  // 0 for the integers.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(Ring, Ring) = default;

 private:
  std::uint64_t modulus_ = 0;
};

/// Truncated power series sum_{n >= valuation} c_n q^n + O(q^precision).
///
/// Coefficients at exponents >= precision are unknown, not zero.  Leading
/// zero coefficients are trimmed on construction so the valuation is the
/// exponent of the first nonzero coefficient (or the precision itself for a
/// series that is zero as far as it is known).  Trailing zeros are kept.
///
/// Values are immutable; every operation returns a new series.
class TruncSeries {
 public:
  using ExactBlock = std::vector<mpz_class>;
  using ResidueBlock = std::vector<std::uint64_t>;

  TruncSeries() : TruncSeries(zero(Ring::integers(), 0)) {}

  static TruncSeries zero(Ring ring, Exponent precision);
  static TruncSeries one(Ring ring, Exponent precision);
  static TruncSeries monomial(Ring ring, Exponent n, const mpz_class& c,
                              Exponent precision);

  // Dense coefficients of q^0, q^1, ...; missing entries up to `precision`
  // are zero.
  static TruncSeries from_coeffs(Ring ring, const std::vector<mpz_class>& coeffs,
                                 Exponent precision);
  static TruncSeries from_coeffs(Ring ring, std::initializer_list<long> coeffs,
                                 Exponent precision);

  // Raw constructors; `block` starts at exponent `valuation`, and its length
  // must equal precision - valuation.
  static TruncSeries from_exact_block(ExactBlock block, Exponent valuation,
                                      Exponent precision);
  static TruncSeries from_residue_block(std::uint64_t modulus,
                                        ResidueBlock block, Exponent valuation,
                                        Exponent precision);

  Ring ring() const noexcept { return ring_; }
  Exponent precision() const noexcept { return precision_; }
  Exponent valuation() const noexcept { return valuation_; }
  bool known_zero() const noexcept { return valuation_ == precision_; }

  // Coefficient of q^n as an integer (the residue in [0, m) for modular
  // rings).  Throws PrecisionError when n is negative or not known.
  mpz_class coeff(Exponent n) const;
  // Modular rings only.
  std::uint64_t residue(Exponent n) const;
  bool is_zero_at(Exponent n) const;

  // Dense coefficients for q^0 .. q^(precision-1).
  std::vector<mpz_class> coefficients() const;

  // Stored coefficients, starting at valuation().
  std::span<const mpz_class> exact_block() const;
  std::span<const std::uint64_t> residue_block() const;

  // Structural equality: ring, precision and every known coefficient.
  friend bool operator==(const TruncSeries& f, const TruncSeries& g);

 private:
  TruncSeries(Ring ring, std::variant<ExactBlock, ResidueBlock> block,
              Exponent valuation, Exponent precision);
  void normalize();

  Ring ring_;
  std::variant<ExactBlock, ResidueBlock> block_;
  Exponent valuation_ = 0;
  Exponent precision_ = 0;
};

TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries negate(const TruncSeries& f);
TruncSeries scale(const TruncSeries& f, const mpz_class& c);

/// Cauchy product to precision min(P_f + v_g, P_g + v_f).  Schoolbook over the
/// nonzero coefficients of the sparser operand.
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries pow(const TruncSeries& f, unsigned e);

/// Inverse of a series with unit constant term, to the precision of f.
TruncSeries invert(const TruncSeries& f);
/// f / g with g's constant term a unit; precision min(P_f, P_g + v_f).
TruncSeries divide(const TruncSeries& f, const TruncSeries& g);

// q^k * f
TruncSeries shift(const TruncSeries& f, Exponent k);
// Drops every coefficient at exponents >= precision.
TruncSeries truncate(const TruncSeries& f, Exponent precision);

/// q -> q^k.  Precision becomes k * P.
TruncSeries substitute_power(const TruncSeries& f, Exponent k);

/// sum_n a(A n + B) q^n, precision ceil((P - B) / A).  Requires B < A.
TruncSeries extract_progression(const TruncSeries& f, Exponent A, Exponent B);

/// Reduces into Z/m.  The source ring must be the integers or Z/m' with m | m'.
TruncSeries reduce_mod(const TruncSeries& f, std::uint64_t m);

/// (q^a; q^b)_inf truncated to precision P, as a plain product of binomials.
TruncSeries euler_factor(Exponent a, Exponent b, Exponent precision,
                         Ring ring = Ring::integers());

/// (q^c; q^c)_inf through the pentagonal number series.
TruncSeries pentagonal_factor(Exponent c, Exponent precision,
                              Ring ring = Ring::integers());

/// First exponent below min(P_f, P_g) where f and g differ, if any.
std::optional<Exponent> first_difference(const TruncSeries& f,
                                         const TruncSeries& g);

/// True when f and g agree on every exponent < n.  Throws PrecisionError when
/// n exceeds either precision.
bool agree_below(const TruncSeries& f, const TruncSeries& g, Exponent n);

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
  return add(f, g);
}
inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
  return sub(f, g);
}
inline TruncSeries operator-(const TruncSeries& f) { return negate(f); }
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) {
  return mul(f, g);
}

std::string to_string(const TruncSeries& f, Exponent max_terms = 12);

}  // namespace regulus
