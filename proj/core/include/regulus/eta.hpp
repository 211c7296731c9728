#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "regulus/errors.hpp"
#include "regulus/product_spec.hpp"
#include "regulus/report.hpp"
#include "regulus/series.hpp"

namespace regulus {

bool is_prime(std::int64_t n);
// Prime factorization by trial division; n >= 1.
std::map<std::int64_t, int> factorize(std::int64_t n);

/// prod_{delta | N} eta(delta z)^{r_delta}.
///
/// Text form: `N: d1^r1 * d2^r2 ...` (e.g. `27: 9^1 * 1^63`); `^1` may be
/// omitted.  Exponents of the same delta may not repeat.
class EtaQuotient {
 public:
  using Exponents = std::map<std::int64_t, std::int64_t>;

  EtaQuotient(std::int64_t level, Exponents exponents);

  static EtaQuotient parse(std::string_view text);

  std::int64_t level() const noexcept { return level_; }
  const Exponents& exponents() const noexcept { return exponents_; }

  // q-exponent of the leading term, in units of 1/24.
  std::int64_t lead24() const;
  // sum (N / delta) r_delta
  std::int64_t cusp_sum() const;
  std::int64_t exponent_sum() const;

  // Product of two quotients; exponent maps add, the level is the lcm.
  EtaQuotient times(const EtaQuotient& other) const;
  EtaQuotient with_level(std::int64_t level) const;

  // The Pochhammer factors (q^delta; q^delta)^{r_delta}.
  ProductSpec product_spec() const;

  std::string to_string() const;

  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

 private:
  std::int64_t level_;
  Exponents exponents_;
};

/// s = prod delta^{r_delta}, kept as prime exponents since r_delta may be
/// negative.
struct CharacterSeed {
  std::map<std::int64_t, std::int64_t> prime_exponents;

  mpq_class value() const;
};

struct ModFormMeta {
  std::int64_t weight = 0;
  std::int64_t level = 1;
  CharacterSeed seed;
};

enum class GhnFailure { FirstCongruence, SecondCongruence, HalfIntegralWeight };

class GhnError : public Error {
 public:
  GhnError(GhnFailure kind, std::int64_t residue, const std::string& what)
      : Error(what), kind_(kind), residue_(residue) {}

  GhnFailure kind() const noexcept { return kind_; }
  // Offending sum mod 24 (or the exponent sum mod 2 for half-integral weight).
  std::int64_t residue() const noexcept { return residue_; }

 private:
  GhnFailure kind_;
  std::int64_t residue_;
};

/// Checks the Gordon-Hughes-Newman conditions
///   sum delta r_delta = 0 mod 24,  sum (N/delta) r_delta = 0 mod 24,
/// and that sum r_delta is even; returns weight, level and character seed.
ModFormMeta ghn_validate(const EtaQuotient& eq);

/// Smallest multiple N*t, t | 24 tried in increasing order, at which the
/// conditions hold; nullopt when the first congruence or the weight fails.
std::optional<EtaQuotient> raise_level(const EtaQuotient& eq);

/// (k/12) N prod_{p | N} (1 + 1/p), exactly.
mpq_class sturm_bound_exact(std::int64_t weight, std::int64_t level);
std::int64_t sturm_bound(std::int64_t weight, std::int64_t level);

/// Kronecker symbol (a / n), defined for all integers.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// chi(d) = ((-1)^k s / d).  d must be nonzero.
int character_value(const ModFormMeta& meta, std::int64_t d);

struct EtaExpansion {
  // q-power of the leading factor, in 1/24 units.
  std::int64_t lead24 = 0;
  // prod (q^delta; q^delta)^{r_delta}
  TruncSeries series;
};

EtaExpansion eta_expansion(const EtaQuotient& eq, Exponent precision,
                           Ring ring = Ring::integers());

/// f | T_p = sum (a(pn) + chi_p p^{k-1} a(n/p)) q^n, precision floor(P/p).
/// The second term is skipped whenever chi_p p^{k-1} vanishes in the
/// coefficient ring (Z/p with k > 1, say).
TruncSeries hecke_tp(const TruncSeries& f, std::int64_t p, std::int64_t weight,
                     int chi_p);

// sum a(pn) q^n
TruncSeries hecke_up(const TruncSeries& f, std::int64_t p);

/// Checks p | (a(n) - b(n)) for 0 <= n <= sturm_bound(k, N).  The modular
/// form hypothesis is the caller's and is recorded under assumptions.
VerificationReport sturm_compare(const TruncSeries& f, const TruncSeries& g,
                                 std::int64_t weight, std::int64_t level,
                                 std::int64_t p);

}  // namespace regulus
