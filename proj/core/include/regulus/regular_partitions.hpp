#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regulus/eta.hpp"
#include "regulus/product_spec.hpp"
#include "regulus/report.hpp"
#include "regulus/series.hpp"

namespace regulus {

class SeriesCache;

// (q^l; q^l) / (q; q)
ProductSpec b_ell_spec(std::int64_t ell);

/// B_l(q) = sum b_l(n) q^n, the generating function of partitions with no
/// part divisible by l.
TruncSeries b_ell_series(std::int64_t ell, Exponent precision, Ring ring = Ring::integers());

/// Counts l-regular partitions of n by walking every partition.  Exponential;
/// meant for n up to ~60.
std::uint64_t b_ell_oracle(std::int64_t ell, std::int64_t n);

// Progression indices n with n = residue (mod mod) are skipped.
struct Exclusion {
  std::int64_t mod = 1;
  std::int64_t residue = 0;

  bool skips(Exponent n) const { return ((n % mod) + mod) % mod == residue; }
  friend bool operator==(const Exclusion&, const Exclusion&) = default;
};

/// "b_l(A n + B) = 0 mod M for all n", optionally except for excluded n.
struct CongruenceClaim {
  std::int64_t ell = 9;
  std::int64_t A = 1;
  std::int64_t B = 0;
  std::int64_t M = 2;
  std::string label;
  Tier tier = Tier::Core;
  std::optional<Exclusion> exclude;
  std::vector<std::string> assumptions;

  // Throws std::invalid_argument unless 0 <= B < A, M >= 2 and l >= 2.
  void validate() const;
  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

enum class ClaimFamily {
  ThreeModFour,          // b9(4n+3) mod 3
  ThirteenModSixteen,    // b9(16n+13) mod 6
  PowerOfFourChain,      // b9(4^a n + (10 4^(a-1) - 1)/3) mod 3
  PowerOfFiveChain,      // b9(5^(2a) n + (5^(2a-2) - 1)/3 + 5^(2a-2) k) mod 3
  ThirtyTwoProgression,  // b9(32n+13) mod 12
  SixtyFourProgression,  // b9(64n+13) mod 24
  DoublingExtension,     // b9(128n+13), b9(128n+77) mod 48; expected to fail
  ThreeRegularModNine,   // b3(5n+2), b3(7n+4) mod 9 with exceptions
};

std::vector<CongruenceClaim> make_claims(ClaimFamily family, int a = 1);

/// Checks every index n with A n + B <= n_max.  Status Insufficient when
/// n_max < B.
VerificationReport verify_claim(const CongruenceClaim& claim, Exponent n_max,
                                SeriesCache* cache = nullptr);

/// Smallest non-excluded n with b_l(A n + B) != 0 mod M and A n + B <= n_max,
/// with the residue.  Throws PrecisionError when n_max < B.
std::optional<Counterexample> find_counterexample(const CongruenceClaim& claim,
                                                  Exponent n_max,
                                                  SeriesCache* cache = nullptr);

/// Checks sum b_l(A n + B) q^n = c q^j B_l(q^k) mod m for n < terms.
VerificationReport verify_similarity(std::int64_t ell, std::int64_t A, std::int64_t B,
                                     std::int64_t c, std::int64_t j, std::int64_t k,
                                     std::int64_t m, Exponent terms,
                                     SeriesCache* cache = nullptr);

/// The three pieces of the mod-4 dissection of B_9 over Z, each to precision P:
/// a series in q^2, q times a series in q^4, and 3 q^3 times a series in q^4.
struct MainDissection {
  TruncSeries even_part;
  TruncSeries one_mod_four;
  TruncSeries three_mod_four;
};

MainDissection main_dissection_terms(Exponent precision);

VerificationReport verify_main_dissection(Exponent precision);

/// Every b9(4n+3) with 4n+3 < P equals 3 times the matching coefficient of
/// the q^3 piece, as integers.
VerificationReport verify_three_mod_four_divisibility(Exponent precision);

/// The weight-2 eta identity on Gamma0(216) equivalent to the dissection
/// after multiplying through by eta(4z)^4.
struct EtaIdentity {
  EtaQuotient lhs;
  std::array<EtaQuotient, 3> rhs;
  std::array<std::int64_t, 3> coefficients;
};

EtaIdentity eta_identity_quotients();

VerificationReport verify_eta_identity(Exponent precision,
                                       const EtaIdentity& identity = eta_identity_quotients());

// (q^12; q^24)^2 / (q^4; q^8)^6 = 1 mod 3.
VerificationReport verify_inside_three(Exponent precision);

/// sum b9(5n+3) q^n = q B9(q^5) mod 3 for n < terms, and vanishing off
/// n = 1 mod 5.
VerificationReport verify_five_dissection(Exponent terms);

/// Parity of b9(16n+13) through T_2^4 applied to eta(9z) eta(z)^63 mod 2.
/// Requires P >= 1556.
VerificationReport verify_even_lemma(Exponent precision);

inline constexpr Exponent kEvenLemmaMinPrecision = 16 * 97 + 4;

/// b9(4n+1) = b9(n) mod 3, and the power-of-four offset chain.
VerificationReport verify_self_similarity(Exponent precision);

}  // namespace regulus
