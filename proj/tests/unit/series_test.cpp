#include <gtest/gtest.h>

#include "oracles.hpp"
#include "generators.hpp"
#include "regulus/product_spec.hpp"
#include "regulus/regular_partitions.hpp"
#include "regulus/series.hpp"

using namespace regulus;

namespace {

const Ring ZZ = Ring::integers();

std::vector<long> as_longs(const TruncSeries& f) {
  std::vector<long> out;
  for (const auto& c : f.coefficients()) out.push_back(c.get_si());
  return out;
}

TruncSeries from_poly(const oracle::Poly& p, Ring ring = ZZ) {
  return TruncSeries::from_coeffs(ring, p, static_cast<Exponent>(p.size()));
}

}  // namespace

TEST(Ring, ToStringAndZeroModulus) {
  EXPECT_EQ(ZZ.to_string(), "ZZ");
  EXPECT_EQ(Ring::modulo(9).to_string(), "ZZ/9");
  EXPECT_THROW(Ring::modulo(0), std::invalid_argument);
}

TEST(TruncSeries, TrimsLeadingZerosKeepsTrailing) {
  auto f = TruncSeries::from_coeffs(ZZ, {0, 0, 3, 0, 0}, 5);
  EXPECT_EQ(f.valuation(), 2);
  EXPECT_EQ(f.precision(), 5);
  EXPECT_EQ(f.exact_block().size(), 3u);
  EXPECT_EQ(f.coeff(0), 0);
  EXPECT_EQ(f.coeff(4), 0);
  EXPECT_THROW(f.coeff(5), PrecisionError);
  EXPECT_TRUE(TruncSeries::zero(ZZ, 4).known_zero());
}

TEST(TruncSeries, ModularCoefficientsAreReduced) {
  auto f = TruncSeries::from_coeffs(Ring::modulo(7), {-1, 15, 7}, 3);
  EXPECT_EQ(f.residue(0), 6u);
  EXPECT_EQ(f.residue(1), 1u);
  EXPECT_EQ(f.residue(2), 0u);
  for (auto r : f.residue_block()) EXPECT_LT(r, 7u);
}

TEST(Add, CancellationAndPrecisionMin) {
  auto f = TruncSeries::from_coeffs(ZZ, {1, 1}, 5);
  auto g = TruncSeries::from_coeffs(ZZ, {1, -1}, 3);
  auto s = add(f, g);
  EXPECT_EQ(s.precision(), 3);
  EXPECT_EQ(as_longs(s), (std::vector<long>{2, 0, 0}));
  EXPECT_EQ(add(f, TruncSeries::zero(ZZ, 5)), f);
}

TEST(Add, RejectsMixedRings) {
  auto f = TruncSeries::one(ZZ, 3);
  auto g = TruncSeries::one(Ring::modulo(3), 3);
  EXPECT_THROW(add(f, g), RingMismatch);
  EXPECT_THROW(mul(f, g), RingMismatch);
}

TEST(Mul, Telescoping) {
  auto f = TruncSeries::from_coeffs(ZZ, {1, -1}, 10);
  auto g = TruncSeries::from_coeffs(ZZ, {1, 1, 1, 1}, 10);
  EXPECT_EQ(as_longs(mul(f, g)), (std::vector<long>{1, 0, 0, 0, -1, 0, 0, 0, 0, 0}));
}

TEST(Mul, PrecisionRule) {
  auto f = shift(TruncSeries::one(ZZ, 10), 2);  // q^2 + O(q^12)
  auto g = TruncSeries::from_coeffs(ZZ, {0, 0, 0, 1}, 7);
  EXPECT_EQ(f.precision(), 12);
  EXPECT_EQ(mul(f, g).precision(), std::min<Exponent>(12 + 3, 7 + 2));
  EXPECT_EQ(mul(f, g).valuation(), 5);
}

TEST(Mul, EulerTimesInverseIsOne) {
  auto e = euler_factor(1, 1, 60);
  EXPECT_EQ(mul(e, invert(e)), TruncSeries::one(ZZ, 60));
}

TEST(Mul, OddPartPartitions) {
  auto num = euler_factor(2, 2, 7);
  auto f = mul(num, invert(euler_factor(1, 1, 7)));
  std::vector<long> expect;
  for (int n = 0; n < 7; ++n) expect.push_back(static_cast<long>(oracle::odd_part_partitions(n)));
  EXPECT_EQ(as_longs(f), expect);
  EXPECT_EQ(as_longs(f), (std::vector<long>{1, 1, 1, 2, 2, 3, 4}));
}

TEST(Mul, MatchesDenseOracleBothRings) {
  for (int trial = 0; trial < 40; ++trial) {
    const Exponent P = gen::uniform(1, 80);
    auto f = gen::series(ZZ, P, 0, 1000);
    auto g = gen::series(ZZ, P, 0, 1000);
    auto expect = oracle::poly_mul(f.coefficients(), g.coefficients(), static_cast<std::size_t>(P));
    EXPECT_TRUE(agree_below(mul(f, g), from_poly(expect), P));
    for (std::uint64_t m : {2ull, 9ull, 4294967311ull, 18446744073709551557ull}) {
      EXPECT_TRUE(agree_below(mul(reduce_mod(f, m), reduce_mod(g, m)),
                              reduce_mod(from_poly(expect), m), P))
          << "m=" << m;
    }
  }
}

TEST(Invert, Geometric) {
  auto f = invert(TruncSeries::from_coeffs(ZZ, {1, -1}, 8));
  EXPECT_EQ(as_longs(f), std::vector<long>(8, 1));
}

TEST(Invert, PartitionNumbers) {
  auto f = invert(euler_factor(1, 1, 8));
  std::vector<long> expect;
  for (int n = 0; n < 8; ++n) expect.push_back(static_cast<long>(oracle::regular_partitions(1000, n)));
  EXPECT_EQ(as_longs(f), expect);
}

TEST(Invert, ModularUnit) {
  auto f = invert(TruncSeries::from_coeffs(Ring::modulo(3), {2}, 4));
  EXPECT_EQ(f.residue(0), 2u);
}

TEST(Invert, NonUnitThrows) {
  EXPECT_THROW(invert(TruncSeries::from_coeffs(ZZ, {2, 1}, 4)), NonUnitConstant);
  EXPECT_THROW(invert(TruncSeries::from_coeffs(Ring::modulo(9), {3, 1}, 4)), NonUnitConstant);
  EXPECT_THROW(invert(TruncSeries::from_coeffs(ZZ, {0, 1}, 4)), NonUnitConstant);
}

TEST(SubstitutePower, Examples) {
  auto f = substitute_power(TruncSeries::from_coeffs(ZZ, {1, 1, 1}, 3), 3);
  EXPECT_EQ(f.precision(), 9);
  EXPECT_EQ(as_longs(f), (std::vector<long>{1, 0, 0, 1, 0, 0, 1, 0, 0}));
  auto g = gen::series(ZZ, 20);
  EXPECT_EQ(substitute_power(g, 1), g);
}

TEST(SubstitutePower, BlowUpOfRegularPartitions) {
  auto b = substitute_power(b_ell_series(9, 10), 4);
  auto direct = expand_product(ProductSpec::parse("(q^36;q^36) (q^4;q^4)^-1"), 40);
  EXPECT_EQ(b, direct);
}

TEST(ExtractProgression, Examples) {
  auto f = TruncSeries::from_coeffs(ZZ, {1, 2, 3, 4, 5}, 5);
  EXPECT_EQ(as_longs(extract_progression(f, 2, 1)), (std::vector<long>{2, 4}));
  auto b = extract_progression(b_ell_series(9, 8), 4, 3);
  EXPECT_EQ(as_longs(b), (std::vector<long>{3, 15}));
  EXPECT_EQ(oracle::regular_partitions(9, 3), 3u);
  EXPECT_EQ(oracle::regular_partitions(9, 7), 15u);
}

TEST(ExtractProgression, OffsetBelowValuationCountsAsZero) {
  auto f = shift(TruncSeries::one(ZZ, 6), 5);  // q^5 + O(q^11)
  auto p = extract_progression(f, 3, 1);
  EXPECT_EQ(p.precision(), 4);
  EXPECT_EQ(as_longs(p), (std::vector<long>{0, 0, 0, 0}));
}

TEST(ExtractProgression, RoundTripProperty) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto A = gen::uniform(2, 6);
    const Exponent P = A * gen::uniform(1, 15);
    auto f = gen::series(ZZ, P, 5);
    auto acc = TruncSeries::zero(ZZ, P);
    for (Exponent B = 0; B < A; ++B) {
      auto piece = shift(substitute_power(extract_progression(f, A, B), A), B);
      acc = add(acc, truncate(piece, P));
    }
    EXPECT_EQ(acc, f) << "A=" << A << " P=" << P;
  }
}

TEST(ReduceMod, Examples) {
  auto f = reduce_mod(TruncSeries::from_coeffs(ZZ, {3, 15}, 2), 3);
  EXPECT_TRUE(f.known_zero());
  EXPECT_EQ(f.precision(), 2);
  auto g = reduce_mod(TruncSeries::from_coeffs(ZZ, {-1, 5}, 2), 3);
  EXPECT_EQ(g.residue(0), 2u);
  EXPECT_EQ(g.residue(1), 2u);
  auto b = reduce_mod(b_ell_series(9, 51), 3);
  for (Exponent n = 3; n <= 50; n += 4) EXPECT_EQ(b.residue(n), 0u) << n;
  EXPECT_ANY_THROW(reduce_mod(b, 9));
  EXPECT_EQ(reduce_mod(reduce_mod(b_ell_series(9, 51), 9), 3), b);
}

TEST(EulerFactor, Examples) {
  EXPECT_EQ(as_longs(euler_factor(1, 1, 8)), (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(as_longs(euler_factor(2, 4, 9)), (std::vector<long>{1, 0, -1, 0, 0, 0, -1, 0, 1}));
  EXPECT_EQ(as_longs(euler_factor(5, 5, 5)), (std::vector<long>{1, 0, 0, 0, 0}));
}

TEST(PentagonalFactor, MatchesNaiveProduct) {
  for (Exponent c = 1; c <= 12; ++c) {
    EXPECT_EQ(pentagonal_factor(c, 500), euler_factor(c, c, 500)) << c;
    EXPECT_EQ(pentagonal_factor(c, 500, Ring::modulo(3)), euler_factor(c, c, 500, Ring::modulo(3)));
  }
}

TEST(RingLaws, CommutativeAssociativeDistributive) {
  for (Ring ring : {ZZ, Ring::modulo(2), Ring::modulo(9), Ring::modulo(1000003)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Exponent P = gen::uniform(1, 40);
      auto f = gen::series(ring, P);
      auto g = gen::series(ring, gen::uniform(1, 40));
      auto h = gen::series(ring, gen::uniform(1, 40));
      EXPECT_EQ(mul(f, g), mul(g, f));
      EXPECT_EQ(add(f, g), add(g, f));
      auto l = mul(mul(f, g), h);
      auto r = mul(f, mul(g, h));
      const auto n = std::min(l.precision(), r.precision());
      EXPECT_TRUE(agree_below(l, r, n));
      auto dl = mul(f, add(g, h));
      auto dr = add(mul(f, g), mul(f, h));
      EXPECT_TRUE(agree_below(dl, dr, std::min(dl.precision(), dr.precision())));
      EXPECT_TRUE(sub(f, f).known_zero());
      EXPECT_EQ(mul(f, TruncSeries::one(ring, P)), f);
    }
  }
}

TEST(InvertProperty, TimesInverseIsOne) {
  for (Ring ring : {ZZ, Ring::modulo(3), Ring::modulo(8), Ring::modulo(1000003)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Exponent P = gen::uniform(1, 60);
      auto f = gen::unit_series(ring, P);
      EXPECT_EQ(mul(f, invert(f)), TruncSeries::one(ring, P));
      auto g = gen::series(ring, P);
      auto d = divide(g, f);
      EXPECT_TRUE(agree_below(mul(d, f), g, std::min(d.precision(), g.precision())));
    }
  }
}

TEST(Pow, MatchesRepeatedMul) {
  auto f = gen::series(ZZ, 30);
  EXPECT_EQ(pow(f, 0), TruncSeries::one(ZZ, 30));
  EXPECT_EQ(pow(f, 3), mul(f, mul(f, f)));
}

TEST(AgreeBelow, RefusesBeyondPrecision) {
  auto f = TruncSeries::one(ZZ, 5);
  auto g = TruncSeries::one(ZZ, 8);
  EXPECT_TRUE(agree_below(f, g, 5));
  EXPECT_THROW(agree_below(f, g, 6), PrecisionError);
  EXPECT_FALSE(first_difference(f, g).has_value());
  auto h = add(g, TruncSeries::monomial(ZZ, 6, 1, 8));
  EXPECT_EQ(first_difference(g, h), 6);
}

TEST(ProductIdentities, EulerComplement) {
  auto lhs = invert(mul(euler_factor(1, 6, 201), euler_factor(5, 6, 201)));
  auto rhs = expand_product(ProductSpec::parse("(q^2;q^2) (q^3;q^3) (q;q)^-1 (q^6;q^6)^-1"), 201);
  EXPECT_EQ(lhs, rhs);
  auto odd = invert(euler_factor(1, 2, 201));
  auto ratio = expand_product(ProductSpec::parse("(q^2;q^2)(q;q)^-1"), 201);
  EXPECT_EQ(odd, ratio);
  EXPECT_EQ(odd, b_ell_series(2, 201));
}
