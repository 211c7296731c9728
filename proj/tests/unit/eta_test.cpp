#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "regulus/eta.hpp"
#include "regulus/regular_partitions.hpp"

using namespace regulus;

namespace {

const Ring ZZ = Ring::integers();

EtaQuotient C() { return EtaQuotient(27, {{9, 1}, {1, 63}}); }

}  // namespace

TEST(EtaQuotient, ValidatesDivisors) {
  EXPECT_THROW(EtaQuotient(10, {{3, 1}}), std::invalid_argument);
  EXPECT_THROW(EtaQuotient(10, {{5, 0}}), std::invalid_argument);
  EXPECT_THROW(EtaQuotient::parse("10: 5^1 * 5^2"), ParseError);
  EXPECT_THROW(EtaQuotient::parse("10: 3^1"), std::exception);
}

TEST(EtaQuotient, ParseAndPrint) {
  auto e = EtaQuotient::parse("27: 9^1 * 1^63");
  EXPECT_EQ(e, C());
  EXPECT_EQ(EtaQuotient::parse(e.to_string()), e);
  EXPECT_EQ(EtaQuotient::parse("27: 9 * 1^63"), e);
}

TEST(Ghn, WeightAndLevelOfC) {
  auto meta = ghn_validate(C());
  EXPECT_EQ(meta.weight, 32);
  EXPECT_EQ(meta.level, 27);
  EXPECT_EQ(meta.seed.value(), 9);
}

TEST(Ghn, AllIdentityTermsAreWeightTwoLevel216) {
  const auto id = eta_identity_quotients();
  std::vector<EtaQuotient> all{id.lhs, id.rhs[0], id.rhs[1], id.rhs[2]};
  EXPECT_EQ(id.rhs[0], EtaQuotient(216, {{12, 3}, {18, 1}, {4, 4}, {2, -2}, {6, -1}, {36, -1}}));
  for (const auto& q : all) {
    auto meta = ghn_validate(q);
    EXPECT_EQ(meta.weight, 2) << q.to_string();
    EXPECT_EQ(meta.level, 216) << q.to_string();
  }
}

TEST(Ghn, Failures) {
  try {
    ghn_validate(EtaQuotient(1, {{1, 1}}));
    FAIL();
  } catch (const GhnError& e) {
    EXPECT_EQ(e.kind(), GhnFailure::FirstCongruence);
    EXPECT_EQ(e.residue(), 1);
  }
  // sum delta r = 24 but sum (N / delta) r = 12.
  try {
    ghn_validate(EtaQuotient(2, {{2, 12}}));
    FAIL();
  } catch (const GhnError& e) {
    EXPECT_EQ(e.kind(), GhnFailure::SecondCongruence);
  }
  try {
    ghn_validate(EtaQuotient(4, {{4, -14}, {2, -29}, {1, -30}}));
    FAIL();
  } catch (const GhnError& e) {
    EXPECT_EQ(e.kind(), GhnFailure::HalfIntegralWeight);
  }
}

TEST(Ghn, RaiseLevel) {
  // eta(2z)^12: sum delta r = 24, sum (N/delta) r = 12 at N = 2.
  auto raised = raise_level(EtaQuotient(2, {{2, 12}}));
  ASSERT_TRUE(raised.has_value());
  EXPECT_EQ(raised->level(), 4);
  EXPECT_NO_THROW(ghn_validate(*raised));
  EXPECT_FALSE(raise_level(EtaQuotient(1, {{1, 1}})).has_value());
  auto same = raise_level(C());
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->level(), 27);
}

TEST(SturmBound, Examples) {
  EXPECT_EQ(sturm_bound(2, 216), 72);
  EXPECT_EQ(sturm_bound(32, 27), 96);
  EXPECT_EQ(sturm_bound(12, 1), 1);
  EXPECT_EQ(sturm_bound_exact(2, 216), 72);
}

TEST(SturmBound, MatchesIntegerOracle) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = gen::uniform(1, 60);
    const auto N = gen::uniform(1, 5000);
    EXPECT_EQ(sturm_bound(k, N), oracle::sturm(k, N)) << k << " " << N;
    const mpq_class frac = sturm_bound_exact(k, N) - sturm_bound(k, N);
    EXPECT_GE(frac, 0);
    EXPECT_LT(frac, 1);
  }
}

TEST(Kronecker, Examples) {
  for (std::int64_t a = -20; a <= 20; ++a) EXPECT_EQ(kronecker_symbol(a, 1), 1);
  EXPECT_EQ(kronecker_symbol(2, 3), -1);
  EXPECT_EQ(kronecker_symbol(4, 5), 1);
  EXPECT_EQ(kronecker_symbol(9, 2), 1);
  EXPECT_EQ(kronecker_symbol(3, 2), -1);
  EXPECT_EQ(kronecker_symbol(2, 2), 0);
  EXPECT_EQ(kronecker_symbol(-1, -1), -1);
  EXPECT_EQ(kronecker_symbol(1, 0), 1);
  EXPECT_EQ(kronecker_symbol(2, 0), 0);
}

TEST(Kronecker, MatchesFactorizationOracle) {
  for (std::int64_t n = -200; n <= 200; ++n) {
    for (std::int64_t a = -60; a <= 60; ++a) {
      ASSERT_EQ(kronecker_symbol(a, n), oracle::kronecker(a, n)) << a << "/" << n;
    }
  }
}

TEST(Kronecker, MultiplicativeInTop) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 2 * gen::uniform(0, 5000) + 1;
    const auto a = gen::uniform(-100000, 100000);
    const auto b = gen::uniform(-100000, 100000);
    EXPECT_EQ(kronecker_symbol(a * b, n), kronecker_symbol(a, n) * kronecker_symbol(b, n));
  }
}

TEST(Character, Values) {
  auto meta = ghn_validate(C());
  EXPECT_EQ(character_value(meta, 2), 1);
  EXPECT_EQ(character_value(meta, 1), 1);
  EXPECT_ANY_THROW(character_value(meta, 0));
  // s a perfect square and k even: trivial on units.
  for (std::int64_t d = 1; d < 200; ++d) {
    if (d % 3 != 0) { EXPECT_EQ(character_value(meta, d), 1) << d; }
  }
}

TEST(EtaExpansion, LeadingExponents) {
  auto e = eta_expansion(EtaQuotient(1, {{1, 1}}), 30);
  EXPECT_EQ(e.lead24, 1);
  EXPECT_EQ(e.series, euler_factor(1, 1, 30));
  EXPECT_EQ(eta_expansion(C(), 10).lead24, 72);
  EXPECT_EQ(EtaQuotient(9, {{9, 1}, {1, -1}}).lead24(), 8);
}

TEST(EtaExpansion, LeadAdditiveUnderProducts) {
  for (int trial = 0; trial < 50; ++trial) {
    EtaQuotient::Exponents x, y;
    for (std::int64_t d : {1, 2, 3, 4, 6, 12}) {
      if (auto r = gen::uniform(-3, 3); r != 0) x[d] = r;
      if (auto r = gen::uniform(-3, 3); r != 0) y[d] = r;
    }
    if (x.empty() || y.empty()) continue;
    EtaQuotient f(12, x), g(12, y);
    const auto prod = f.times(g);
    const auto ef = eta_expansion(f, 30), eg = eta_expansion(g, 30), ep = eta_expansion(prod, 30);
    EXPECT_EQ(ep.lead24, ef.lead24 + eg.lead24);
    EXPECT_EQ(ep.series, mul(ef.series, eg.series));
  }
}

TEST(Hecke, Definition) {
  auto f = TruncSeries::monomial(ZZ, 2, 1, 20);
  auto t = hecke_tp(f, 2, 2, 1);
  EXPECT_EQ(t.precision(), 10);
  EXPECT_EQ(t, TruncSeries::from_coeffs(ZZ, {0, 1, 0, 0, 2}, 10));
  auto f2 = TruncSeries::monomial(Ring::modulo(2), 2, 1, 20);
  EXPECT_EQ(hecke_tp(f2, 2, 32, 1), TruncSeries::monomial(Ring::modulo(2), 1, 1, 10));
  EXPECT_ANY_THROW(hecke_tp(f, 4, 2, 1));
  EXPECT_EQ(hecke_up(TruncSeries::from_coeffs(ZZ, {1, 2, 3, 4, 5, 6}, 6), 2),
            TruncSeries::from_coeffs(ZZ, {1, 3, 5}, 3));
}

TEST(Hecke, FactorizationProperty) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto k = gen::uniform(2, 40);
      const int chi = static_cast<int>(gen::uniform(-1, 1));
      auto f = reduce_mod(gen::series(ZZ, 60 * p, 0), static_cast<std::uint64_t>(p));
      auto g = reduce_mod(gen::series(ZZ, 60, 0), static_cast<std::uint64_t>(p));
      auto lhs = hecke_tp(mul(f, substitute_power(g, p)), p, k, chi);
      auto rhs = mul(hecke_up(f, p), g);
      ASSERT_GE(lhs.precision(), 60);
      EXPECT_TRUE(agree_below(lhs, rhs, 60)) << "p=" << p << " k=" << k;
    }
  }
}

TEST(Hecke, TwoFourTimesOnCIsEvenThroughSturmBound) {
  const Exponent P = 16 * 97;
  auto c = shift(eta_expansion(C(), P, Ring::modulo(2)).series, 3);
  auto t = truncate(c, P);
  for (int i = 0; i < 4; ++i) t = hecke_tp(t, 2, 32, 1);
  ASSERT_GT(t.precision(), 96);
  for (Exponent n = 0; n <= 96; ++n) EXPECT_EQ(t.residue(n), 0u) << n;
}

TEST(SturmCompare, CasesAndBoundaryInclusivity) {
  auto f = reduce_mod(b_ell_series(9, 200), 7);
  auto r = sturm_compare(f, f, 2, 216, 7);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.checked_through, 72);
  EXPECT_FALSE(r.assumptions.empty());
  auto g = add(f, TruncSeries::monomial(Ring::modulo(7), 72, 1, 200));
  auto bad = sturm_compare(f, g, 2, 216, 7);
  EXPECT_EQ(bad.status, Status::Fail);
  ASSERT_FALSE(bad.counterexamples.empty());
  EXPECT_EQ(bad.counterexamples.front().n, 72);
  auto past = add(f, TruncSeries::monomial(Ring::modulo(7), 73, 1, 200));
  EXPECT_EQ(sturm_compare(f, past, 2, 216, 7).status, Status::Pass);
  EXPECT_EQ(sturm_compare(truncate(f, 72), f, 2, 216, 7).status, Status::Insufficient);
}

TEST(Primes, Helpers) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(factorize(216), (std::map<std::int64_t, int>{{2, 3}, {3, 3}}));
}
