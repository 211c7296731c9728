#include "regulus/suite.hpp"

#include <chrono>
#include <functional>

#include "regulus/parallel.hpp"
#include "regulus/regular_partitions.hpp"

namespace regulus {

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "paper-core") return Suite::PaperCore;
  if (name == "paper-conjectures") return Suite::PaperConjectures;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::PaperCore:
      return "paper-core";
    case Suite::PaperConjectures:
      return "paper-conjectures";
    case Suite::All:
      return "all";
  }
  return "unknown";
}

SuiteSummary SuiteResult::summary() const {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++(r.tier == Tier::Core ? s.fail : s.conjecture_fail);
        break;
      case Status::Insufficient:
        ++s.insufficient;
        break;
    }
  }
  return s;
}

namespace {

using Check = std::function<VerificationReport()>;

// A claim expected to fail: Pass when a counterexample exists within range.
VerificationReport expect_failure(const CongruenceClaim& claim, Exponent n, SeriesCache* cache) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.label = claim.label + " fails";
  rep.tier = claim.tier;
  rep.assumptions = claim.assumptions;
  if (n < claim.B) {
    rep.status = Status::Insufficient;
    rep.detail = "range below the progression offset";
    return rep;
  }
  const auto witness = find_counterexample(claim, n, cache);
  if (witness) {
    rep.status = Status::Pass;
    rep.checked_through = claim.A * witness->n + claim.B;
    rep.detail = "witness n=" + std::to_string(witness->n) + ": b" + std::to_string(claim.ell) +
                 "(" + std::to_string(rep.checked_through) + ") = " + witness->value.get_str() +
                 " mod " + std::to_string(claim.M);
  } else {
    rep.status = Status::Fail;
    rep.checked_through = n;
    rep.add_counterexample(n, 0);
    rep.detail = "no witness up to " + std::to_string(n);
  }
  rep.duration_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<Check> core_checks(Exponent n, SeriesCache* cache) {
  const Exponent exact = std::min(n, kExactCheckPrecision) + 1;
  std::vector<Check> checks{
      [=] { return verify_main_dissection(exact); },
      [=] { return verify_eta_identity(exact); },
      [=] { return verify_three_mod_four_divisibility(exact); },
      [=] { return verify_inside_three(n + 1); },
      [=] { return verify_five_dissection(n >= 3 ? (n - 3) / 5 + 1 : 0); },
      [=] { return verify_even_lemma(n + 1); },
      [=] { return verify_self_similarity(n + 1); },
  };
  std::vector<CongruenceClaim> claims;
  auto append = [&claims](std::vector<CongruenceClaim> more) {
    claims.insert(claims.end(), more.begin(), more.end());
  };
  append(make_claims(ClaimFamily::ThreeModFour));
  append(make_claims(ClaimFamily::ThirteenModSixteen));
  for (int a = 1; a <= 4; ++a) append(make_claims(ClaimFamily::PowerOfFourChain, a));
  for (int a = 1; a <= 2; ++a) append(make_claims(ClaimFamily::PowerOfFiveChain, a));
  append(make_claims(ClaimFamily::ThreeRegularModNine));
  for (const auto& c : claims) checks.push_back([=] { return verify_claim(c, n, cache); });
  return checks;
}

std::vector<Check> conjecture_checks(Exponent n, SeriesCache* cache) {
  std::vector<Check> checks;
  for (auto family : {ClaimFamily::ThirtyTwoProgression, ClaimFamily::SixtyFourProgression}) {
    for (const auto& c : make_claims(family)) {
      checks.push_back([=] { return verify_claim(c, n, cache); });
    }
  }
  for (const auto& c : make_claims(ClaimFamily::DoublingExtension)) {
    checks.push_back([=] { return expect_failure(c, n, cache); });
  }
  checks.push_back([=] {
    const Exponent terms = n >= 2 ? std::min<Exponent>(2000, (n - 2) / 5 + 1) : 0;
    if (terms < 1) {
      VerificationReport rep;
      rep.label = "b3 five-progression similarity";
      rep.tier = Tier::Conjecture;
      rep.status = Status::Insufficient;
      return rep;
    }
    auto rep = verify_similarity(3, 5, 2, 2, 0, 5, 9, terms, cache);
    rep.tier = Tier::Conjecture;
    return rep;
  });
  return checks;
}

}  // namespace

SuiteResult run_suite(const SuiteOptions& options) {
  std::vector<Check> checks;
  if (options.suite != Suite::PaperConjectures) checks = core_checks(options.n, options.cache);
  if (options.suite != Suite::PaperCore) {
    auto more = conjecture_checks(options.n, options.cache);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  SuiteResult result;
  result.suite = options.suite;
  result.n = options.n;
  result.reports.resize(checks.size());
  parallel_for(checks.size(), options.threads,
               [&](std::size_t i) { result.reports[i] = checks[i](); });
  return result;
}

}  // namespace regulus
