#include "regulus/regular_partitions.hpp"

#include <chrono>
#include <stdexcept>

#include "regulus/series_cache.hpp"

namespace regulus {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::shared_ptr<const TruncSeries> b_ell_cached(std::int64_t ell, Exponent precision, Ring ring,
                                                SeriesCache* cache) {
  if (cache) return cache->b_ell(ell, precision, ring);
  return std::make_shared<const TruncSeries>(b_ell_series(ell, precision, ring));
}

std::uint64_t count_partitions(std::int64_t ell, std::int64_t n, std::int64_t max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::int64_t part = std::min(n, max_part); part >= 1; --part) {
    if (part % ell == 0) continue;
    total += count_partitions(ell, n - part, part);
  }
  return total;
}

// Records every exponent below the shared precision where f and g differ.
void record_differences(VerificationReport& rep, const TruncSeries& f, const TruncSeries& g) {
  const Exponent prec = std::min(f.precision(), g.precision());
  const auto start = std::min(f.valuation(), g.valuation());
  for (Exponent n = start; n < prec; ++n) {
    const mpz_class d = f.coeff(n) - g.coeff(n);
    if (d != 0) rep.add_counterexample(n, d);
  }
}

void finish(VerificationReport& rep, Clock::time_point t0) {
  if (rep.status != Status::Insufficient) rep.settle();
  rep.duration_ms = elapsed_ms(t0);
}

}  // namespace

ProductSpec b_ell_spec(std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  ProductSpec spec;
  spec.times(ell, ell, 1).times(1, 1, -1);
  return spec;
}

TruncSeries b_ell_series(std::int64_t ell, Exponent precision, Ring ring) {
  return expand_product(b_ell_spec(ell), precision, ring);
}

std::uint64_t b_ell_oracle(std::int64_t ell, std::int64_t n) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return count_partitions(ell, n, n);
}

void CongruenceClaim::validate() const {
  if (ell < 2) throw std::invalid_argument("claim needs ell >= 2");
  if (A < 1 || B < 0 || B >= A) throw std::invalid_argument("claim needs 0 <= B < A");
  if (M < 2) throw std::invalid_argument("claim needs M >= 2");
  if (exclude && exclude->mod < 1) throw std::invalid_argument("exclusion modulus must be positive");
}

std::vector<CongruenceClaim> make_claims(ClaimFamily family, int a) {
  auto claim = [](std::int64_t ell, std::int64_t A, std::int64_t B, std::int64_t M,
                  Tier tier = Tier::Core) {
    CongruenceClaim c;
    c.ell = ell;
    c.A = A;
    c.B = B;
    c.M = M;
    c.tier = tier;
    c.label = "b" + std::to_string(ell) + "(" + std::to_string(A) + "n+" +
              std::to_string(B) + ") = 0 mod " + std::to_string(M);
    return c;
  };
  switch (family) {
    case ClaimFamily::ThreeModFour:
      return {claim(9, 4, 3, 3)};
    case ClaimFamily::ThirteenModSixteen:
      return {claim(9, 16, 13, 6)};
    case ClaimFamily::PowerOfFourChain: {
      if (a < 1) throw std::invalid_argument("chain parameter must be >= 1");
      const std::int64_t num = 10 * ipow(4, a - 1) - 1;
      if (num % 3 != 0) throw std::logic_error("non-integral power-of-four offset");
      return {claim(9, ipow(4, a), num / 3, 3)};
    }
    case ClaimFamily::PowerOfFiveChain: {
      if (a < 1) throw std::invalid_argument("chain parameter must be >= 1");
      const std::int64_t step = ipow(5, 2 * a - 2);
      if ((step - 1) % 3 != 0) throw std::logic_error("non-integral power-of-five offset");
      const std::int64_t base = (step - 1) / 3;
      std::vector<CongruenceClaim> out;
      for (std::int64_t k : {3, 13, 18, 23}) out.push_back(claim(9, ipow(5, 2 * a), base + step * k, 3));
      return out;
    }
    case ClaimFamily::ThirtyTwoProgression:
      return {claim(9, 32, 13, 12, Tier::Conjecture)};
    case ClaimFamily::SixtyFourProgression:
      return {claim(9, 64, 13, 24, Tier::Conjecture)};
    case ClaimFamily::DoublingExtension: {
      std::vector<CongruenceClaim> out{claim(9, 128, 13, 48, Tier::Conjecture),
                                       claim(9, 128, 77, 48, Tier::Conjecture)};
      for (auto& c : out) {
        c.assumptions.push_back("modulus 48 read as the continuation of 3, 6, 12, 24");
      }
      return out;
    }
    case ClaimFamily::ThreeRegularModNine: {
      auto c5 = claim(3, 5, 2, 9);
      c5.exclude = Exclusion{5, 0};
      c5.label += " unless 5 | n";
      auto c7 = claim(3, 7, 4, 9);
      c7.exclude = Exclusion{7, 0};
      c7.label += " unless 7 | n";
      return {c5, c7};
    }
  }
  throw std::invalid_argument("unknown claim family");
}

VerificationReport verify_claim(const CongruenceClaim& claim, Exponent n_max,
                                SeriesCache* cache) {
  const auto t0 = Clock::now();
  claim.validate();
  VerificationReport rep;
  rep.label = claim.label;
  rep.tier = claim.tier;
  rep.assumptions = claim.assumptions;
  if (n_max < claim.B) {
    rep.status = Status::Insufficient;
    rep.detail = "n_max " + std::to_string(n_max) + " below offset " + std::to_string(claim.B);
    rep.duration_ms = elapsed_ms(t0);
    return rep;
  }
  const auto series = b_ell_cached(claim.ell, n_max + 1, Ring::modulo(claim.M), cache);
  const auto prog = extract_progression(*series, claim.A, claim.B);
  Exponent checked = 0;
  for (Exponent n = 0; n < prog.precision(); ++n) {
    if (claim.exclude && claim.exclude->skips(n)) continue;
    ++checked;
    const auto r = prog.residue(n);
    if (r != 0) rep.add_counterexample(n, mpz_class(static_cast<unsigned long>(r)));
  }
  rep.checked_through = claim.A * (prog.precision() - 1) + claim.B;
  rep.detail = std::to_string(checked) + " indices checked";
  finish(rep, t0);
  return rep;
}

std::optional<Counterexample> find_counterexample(const CongruenceClaim& claim, Exponent n_max,
                                                  SeriesCache* cache) {
  claim.validate();
  if (n_max < claim.B) throw PrecisionError("n_max below the progression offset");
  const auto series = b_ell_cached(claim.ell, n_max + 1, Ring::modulo(claim.M), cache);
  const auto prog = extract_progression(*series, claim.A, claim.B);
  for (Exponent n = 0; n < prog.precision(); ++n) {
    if (claim.exclude && claim.exclude->skips(n)) continue;
    if (const auto r = prog.residue(n); r != 0) {
      return Counterexample{n, mpz_class(static_cast<unsigned long>(r))};
    }
  }
  return std::nullopt;
}

VerificationReport verify_similarity(std::int64_t ell, std::int64_t A, std::int64_t B,
                                     std::int64_t c, std::int64_t j, std::int64_t k,
                                     std::int64_t m, Exponent terms, SeriesCache* cache) {
  const auto t0 = Clock::now();
  if (m < 2 || A < 1 || B < 0 || B >= A || j < 0 || k < 1 || terms < 1) {
    throw std::invalid_argument("invalid similarity parameters");
  }
  VerificationReport rep;
  rep.label = "sum b" + std::to_string(ell) + "(" + std::to_string(A) + "n+" +
              std::to_string(B) + ") q^n = " + std::to_string(c) +
              (j > 0 ? " q^" + std::to_string(j) : std::string()) + " B" + std::to_string(ell) + "(q^" + std::to_string(k) + ") mod " +
              std::to_string(m);
  const Ring ring = Ring::modulo(static_cast<std::uint64_t>(m));
  const auto base = b_ell_cached(ell, A * terms + B, ring, cache);
  const auto lhs = extract_progression(*base, A, B);
  const auto rhs = truncate(scale(shift(substitute_power(*base, k), j), c), terms);
  record_differences(rep, lhs, rhs);
  rep.checked_through = std::min(lhs.precision(), rhs.precision()) - 1;
  finish(rep, t0);
  return rep;
}

MainDissection main_dissection_terms(Exponent precision) {
  const Ring zz = Ring::integers();
  ProductSpec even;
  even.times(12, 12, 2).times(2, 2, -2).times(6, 36, -1).times(30, 36, -1);
  ProductSpec one;
  one.times(12, 24, 2).times(36, 36, 1).times(4, 4, -1).times(4, 8, -6);
  ProductSpec three;
  three.times(24, 24, 2).times(36, 36, 1).times(4, 4, -3).times(4, 8, -2);
  return {
      expand_product(even, precision, zz),
      shift(expand_product(one, std::max<Exponent>(precision - 1, 0), zz), 1),
      shift(scale(expand_product(three, std::max<Exponent>(precision - 3, 0), zz), 3), 3),
  };
}

VerificationReport verify_main_dissection(Exponent precision) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "B9 mod-4 dissection (exact)";
  if (precision < 73) {
    rep.status = Status::Insufficient;
    rep.detail = "needs precision >= 73";
    return rep;
  }
  const auto b9 = b_ell_series(9, precision);
  const auto parts = main_dissection_terms(precision);
  const auto rhs = parts.even_part + parts.one_mod_four + parts.three_mod_four;
  record_differences(rep, b9, rhs);
  std::size_t support = 0;
  auto check_support = [&](const TruncSeries& s, auto allowed) {
    for (Exponent n = s.valuation(); n < s.precision(); ++n) {
      if (!allowed(n % 4) && !s.is_zero_at(n)) {
        ++support;
        rep.add_counterexample(n, s.coeff(n));
      }
    }
  };
  check_support(parts.even_part, [](Exponent r) { return r == 0 || r == 2; });
  check_support(parts.one_mod_four, [](Exponent r) { return r == 1; });
  check_support(parts.three_mod_four, [](Exponent r) { return r == 3; });
  rep.checked_through = std::min(b9.precision(), rhs.precision()) - 1;
  rep.detail = support == 0 ? "pieces supported on 0/2, 1, 3 mod 4"
                            : std::to_string(support) + " support violations";
  finish(rep, t0);
  return rep;
}

VerificationReport verify_three_mod_four_divisibility(Exponent precision) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "b9(4n+3) divisible by 3 as integers";
  if (precision < 4) {
    rep.status = Status::Insufficient;
    rep.detail = "needs precision >= 4";
    return rep;
  }
  const auto b9 = b_ell_series(9, precision);
  const auto parts = main_dissection_terms(precision);
  const auto lhs = extract_progression(b9, 4, 3);
  const auto piece = extract_progression(parts.three_mod_four, 4, 3);
  record_differences(rep, lhs, piece);
  for (Exponent n = 0; n < lhs.precision(); ++n) {
    const mpz_class c = lhs.coeff(n);
    if (mpz_divisible_ui_p(c.get_mpz_t(), 3) == 0) rep.add_counterexample(n, c);
  }
  rep.checked_through = 4 * (lhs.precision() - 1) + 3;
  finish(rep, t0);
  return rep;
}

EtaIdentity eta_identity_quotients() {
  return {
      EtaQuotient(216, {{9, 1}, {4, 4}, {1, -1}}),
      {EtaQuotient(216, {{12, 3}, {18, 1}, {4, 4}, {2, -2}, {6, -1}, {36, -1}}),
       EtaQuotient(216, {{8, 6}, {36, 1}, {12, 2}, {4, -3}, {24, -2}}),
       EtaQuotient(216, {{8, 2}, {36, 1}, {24, 2}, {4, -1}})},
      {1, 1, 3},
  };
}

VerificationReport verify_eta_identity(Exponent precision, const EtaIdentity& identity) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "weight-2 eta identity on Gamma0(216)";
  rep.assumptions.push_back("each side is a modular form of weight 2 on Gamma0(216)");
  if (precision < 73) {
    rep.status = Status::Insufficient;
    rep.detail = "needs precision >= 73";
    return rep;
  }
  const auto weight = 2;
  const auto level = identity.lhs.level();
  std::vector<const EtaQuotient*> all{&identity.lhs};
  for (const auto& q : identity.rhs) all.push_back(&q);
  std::string detail;
  for (const auto* q : all) {
    ModFormMeta meta;
    try {
      meta = ghn_validate(*q);
    } catch (const GhnError& e) {
      rep.status = Status::Fail;
      rep.add_counterexample(-1, e.residue());
      rep.detail = std::string("GHN check failed: ") + e.what();
      rep.duration_ms = elapsed_ms(t0);
      return rep;
    }
    if (meta.weight != weight || meta.level != level) {
      rep.status = Status::Fail;
      rep.add_counterexample(-1, meta.weight);
      rep.detail = q->to_string() + " has weight " + std::to_string(meta.weight);
      rep.duration_ms = elapsed_ms(t0);
      return rep;
    }
    if (q->lead24() % 24 != 0) {
      rep.status = Status::Fail;
      rep.add_counterexample(-1, q->lead24());
      rep.detail = q->to_string() + " has non-integral q-exponent";
      rep.duration_ms = elapsed_ms(t0);
      return rep;
    }
    detail += q->to_string() + " lead24=" + std::to_string(q->lead24()) + "; ";
  }
  // q^(lead24/24) * prod (q^d; q^d)^r, to precision P.
  auto integral = [precision](const EtaQuotient& q) {
    const Exponent s = q.lead24() / 24;
    const auto e = eta_expansion(q, std::max<Exponent>(precision - s, 0));
    return shift(e.series, s);
  };
  const auto lhs = integral(identity.lhs);
  TruncSeries rhs = TruncSeries::zero(Ring::integers(), precision);
  std::int64_t min_lead = identity.rhs[0].lead24();
  for (std::size_t i = 0; i < identity.rhs.size(); ++i) {
    rhs = rhs + scale(integral(identity.rhs[i]), identity.coefficients[i]);
    min_lead = std::min(min_lead, identity.rhs[i].lead24());
  }
  if (min_lead != identity.lhs.lead24()) {
    rep.status = Status::Fail;
    rep.add_counterexample(-1, min_lead);
    rep.detail = detail + "leading exponents disagree";
    rep.duration_ms = elapsed_ms(t0);
    return rep;
  }
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto s = sturm_compare(lhs, rhs, weight, level, p);
    if (!s.passed()) {
      for (const auto& c : s.counterexamples) rep.add_counterexample(c.n, c.value);
    }
  }
  record_differences(rep, lhs, rhs);
  rep.checked_through = std::min(lhs.precision(), rhs.precision()) - 1;
  rep.detail = detail + "sturm bound " + std::to_string(sturm_bound(weight, level));
  finish(rep, t0);
  return rep;
}

VerificationReport verify_inside_three(Exponent precision) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "(q^12;q^24)^2/(q^4;q^8)^6 = 1 mod 3";
  ProductSpec spec;
  spec.times(12, 24, 2).times(4, 8, -6);
  const auto f = expand_product(spec, precision, Ring::modulo(3));
  record_differences(rep, f, TruncSeries::one(Ring::modulo(3), precision));
  rep.checked_through = precision - 1;
  finish(rep, t0);
  return rep;
}

VerificationReport verify_five_dissection(Exponent terms) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "sum b9(5n+3) q^n = q B9(q^5) mod 3";
  if (terms < 1) {
    rep.status = Status::Insufficient;
    rep.detail = "needs at least one term";
    return rep;
  }
  const Ring z3 = Ring::modulo(3);
  const auto b9 = b_ell_series(9, 5 * terms + 3, z3);
  const auto lhs = extract_progression(b9, 5, 3);
  const auto rhs = truncate(shift(substitute_power(b9, 5), 1), terms);
  record_differences(rep, lhs, rhs);
  std::size_t off = 0;
  for (Exponent n = 0; n < lhs.precision(); ++n) {
    if (n % 5 != 1 && lhs.residue(n) != 0) {
      ++off;
      rep.add_counterexample(n, mpz_class(static_cast<unsigned long>(lhs.residue(n))));
    }
  }
  rep.checked_through = std::min(lhs.precision(), rhs.precision()) - 1;
  rep.detail = off == 0 ? "progression vanishes off n = 1 mod 5" : "nonzero off n = 1 mod 5";
  finish(rep, t0);
  return rep;
}

VerificationReport verify_even_lemma(Exponent precision) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "b9(16n+13) even via T_2^4 on eta(9z)eta(z)^63";
  rep.assumptions.push_back("eta(9z)eta(z)^63 is a modular form of weight 32 on Gamma0(27)");
  if (precision < kEvenLemmaMinPrecision) {
    rep.status = Status::Insufficient;
    rep.detail = "needs precision >= " + std::to_string(kEvenLemmaMinPrecision);
    return rep;
  }
  const Ring z2 = Ring::modulo(2);
  const EtaQuotient c_eta(27, {{9, 1}, {1, 63}});
  const auto meta = ghn_validate(c_eta);
  const auto lead = c_eta.lead24() / 24;
  const auto via_eta = shift(eta_expansion(c_eta, precision - lead, z2).series, lead);
  const auto b9 = b_ell_series(9, precision, z2);
  ProductSpec euler64;
  euler64.times(1, 1, 64);
  const auto via_b9 = shift(truncate(b9, precision - lead) *
                                expand_product(euler64, precision - lead, z2),
                            lead);
  std::string detail;
  if (auto d = first_difference(via_eta, via_b9)) {
    rep.add_counterexample(*d, via_eta.coeff(*d));
    detail += "constructions differ at q^" + std::to_string(*d) + "; ";
  }
  const int chi2 = character_value(meta, 2);
  TruncSeries h = via_eta;
  for (int i = 0; i < 4; ++i) h = hecke_tp(h, 2, meta.weight, chi2);
  const auto bound = sturm_bound(meta.weight, meta.level);
  const auto sturm = sturm_compare(h, TruncSeries::zero(z2, h.precision()), meta.weight,
                                   meta.level, 2);
  if (sturm.status == Status::Insufficient) {
    rep.status = Status::Insufficient;
    rep.detail = "T_2^4 image too short: " + sturm.detail;
    rep.duration_ms = elapsed_ms(t0);
    return rep;
  }
  for (const auto& c : sturm.counterexamples) rep.add_counterexample(c.n, c.value);
  ProductSpec euler4;
  euler4.times(1, 1, 4);
  const auto prog = extract_progression(b9, 16, 13);
  const auto target = shift(prog * expand_product(euler4, prog.precision(), z2), 1);
  const auto through = std::min(h.precision(), target.precision());
  record_differences(rep, truncate(h, through), truncate(target, through));
  rep.checked_through = through - 1;
  rep.detail = detail + "chi(2)=" + std::to_string(chi2) + ", sturm bound " +
               std::to_string(bound) + ", T_2^4 image compared through q^" +
               std::to_string(through - 1);
  finish(rep, t0);
  return rep;
}

VerificationReport verify_self_similarity(Exponent precision) {
  const auto t0 = Clock::now();
  VerificationReport rep;
  rep.label = "b9(4n+1) = b9(n) mod 3";
  if (precision < 2) {
    rep.status = Status::Insufficient;
    rep.detail = "needs precision >= 2";
    return rep;
  }
  const auto b9 = b_ell_series(9, precision, Ring::modulo(3));
  const auto lhs = extract_progression(b9, 4, 1);
  record_differences(rep, lhs, truncate(b9, lhs.precision()));
  std::int64_t offset = 3;
  for (int a = 1; a <= 8; ++a) {
    const auto claim = make_claims(ClaimFamily::PowerOfFourChain, a).front();
    if (claim.B != offset) rep.add_counterexample(-a, claim.B);
    offset = 4 * offset + 1;
  }
  rep.checked_through = lhs.precision() - 1;
  rep.detail = "offset chain 3, 13, 53, 213, ... checked for a = 1..8";
  finish(rep, t0);
  return rep;
}

}  // namespace regulus
