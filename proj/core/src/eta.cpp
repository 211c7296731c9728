#include "regulus/eta.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "series_kernels.hpp"

namespace regulus {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<std::int64_t, int> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::map<std::int64_t, int> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

EtaQuotient::EtaQuotient(std::int64_t level, Exponents exponents)
    : level_(level), exponents_(std::move(exponents)) {
  if (level_ < 1) throw std::invalid_argument("eta quotient level must be positive");
  for (const auto& [delta, r] : exponents_) {
    if (delta < 1 || level_ % delta != 0) {
      throw std::invalid_argument("eta factor " + std::to_string(delta) +
                                  " does not divide level " + std::to_string(level_));
    }
    if (r == 0) throw std::invalid_argument("eta exponents must be nonzero");
  }
}

std::int64_t EtaQuotient::lead24() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : exponents_) s += delta * r;
  return s;
}

std::int64_t EtaQuotient::cusp_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : exponents_) s += (level_ / delta) * r;
  return s;
}

std::int64_t EtaQuotient::exponent_sum() const {
  std::int64_t s = 0;
  for (const auto& [delta, r] : exponents_) s += r;
  return s;
}

EtaQuotient EtaQuotient::times(const EtaQuotient& other) const {
  Exponents merged = exponents_;
  for (const auto& [delta, r] : other.exponents_) {
    if ((merged[delta] += r) == 0) merged.erase(delta);
  }
  return EtaQuotient(std::lcm(level_, other.level_), std::move(merged));
}

EtaQuotient EtaQuotient::with_level(std::int64_t level) const {
  return EtaQuotient(level, exponents_);
}

ProductSpec EtaQuotient::product_spec() const {
  ProductSpec spec;
  for (const auto& [delta, r] : exponents_) spec.times(delta, delta, r);
  return spec;
}

std::string EtaQuotient::to_string() const {
  std::ostringstream os;
  os << level_ << ':';
  bool first = true;
  for (auto it = exponents_.rbegin(); it != exponents_.rend(); ++it) {
    os << (first ? " " : " * ") << it->first << '^' << it->second;
    first = false;
  }
  return os.str();
}

namespace {

class EtaParser {
 public:
  explicit EtaParser(std::string_view text) : text_(text) {}

  EtaQuotient run() {
    skip_ws();
    const std::size_t level_pos = pos_;
    const auto level = integer(false);
    if (level < 1) throw ParseError(level_pos, "level must be positive");
    skip_ws();
    expect(':');
    EtaQuotient::Exponents exps;
    skip_ws();
    bool first = true;
    while (pos_ < text_.size()) {
      if (!first) {
        expect('*');
        skip_ws();
      }
      first = false;
      const std::size_t at = pos_;
      const auto delta = integer(false);
      std::int64_t r = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        r = integer(true);
      }
      if (delta < 1 || level % delta != 0) {
        throw ParseError(at, std::to_string(delta) + " does not divide level " +
                                 std::to_string(level));
      }
      if (r == 0) throw ParseError(at, "eta exponent must be nonzero");
      if (!exps.emplace(delta, r).second) {
        throw ParseError(at, "repeated eta factor " + std::to_string(delta));
      }
      skip_ws();
    }
    return EtaQuotient(level, std::move(exps));
  }

 private:
  std::int64_t integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError(digits, "expected an integer");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, v);
    if (ec != std::errc{}) throw ParseError(start, "integer out of range");
    return neg ? -v : v;
  }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t mod24(std::int64_t x) { return ((x % 24) + 24) % 24; }

}  // namespace

EtaQuotient EtaQuotient::parse(std::string_view text) { return EtaParser(text).run(); }

mpq_class CharacterSeed::value() const {
  mpz_class num = 1;
  mpz_class den = 1;
  for (const auto& [p, e] : prime_exponents) {
    mpz_class pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    (e < 0 ? den : num) *= pp;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

ModFormMeta ghn_validate(const EtaQuotient& eq) {
  const auto first = mod24(eq.lead24());
  if (first != 0) {
    throw GhnError(GhnFailure::FirstCongruence, first,
                   "sum delta*r_delta = " + std::to_string(first) + " mod 24 for " +
                       eq.to_string());
  }
  const auto second = mod24(eq.cusp_sum());
  if (second != 0) {
    throw GhnError(GhnFailure::SecondCongruence, second,
                   "sum (N/delta)*r_delta = " + std::to_string(second) +
                       " mod 24 for " + eq.to_string());
  }
  const auto total = eq.exponent_sum();
  if (total % 2 != 0) {
    throw GhnError(GhnFailure::HalfIntegralWeight, 1,
                   "odd exponent sum gives half-integral weight for " + eq.to_string());
  }
  ModFormMeta meta;
  meta.weight = total / 2;
  meta.level = eq.level();
  for (const auto& [delta, r] : eq.exponents()) {
    for (const auto& [p, e] : factorize(delta)) {
      auto& slot = meta.seed.prime_exponents[p];
      slot += static_cast<std::int64_t>(e) * r;
      if (slot == 0) meta.seed.prime_exponents.erase(p);
    }
  }
  return meta;
}

std::optional<EtaQuotient> raise_level(const EtaQuotient& eq) {
  for (std::int64_t t : {1, 2, 3, 4, 6, 8, 12, 24}) {
    auto raised = eq.with_level(eq.level() * t);
    try {
      ghn_validate(raised);
      return raised;
    } catch (const GhnError& e) {
      if (e.kind() != GhnFailure::SecondCongruence) return std::nullopt;
    }
  }
  return std::nullopt;
}

mpq_class sturm_bound_exact(std::int64_t weight, std::int64_t level) {
  if (weight < 0 || level < 1) throw std::invalid_argument("sturm bound needs k >= 0, N >= 1");
  mpq_class b(mpz_class(std::to_string(weight)) * mpz_class(std::to_string(level)), 12);
  for (const auto& [p, e] : factorize(level)) {
    b *= mpq_class(static_cast<long>(p + 1), static_cast<unsigned long>(p));
  }
  b.canonicalize();
  return b;
}

std::int64_t sturm_bound(std::int64_t weight, std::int64_t level) {
  const mpq_class b = sturm_bound_exact(weight, level);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return fl.get_si();
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (n < 0 && a < 0) result = -result;
  int twos = 0;
  while ((m & 1U) == 0) {
    m >>= 1U;
    ++twos;
  }
  if (twos > 0) {
    if (a % 2 == 0) return 0;
    const auto a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a / m) for odd m.
  std::uint64_t x = static_cast<std::uint64_t>(((a % static_cast<__int128>(m)) + m) % m);
  while (x != 0) {
    while ((x & 1U) == 0) {
      x >>= 1U;
      const auto r = m & 7U;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if ((x & 3U) == 3 && (m & 3U) == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

int character_value(const ModFormMeta& meta, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("character evaluated at 0");
  int v = kronecker_symbol(meta.weight % 2 == 0 ? 1 : -1, d);
  for (const auto& [p, e] : meta.seed.prime_exponents) {
    const int s = kronecker_symbol(p, d);
    if (s == 0) return 0;
    if (e % 2 != 0) v *= s;
  }
  return v;
}

EtaExpansion eta_expansion(const EtaQuotient& eq, Exponent precision, Ring ring) {
  return {eq.lead24(), expand_product(eq.product_spec(), precision, ring)};
}

TruncSeries hecke_tp(const TruncSeries& f, std::int64_t p, std::int64_t weight, int chi_p) {
  if (!is_prime(p)) throw std::invalid_argument("hecke_tp requires a prime, got " + std::to_string(p));
  if (weight < 1) throw std::invalid_argument("hecke_tp requires weight >= 1");
  if (chi_p < -1 || chi_p > 1) throw std::invalid_argument("character value must be -1, 0 or 1");
  const Exponent prec = f.precision() / p;
  mpz_class w;
  mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(weight - 1));
  w *= chi_p;
  return detail::with_ops(f.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto block = Ops::block(f);
    const Exponent v = f.valuation();
    auto a = [&](Exponent n) {
      return (n < v) ? ops.zero() : block[static_cast<std::size_t>(n - v)];
    };
    std::vector<typename Ops::T> out(static_cast<std::size_t>(prec), ops.zero());
    for (Exponent n = 0; n < prec; ++n) out[static_cast<std::size_t>(n)] = a(p * n);
    const auto wr = ops.from_int(w);
    if (!Ops::is_zero(wr)) {
      for (Exponent n = 0; n < prec; n += p) {
        ops.addmul(out[static_cast<std::size_t>(n)], wr, a(n / p));
      }
    }
    return ops.make(std::move(out), 0, prec);
  });
}

TruncSeries hecke_up(const TruncSeries& f, std::int64_t p) {
  return extract_progression(f, p, 0);
}

VerificationReport sturm_compare(const TruncSeries& f, const TruncSeries& g,
                                 std::int64_t weight, std::int64_t level, std::int64_t p) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!is_prime(p)) throw std::invalid_argument("sturm_compare requires a prime modulus");
  if (f.ring() != g.ring()) throw RingMismatch("sturm_compare operands differ in ring");
  if (!f.ring().exact() && f.ring().modulus() % static_cast<std::uint64_t>(p) != 0) {
    throw RingMismatch("cannot compare " + f.ring().to_string() + " series mod " +
                       std::to_string(p));
  }
  VerificationReport rep;
  rep.label = "sturm k=" + std::to_string(weight) + " N=" + std::to_string(level) +
              " mod " + std::to_string(p);
  rep.assumptions.push_back("both series are q-expansions of forms in M_" +
                            std::to_string(weight) + "(Gamma0(" + std::to_string(level) +
                            "), chi)");
  const auto bound = sturm_bound(weight, level);
  rep.detail = "sturm bound " + std::to_string(bound);
  if (f.precision() <= bound || g.precision() <= bound) {
    rep.status = Status::Insufficient;
    rep.detail += "; series known below q^" +
                  std::to_string(std::min(f.precision(), g.precision()));
    return rep;
  }
  const auto diff = reduce_mod(sub(truncate(f, bound + 1), truncate(g, bound + 1)),
                               static_cast<std::uint64_t>(p));
  for (Exponent n = diff.valuation(); n <= bound; ++n) {
    const auto r = diff.residue(n);
    if (r != 0) rep.add_counterexample(n, mpz_class(static_cast<unsigned long>(r)));
  }
  rep.checked_through = bound;
  rep.settle();
  rep.duration_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace regulus
