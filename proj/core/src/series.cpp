#include "regulus/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "series_kernels.hpp"

namespace regulus {

using detail::ExactOps;
using detail::ModOps;
using detail::with_ops;

Ring Ring::modulo(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  Ring r;
  r.modulus_ = m;
  return r;
}

std::string Ring::to_string() const {
  return exact() ? "ZZ" : "ZZ/" + std::to_string(modulus_);
}

namespace {

void require_same_ring(const TruncSeries& f, const TruncSeries& g) {
  if (f.ring() != g.ring()) {
    throw RingMismatch("ring mismatch: " + f.ring().to_string() + " vs " +
                       g.ring().to_string());
  }
}

// Coefficient of q^n from a typed block starting at valuation v.
template <class Ops>
typename Ops::T at(const Ops& ops, std::span<const typename Ops::T> block,
                   Exponent v, Exponent n) {
  if (n < v || n - v >= static_cast<Exponent>(block.size())) return ops.zero();
  return block[static_cast<std::size_t>(n - v)];
}

}  // namespace

TruncSeries::TruncSeries(Ring ring, std::variant<ExactBlock, ResidueBlock> block,
                         Exponent valuation, Exponent precision)
    : ring_(ring),
      block_(std::move(block)),
      valuation_(valuation),
      precision_(precision) {
  if (valuation < 0 || precision < valuation) {
    throw std::invalid_argument("series requires 0 <= valuation <= precision");
  }
  normalize();
}

void TruncSeries::normalize() {
  std::visit(
      [this](auto& v) {
        if (static_cast<Exponent>(v.size()) != precision_ - valuation_) {
          throw std::invalid_argument("series block length must equal precision - valuation");
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead > 0) {
          v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lead));
          valuation_ += static_cast<Exponent>(lead);
        }
      },
      block_);
}

TruncSeries TruncSeries::zero(Ring ring, Exponent precision) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  if (ring.exact()) return TruncSeries(ring, ExactBlock{}, precision, precision);
  return TruncSeries(ring, ResidueBlock{}, precision, precision);
}

TruncSeries TruncSeries::one(Ring ring, Exponent precision) {
  return monomial(ring, 0, 1, precision);
}

TruncSeries TruncSeries::monomial(Ring ring, Exponent n, const mpz_class& c,
                                  Exponent precision) {
  if (n < 0) throw std::invalid_argument("negative exponent");
  if (n >= precision) return zero(ring, precision);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n + 1));
  coeffs.back() = c;
  return from_coeffs(ring, coeffs, precision);
}

TruncSeries TruncSeries::from_coeffs(Ring ring, const std::vector<mpz_class>& coeffs,
                                     Exponent precision) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  if (static_cast<Exponent>(coeffs.size()) > precision) {
    throw std::invalid_argument("more coefficients than precision");
  }
  const auto len = static_cast<std::size_t>(precision);
  return with_ops(ring, [&](const auto& ops) {
    std::vector<typename std::decay_t<decltype(ops)>::T> block(len, ops.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) block[i] = ops.from_int(coeffs[i]);
    return ops.make(std::move(block), 0, precision);
  });
}

TruncSeries TruncSeries::from_coeffs(Ring ring, std::initializer_list<long> coeffs,
                                     Exponent precision) {
  std::vector<mpz_class> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return from_coeffs(ring, v, precision);
}

TruncSeries TruncSeries::from_exact_block(ExactBlock block, Exponent valuation,
                                          Exponent precision) {
  return TruncSeries(Ring::integers(), std::move(block), valuation, precision);
}

TruncSeries TruncSeries::from_residue_block(std::uint64_t modulus, ResidueBlock block,
                                            Exponent valuation, Exponent precision) {
  for (auto x : block) {
    if (x >= modulus) throw std::invalid_argument("residue out of range");
  }
  return TruncSeries(Ring::modulo(modulus), std::move(block), valuation, precision);
}

mpz_class TruncSeries::coeff(Exponent n) const {
  if (n < 0 || n >= precision_) {
    throw PrecisionError("coefficient of q^" + std::to_string(n) +
                         " requested from series known below q^" +
                         std::to_string(precision_));
  }
  return with_ops(ring_, [&](const auto& ops) {
    return ops.to_int(at(ops, ops.block(*this), valuation_, n));
  });
}

std::uint64_t TruncSeries::residue(Exponent n) const {
  if (ring_.exact()) throw RingMismatch("residue() on an integer series");
  if (n < 0 || n >= precision_) {
    throw PrecisionError("coefficient of q^" + std::to_string(n) +
                         " requested from series known below q^" +
                         std::to_string(precision_));
  }
  return at(ModOps{ring_.modulus()}, residue_block(), valuation_, n);
}

bool TruncSeries::is_zero_at(Exponent n) const {
  if (n < 0 || n >= precision_) {
    throw PrecisionError("coefficient of q^" + std::to_string(n) + " is unknown");
  }
  return with_ops(ring_, [&](const auto& ops) {
    return ops.is_zero(at(ops, ops.block(*this), valuation_, n));
  });
}

std::vector<mpz_class> TruncSeries::coefficients() const {
  std::vector<mpz_class> out(static_cast<std::size_t>(precision_));
  with_ops(ring_, [&](const auto& ops) {
    auto b = ops.block(*this);
    for (std::size_t i = 0; i < b.size(); ++i) {
      out[static_cast<std::size_t>(valuation_) + i] = ops.to_int(b[i]);
    }
    return 0;
  });
  return out;
}

std::span<const mpz_class> TruncSeries::exact_block() const {
  return std::get<ExactBlock>(block_);
}

std::span<const std::uint64_t> TruncSeries::residue_block() const {
  return std::get<ResidueBlock>(block_);
}

bool operator==(const TruncSeries& f, const TruncSeries& g) {
  return f.ring_ == g.ring_ && f.precision_ == g.precision_ &&
         f.valuation_ == g.valuation_ && f.block_ == g.block_;
}

namespace {

template <class Ops>
TruncSeries combine(const Ops& ops, const TruncSeries& f, const TruncSeries& g,
                    bool subtract) {
  const Exponent prec = std::min(f.precision(), g.precision());
  const Exponent val = std::min({f.valuation(), g.valuation(), prec});
  const auto fb = Ops::block(f);
  const auto gb = Ops::block(g);
  std::vector<typename Ops::T> out(static_cast<std::size_t>(prec - val), ops.zero());
  for (Exponent n = val; n < prec; ++n) {
    auto& slot = out[static_cast<std::size_t>(n - val)];
    slot = at(ops, fb, f.valuation(), n);
    if (subtract) {
      ops.sub(slot, at(ops, gb, g.valuation(), n));
    } else {
      ops.add(slot, at(ops, gb, g.valuation(), n));
    }
  }
  return ops.make(std::move(out), val, prec);
}

}  // namespace

TruncSeries add(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g);
  return with_ops(f.ring(), [&](const auto& ops) { return combine(ops, f, g, false); });
}

TruncSeries sub(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g);
  return with_ops(f.ring(), [&](const auto& ops) { return combine(ops, f, g, true); });
}

TruncSeries negate(const TruncSeries& f) {
  return with_ops(f.ring(), [&](const auto& ops) {
    auto b = ops.block(f);
    std::vector<typename std::decay_t<decltype(ops)>::T> out;
    out.reserve(b.size());
    for (const auto& x : b) out.push_back(ops.neg(x));
    return ops.make(std::move(out), f.valuation(), f.precision());
  });
}

TruncSeries scale(const TruncSeries& f, const mpz_class& c) {
  return with_ops(f.ring(), [&](const auto& ops) {
    const auto k = ops.from_int(c);
    auto b = ops.block(f);
    std::vector<typename std::decay_t<decltype(ops)>::T> out;
    out.reserve(b.size());
    for (const auto& x : b) out.push_back(ops.mul(x, k));
    return ops.make(std::move(out), f.valuation(), f.precision());
  });
}

TruncSeries mul(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g);
  const Exponent prec = std::min(f.precision() + g.valuation(),
                                 g.precision() + f.valuation());
  const Exponent val = std::min(f.valuation() + g.valuation(), prec);
  return with_ops(f.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    const auto len = static_cast<std::size_t>(prec - val);
    std::vector<typename Ops::T> out(len, ops.zero());
    auto fb = Ops::block(f);
    auto gb = Ops::block(g);
    auto fnz = detail::nonzeros(fb, len);
    auto gnz = detail::nonzeros(gb, len);
    if (fnz.size() <= gnz.size()) {
      detail::mul_accumulate(ops, gb, fnz, out);
    } else {
      detail::mul_accumulate(ops, fb, gnz, out);
    }
    return ops.make(std::move(out), val, prec);
  });
}

TruncSeries pow(const TruncSeries& f, unsigned e) {
  TruncSeries result = TruncSeries::one(f.ring(), f.precision());
  TruncSeries base = f;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

TruncSeries divide(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g);
  if (g.known_zero()) throw NonUnitConstant("division by a series that is zero to its precision");
  if (g.valuation() > 0) throw NonUnitConstant("divisor has zero constant term");
  const Exponent prec = std::min(f.precision(), g.precision() + f.valuation());
  const Exponent val = std::min(f.valuation(), prec);
  return with_ops(f.ring(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    auto gb = Ops::block(g);
    auto inv = ops.inverse(gb[0]);
    if (!inv) throw NonUnitConstant("constant term of divisor is not a unit");
    const auto len = static_cast<std::size_t>(prec - val);
    auto tail = detail::nonzeros(gb, len);
    if (!tail.empty() && tail.front().first == 0) tail.erase(tail.begin());
    auto fb = Ops::block(f);
    auto out = detail::divide_dense(ops, fb.first(std::min(fb.size(), len)), tail, *inv, len);
    return ops.make(std::move(out), val, prec);
  });
}

TruncSeries invert(const TruncSeries& f) {
  return divide(TruncSeries::one(f.ring(), f.precision()), f);
}

TruncSeries shift(const TruncSeries& f, Exponent k) {
  if (k < 0) throw std::invalid_argument("shift requires k >= 0");
  return with_ops(f.ring(), [&](const auto& ops) {
    auto b = ops.block(f);
    return ops.make({b.begin(), b.end()}, f.valuation() + k, f.precision() + k);
  });
}

TruncSeries truncate(const TruncSeries& f, Exponent precision) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  const Exponent prec = std::min(precision, f.precision());
  const Exponent val = std::min(f.valuation(), prec);
  return with_ops(f.ring(), [&](const auto& ops) {
    auto b = ops.block(f);
    return ops.make({b.begin(), b.begin() + (prec - val)}, val, prec);
  });
}

TruncSeries substitute_power(const TruncSeries& f, Exponent k) {
  if (k <= 0) throw std::invalid_argument("substitute_power requires k >= 1");
  const Exponent prec = f.precision() * k;
  const Exponent val = f.valuation() * k;
  return with_ops(f.ring(), [&](const auto& ops) {
    auto b = ops.block(f);
    std::vector<typename std::decay_t<decltype(ops)>::T> out(
        static_cast<std::size_t>(prec - val), ops.zero());
    for (std::size_t i = 0; i < b.size(); ++i) out[i * static_cast<std::size_t>(k)] = b[i];
    return ops.make(std::move(out), val, prec);
  });
}

TruncSeries extract_progression(const TruncSeries& f, Exponent A, Exponent B) {
  if (A <= 0) throw std::invalid_argument("progression modulus must be positive");
  if (B < 0 || B >= A) throw std::invalid_argument("progression offset must satisfy 0 <= B < A");
  const Exponent prec = f.precision() > B ? (f.precision() - B + A - 1) / A : 0;
  return with_ops(f.ring(), [&](const auto& ops) {
    auto b = ops.block(f);
    std::vector<typename std::decay_t<decltype(ops)>::T> out(
        static_cast<std::size_t>(prec), ops.zero());
    for (Exponent n = 0; n < prec; ++n) {
      out[static_cast<std::size_t>(n)] = at(ops, b, f.valuation(), A * n + B);
    }
    return ops.make(std::move(out), 0, prec);
  });
}

TruncSeries reduce_mod(const TruncSeries& f, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  const ModOps target{m};
  std::vector<std::uint64_t> out;
  if (f.ring().exact()) {
    auto b = f.exact_block();
    out.reserve(b.size());
    for (const auto& x : b) out.push_back(target.from_int(x));
  } else {
    if (f.ring().modulus() % m != 0) {
      throw RingMismatch("cannot reduce " + f.ring().to_string() + " to ZZ/" +
                         std::to_string(m));
    }
    auto b = f.residue_block();
    out.reserve(b.size());
    for (auto x : b) out.push_back(x % m);
  }
  return TruncSeries::from_residue_block(m, std::move(out), f.valuation(), f.precision());
}

TruncSeries euler_factor(Exponent a, Exponent b, Exponent precision, Ring ring) {
  if (a < 1 || b < 1) throw std::invalid_argument("euler_factor requires a, b >= 1");
  if (precision < 0) throw std::invalid_argument("negative precision");
  return with_ops(ring, [&](const auto& ops) {
    std::vector<typename std::decay_t<decltype(ops)>::T> c(
        static_cast<std::size_t>(precision), ops.zero());
    if (precision > 0) c[0] = ops.one();
    for (Exponent d = a; d < precision; d += b) {
      detail::mul_binomial(ops, c, static_cast<std::size_t>(d));
    }
    return ops.make(std::move(c), 0, precision);
  });
}

TruncSeries pentagonal_factor(Exponent c, Exponent precision, Ring ring) {
  if (c < 1) throw std::invalid_argument("pentagonal_factor requires c >= 1");
  if (precision < 0) throw std::invalid_argument("negative precision");
  return with_ops(ring, [&](const auto& ops) {
    std::vector<typename std::decay_t<decltype(ops)>::T> out(
        static_cast<std::size_t>(precision), ops.zero());
    if (precision > 0) out[0] = ops.one();
    for (Exponent k = 1;; ++k) {
      const Exponent e1 = c * (k * (3 * k - 1) / 2);
      if (e1 >= precision) break;
      const Exponent e2 = c * (k * (3 * k + 1) / 2);
      const auto unit = (k % 2 == 1) ? ops.neg(ops.one()) : ops.one();
      out[static_cast<std::size_t>(e1)] = unit;
      if (e2 < precision) out[static_cast<std::size_t>(e2)] = unit;
    }
    return ops.make(std::move(out), 0, precision);
  });
}

std::optional<Exponent> first_difference(const TruncSeries& f, const TruncSeries& g) {
  require_same_ring(f, g);
  const Exponent prec = std::min(f.precision(), g.precision());
  return with_ops(f.ring(), [&](const auto& ops) -> std::optional<Exponent> {
    auto fb = ops.block(f);
    auto gb = ops.block(g);
    const Exponent start = std::min(f.valuation(), g.valuation());
    for (Exponent n = start; n < prec; ++n) {
      if (!(at(ops, fb, f.valuation(), n) == at(ops, gb, g.valuation(), n))) return n;
    }
    return std::nullopt;
  });
}

bool agree_below(const TruncSeries& f, const TruncSeries& g, Exponent n) {
  if (n > f.precision() || n > g.precision()) {
    throw PrecisionError("comparison through q^" + std::to_string(n - 1) +
                         " exceeds known precision (" + std::to_string(f.precision()) +
                         ", " + std::to_string(g.precision()) + ")");
  }
  auto d = first_difference(f, g);
  return !d || *d >= n;
}

std::string to_string(const TruncSeries& f, Exponent max_terms) {
  std::ostringstream os;
  Exponent shown = 0;
  bool first = true;
  for (Exponent n = f.valuation(); n < f.precision() && shown < max_terms; ++n) {
    mpz_class c = f.coeff(n);
    if (c == 0) continue;
    ++shown;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      os << (neg ? "-" : "");
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (n == 0 || c != 1) os << c.get_str();
    if (n > 0) {
      if (c != 1) os << '*';
      os << 'q';
      if (n > 1) os << '^' << n;
    }
  }
  if (!first) os << " + ";
  os << "O(q^" << f.precision() << ")";
  if (!f.ring().exact()) os << " over " << f.ring().to_string();
  return os.str();
}

}  // namespace regulus
