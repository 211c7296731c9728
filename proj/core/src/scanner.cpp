#include "regulus/scanner.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "regulus/parallel.hpp"
#include "regulus/series_cache.hpp"

namespace regulus {

std::string to_string(CandidateStatus s) {
  return s == CandidateStatus::Candidate ? "candidate" : "refuted";
}

void ScanOptions::validate() const {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  if (m < 2) throw std::invalid_argument("modulus must be >= 2");
  if (a_min < 1 || a_max < a_min) throw std::invalid_argument("need 1 <= amin <= amax");
  if (n < 1) throw std::invalid_argument("precision must be positive");
  if (k_max < 1) throw std::invalid_argument("kmax must be >= 1");
  if (j_max < 0) throw std::invalid_argument("jmax must be >= 0");
  if (min_evidence < 1) throw std::invalid_argument("evidence threshold must be >= 1");
  if (exclude && exclude->mod < 1) throw std::invalid_argument("exclusion modulus must be positive");
}

namespace {

struct Cell {
  std::int64_t A;
  std::int64_t B;
};

std::shared_ptr<const TruncSeries> base_series(const ScanOptions& o, Exponent precision) {
  const Ring ring = Ring::modulo(static_cast<std::uint64_t>(o.m));
  if (o.cache) return o.cache->b_ell(o.ell, precision, ring);
  return std::make_shared<const TruncSeries>(b_ell_series(o.ell, precision, ring));
}

// Number of indices n with A n + B < precision.
Exponent progression_length(Exponent precision, std::int64_t A, std::int64_t B) {
  return precision > B ? (precision - B + A - 1) / A : 0;
}

// Moduli with enough evidence at the thinnest offset B = A - 1.
std::vector<Cell> cells_with_evidence(const ScanOptions& o, std::vector<std::string>& notes) {
  std::vector<Cell> cells;
  for (std::int64_t A = o.a_min; A <= o.a_max; ++A) {
    const auto len = progression_length(o.n, A, A - 1);
    if (len < o.min_evidence) {
      notes.push_back("A=" + std::to_string(A) + " skipped: only " + std::to_string(len) +
                      " indices below the evidence threshold " +
                      std::to_string(o.min_evidence));
      continue;
    }
    for (std::int64_t B = 0; B < A; ++B) cells.push_back({A, B});
  }
  return cells;
}

bool skipped(const ScanOptions& o, std::int64_t A, Exponent idx) {
  if (o.exclude && o.exclude->skips(idx)) return true;
  return o.exclude_multiples_of_a && idx % A == 0;
}

// Count of checked indices, or nullopt when some index is nonzero.
std::optional<Exponent> vanishing_count(const ScanOptions& o, const TruncSeries& base,
                                        std::int64_t A, std::int64_t B) {
  const auto len = progression_length(base.precision(), A, B);
  Exponent checked = 0;
  for (Exponent idx = 0; idx < len; ++idx) {
    if (skipped(o, A, idx)) continue;
    if (base.residue(A * idx + B) != 0) return std::nullopt;
    ++checked;
  }
  return checked;
}

// Whether the progression agrees with c q^j B(q^k) on its first len terms.
bool similar(const TruncSeries& base, std::int64_t A, std::int64_t B, std::uint64_t c,
             std::int64_t j, std::int64_t k, std::uint64_t m, Exponent len) {
  for (Exponent idx = 0; idx < len; ++idx) {
    std::uint64_t expect = 0;
    if (idx >= j && (idx - j) % k == 0) {
      expect = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(c) * base.residue((idx - j) / k) % m);
    }
    if (base.residue(A * idx + B) != expect) return false;
  }
  return true;
}

}  // namespace

ZeroScanResult scan_zero_progressions(const ScanOptions& options) {
  options.validate();
  ZeroScanResult result;
  const auto cells = cells_with_evidence(options, result.notes);
  if (cells.empty()) return result;
  const auto base = base_series(options, options.n);
  std::vector<std::optional<ZeroProgression>> hits(cells.size());
  parallel_for(cells.size(), options.threads, [&](std::size_t i) {
    const auto [A, B] = cells[i];
    auto count = vanishing_count(options, *base, A, B);
    if (count && *count >= options.min_evidence) {
      hits[i] = ZeroProgression{A, B, *count, CandidateStatus::Candidate};
    }
  });
  for (auto& h : hits) {
    if (h) result.found.push_back(*h);
  }
  if (options.reverify && !result.found.empty()) {
    const auto wide = base_series(options, 2 * options.n);
    parallel_for(result.found.size(), options.threads, [&](std::size_t i) {
      auto& z = result.found[i];
      if (!vanishing_count(options, *wide, z.A, z.B)) z.status = CandidateStatus::Refuted;
    });
  }
  std::sort(result.found.begin(), result.found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.A, x.B) < std::tie(y.A, y.B);
  });
  return result;
}

SimilarityScanResult scan_self_similarity(const ScanOptions& options) {
  options.validate();
  SimilarityScanResult result;
  const auto cells = cells_with_evidence(options, result.notes);
  if (cells.empty()) return result;
  const auto m = static_cast<std::uint64_t>(options.m);
  const auto base = base_series(options, options.n);
  std::vector<std::vector<SimilarityCandidate>> per_cell(cells.size());
  parallel_for(cells.size(), options.threads, [&](std::size_t i) {
    const auto [A, B] = cells[i];
    const auto len = progression_length(base->precision(), A, B);
    for (std::int64_t k = 1; k <= options.k_max; ++k) {
      for (std::int64_t j = 0; j <= options.j_max && j < len; ++j) {
        const std::uint64_t c = base->residue(A * j + B);
        if (c == 0 || std::gcd(c, m) != 1) continue;
        if (A == 1 && B == 0 && k == 1 && j == 0 && c == 1) continue;
        if (!similar(*base, A, B, c, j, k, m, len)) continue;
        per_cell[i].push_back({options.ell, A, B, static_cast<std::int64_t>(c), j, k,
                               options.m, len, CandidateStatus::Candidate});
      }
    }
  });
  for (auto& v : per_cell) result.found.insert(result.found.end(), v.begin(), v.end());
  if (options.reverify && !result.found.empty()) {
    const auto wide = base_series(options, 2 * options.n);
    parallel_for(result.found.size(), options.threads, [&](std::size_t i) {
      auto& s = result.found[i];
      const auto len = progression_length(wide->precision(), s.A, s.B);
      if (!similar(*wide, s.A, s.B, static_cast<std::uint64_t>(s.c), s.j, s.k, m, len)) {
        s.status = CandidateStatus::Refuted;
      }
    });
  }
  std::sort(result.found.begin(), result.found.end(), [](const auto& x, const auto& y) {
    return std::tie(x.A, x.B, x.k, x.j, x.c) < std::tie(y.A, y.B, y.k, y.j, y.c);
  });
  return result;
}

}  // namespace regulus
