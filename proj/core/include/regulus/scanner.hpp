#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regulus/regular_partitions.hpp"
#include "regulus/series.hpp"

namespace regulus {

class SeriesCache;

enum class CandidateStatus { Candidate, Refuted };

std::string to_string(CandidateStatus s);

// b_l(A n + B) = 0 mod m on every checked index.
struct ZeroProgression {
  std::int64_t A = 1;
  std::int64_t B = 0;
  Exponent evidence_count = 0;
  CandidateStatus status = CandidateStatus::Candidate;

  friend bool operator==(const ZeroProgression&, const ZeroProgression&) = default;
};

/// sum b_l(A n + B) q^n = c q^j B_l(q^k) mod m on verified_through terms.
struct SimilarityCandidate {
  std::int64_t ell = 0;
  std::int64_t A = 1;
  std::int64_t B = 0;
  std::int64_t c = 1;
  std::int64_t j = 0;
  std::int64_t k = 1;
  std::int64_t m = 2;
  Exponent verified_through = 0;
  CandidateStatus status = CandidateStatus::Candidate;

  friend bool operator==(const SimilarityCandidate&, const SimilarityCandidate&) = default;
};

inline constexpr Exponent kDefaultMinEvidence = 50;

struct ScanOptions {
  std::int64_t ell = 9;
  std::int64_t m = 3;
  // Progression moduli a_min..a_max are searched.
  std::int64_t a_min = 1;
  std::int64_t a_max = 8;
  // Series precision: coefficients below q^n are used.
  Exponent n = 20000;
  std::int64_t k_max = 8;
  std::int64_t j_max = 3;
  Exponent min_evidence = kDefaultMinEvidence;
  std::optional<Exclusion> exclude;
  // Skip progression indices divisible by A.
  bool exclude_multiples_of_a = false;
  // Re-check every hit against a fresh series of precision 2n.
  bool reverify = true;
  unsigned threads = 1;
  SeriesCache* cache = nullptr;

  void validate() const;
};

struct ZeroScanResult {
  std::vector<ZeroProgression> found;
  std::vector<std::string> notes;
};

struct SimilarityScanResult {
  std::vector<SimilarityCandidate> found;
  std::vector<std::string> notes;
};

/// Every (A, B) with a_min <= A <= a_max, B < A whose checked range vanishes
/// mod m, sorted by (A, B).  Moduli A yielding fewer than min_evidence
/// indices are skipped with a note.
ZeroScanResult scan_zero_progressions(const ScanOptions& options);

/// Self-similarities, sorted by (A, B, k, j, c).  For each shape (k, j) the
/// constant c is forced to equal the q^j coefficient of the progression and
/// must be a unit mod m.  The identity (A, B, k, j, c) = (1, 0, 1, 0, 1) is
/// not reported.
SimilarityScanResult scan_self_similarity(const ScanOptions& options);

}  // namespace regulus
