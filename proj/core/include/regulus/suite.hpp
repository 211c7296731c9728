#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regulus/report.hpp"
#include "regulus/series.hpp"

namespace regulus {

class SeriesCache;

enum class Suite { PaperCore, PaperConjectures, All };

std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite s);

struct SuiteOptions {
  Suite suite = Suite::PaperCore;
  Exponent n = 20000;
  unsigned threads = 1;
  SeriesCache* cache = nullptr;
};

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t insufficient = 0;
  std::size_t conjecture_fail = 0;
};

struct SuiteResult {
  Suite suite = Suite::PaperCore;
  Exponent n = 0;
  std::vector<VerificationReport> reports;

  SuiteSummary summary() const;
};

// Exact-integer identity checks run at min(n, this).
inline constexpr Exponent kExactCheckPrecision = 2000;

/// Runs every check of the selected suite.  Reports come back in a fixed
/// order regardless of thread count.
SuiteResult run_suite(const SuiteOptions& options);

}  // namespace regulus
