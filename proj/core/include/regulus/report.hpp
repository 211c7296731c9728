#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "regulus/series.hpp"

namespace regulus {

enum class Status { Pass, Fail, Insufficient };

// Deterministic checks gate the suite; conjecture-tier results are reported
// but only fail the extended suite.
enum class Tier { Core, Conjecture };

struct Counterexample {
  Exponent n = 0;
  // Value reduced mod the claim modulus (or the raw difference for exact
  // identity checks).
  mpz_class value;
};

/// Outcome of any verification.  Fail implies a nonempty counterexample list;
/// Pass implies an empty one.
struct VerificationReport {
  std::string label;
  Status status = Status::Pass;
  Tier tier = Tier::Core;
  Exponent checked_through = -1;
  std::vector<Counterexample> counterexamples;
  // Total number of failing indices; counterexamples holds at most a prefix.
  std::size_t counterexample_count = 0;
  std::vector<std::string> assumptions;
  std::string detail;
  double duration_ms = 0.0;

  bool passed() const noexcept { return status == Status::Pass; }
  void add_counterexample(Exponent n, mpz_class value);
  // Pass when no counterexamples were recorded, Fail otherwise.
  void settle();
};

inline constexpr std::size_t kMaxStoredCounterexamples = 32;

std::string to_string(Status s);
std::string to_string(Tier t);

}  // namespace regulus
