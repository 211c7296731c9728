#include "regulus/report.hpp"

namespace regulus {

void VerificationReport::add_counterexample(Exponent n, mpz_class value) {
  ++counterexample_count;
  if (counterexamples.size() < kMaxStoredCounterexamples) {
    counterexamples.push_back({n, std::move(value)});
  }
}

void VerificationReport::settle() {
  status = counterexamples.empty() ? Status::Pass : Status::Fail;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Insufficient:
      return "insufficient";
  }
  return "unknown";
}

std::string to_string(Tier t) { return t == Tier::Core ? "core" : "conjecture"; }

}  // namespace regulus
