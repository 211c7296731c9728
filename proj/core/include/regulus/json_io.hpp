#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "regulus/regular_partitions.hpp"
#include "regulus/report.hpp"
#include "regulus/scanner.hpp"
#include "regulus/suite.hpp"

namespace regulus {

// Report schema (one object per check):
//   {"label", "status": "pass"|"fail"|"insufficient", "tier": "core"|"conjecture",
//    "checked_through", "counterexamples": [{"n", "value"}], "counterexample_count",
//    "assumptions": [..], "detail", "duration_ms"}
// Values are decimal strings so arbitrary-size integers survive.
void to_json(nlohmann::json& j, const VerificationReport& r);

// Claim schema: {"ell", "A", "B", "M", "label", "tier"?, "exclude"?: {"mod", "residue"}}
void to_json(nlohmann::json& j, const CongruenceClaim& c);
void from_json(const nlohmann::json& j, CongruenceClaim& c);

void to_json(nlohmann::json& j, const ZeroProgression& z);
void to_json(nlohmann::json& j, const SimilarityCandidate& s);

nlohmann::json suite_to_json(const SuiteResult& result);

std::vector<CongruenceClaim> read_claims(const std::filesystem::path& file);
std::vector<CongruenceClaim> parse_claims(const std::string& text);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void write_file_atomic(const std::filesystem::path& file, const std::string& contents);

}  // namespace regulus
