#include "regulus/json_io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace regulus {

using nlohmann::json;

void to_json(json& j, const VerificationReport& r) {
  json ces = json::array();
  for (const auto& c : r.counterexamples) ces.push_back({{"n", c.n}, {"value", c.value.get_str()}});
  j = json{{"label", r.label},
           {"status", to_string(r.status)},
           {"tier", to_string(r.tier)},
           {"checked_through", r.checked_through},
           {"counterexamples", ces},
           {"counterexample_count", r.counterexample_count},
           {"assumptions", r.assumptions},
           {"detail", r.detail},
           {"duration_ms", r.duration_ms}};
}

void to_json(json& j, const CongruenceClaim& c) {
  j = json{{"ell", c.ell}, {"A", c.A}, {"B", c.B}, {"M", c.M},
           {"label", c.label}, {"tier", to_string(c.tier)}};
  if (c.exclude) j["exclude"] = {{"mod", c.exclude->mod}, {"residue", c.exclude->residue}};
  if (!c.assumptions.empty()) j["assumptions"] = c.assumptions;
}

void from_json(const json& j, CongruenceClaim& c) {
  c = CongruenceClaim{};
  j.at("ell").get_to(c.ell);
  j.at("A").get_to(c.A);
  j.at("B").get_to(c.B);
  j.at("M").get_to(c.M);
  if (j.contains("label")) {
    j.at("label").get_to(c.label);
  } else {
    c.label = "b" + std::to_string(c.ell) + "(" + std::to_string(c.A) + "n+" +
              std::to_string(c.B) + ") = 0 mod " + std::to_string(c.M);
  }
  if (j.contains("tier")) {
    const auto t = j.at("tier").get<std::string>();
    if (t == "core") {
      c.tier = Tier::Core;
    } else if (t == "conjecture") {
      c.tier = Tier::Conjecture;
    } else {
      throw std::invalid_argument("unknown tier '" + t + "'");
    }
  }
  if (j.contains("exclude") && !j.at("exclude").is_null()) {
    Exclusion e;
    j.at("exclude").at("mod").get_to(e.mod);
    j.at("exclude").at("residue").get_to(e.residue);
    c.exclude = e;
  }
  if (j.contains("assumptions")) j.at("assumptions").get_to(c.assumptions);
  c.validate();
}

void to_json(json& j, const ZeroProgression& z) {
  j = json{{"type", "zero_progression"}, {"A", z.A}, {"B", z.B},
           {"evidence_count", z.evidence_count}, {"status", to_string(z.status)}};
}

void to_json(json& j, const SimilarityCandidate& s) {
  j = json{{"type", "similarity"}, {"ell", s.ell}, {"A", s.A}, {"B", s.B},
           {"c", s.c}, {"j", s.j}, {"k", s.k}, {"m", s.m},
           {"verified_through", s.verified_through}, {"status", to_string(s.status)}};
}

json suite_to_json(const SuiteResult& result) {
  const auto s = result.summary();
  return json{{"suite", to_string(result.suite)},
              {"n", result.n},
              {"checks", result.reports},
              {"summary",
               {{"pass", s.pass},
                {"fail", s.fail},
                {"insufficient", s.insufficient},
                {"conjecture_fail", s.conjecture_fail}}}};
}

std::vector<CongruenceClaim> parse_claims(const std::string& text) {
  const auto j = json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("claim file must hold a JSON array");
  return j.get<std::vector<CongruenceClaim>>();
}

std::vector<CongruenceClaim> read_claims(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open claim file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_claims(ss.str());
}

void write_file_atomic(const std::filesystem::path& file, const std::string& contents) {
  std::random_device rd;
  auto tmp = file;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace regulus
