#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "regulus/eta.hpp"
#include "regulus/json_io.hpp"
#include "regulus/parallel.hpp"
#include "regulus/product_spec.hpp"
#include "regulus/scanner.hpp"
#include "regulus/series_cache.hpp"
#include "regulus/suite.hpp"

namespace regulus::cli {

namespace {

using nlohmann::json;

struct ExpandArgs {
  std::string spec;
  std::string eta;
  Exponent n = 20;
  std::uint64_t mod = 0;
  std::string format = "text";
  std::string out;
};

struct VerifyArgs {
  std::string suite = "paper-core";
  std::string claims;
  Exponent n = 20000;
  std::string out;
  unsigned threads = 1;
  std::string cache_dir;
};

struct ScanArgs {
  std::int64_t ell = 9;
  std::int64_t mod = 3;
  std::int64_t amin = 1;
  std::int64_t amax = 8;
  Exponent n = 20000;
  bool similar = false;
  std::int64_t kmax = 8;
  std::int64_t jmax = 3;
  Exponent min_evidence = kDefaultMinEvidence;
  bool exclude_multiples = false;
  bool no_reverify = false;
  std::string out;
  std::string summary;
  bool resume = false;
  unsigned threads = 1;
  std::string cache_dir;
};

std::unique_ptr<SeriesCache> make_cache(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty()) {
    if (const char* env = std::getenv("REGULUS_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::make_unique<SeriesCache>();
  return std::make_unique<SeriesCache>(std::filesystem::path(dir));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

int cmd_expand(const ExpandArgs& a, std::ostream& out, std::ostream& err) {
  const Ring ring = a.mod == 0 ? Ring::integers() : Ring::modulo(a.mod);
  std::optional<std::int64_t> lead24;
  TruncSeries series;
  try {
    if (!a.eta.empty()) {
      const auto e = eta_expansion(EtaQuotient::parse(a.eta), a.n, ring);
      lead24 = e.lead24;
      series = e.series;
    } else {
      series = expand_product(ProductSpec::parse(a.spec), a.n, ring);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::ostringstream os;
  const auto coeffs = series.coefficients();
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& c : coeffs) {
      if (c.fits_slong_p()) {
        arr.push_back(c.get_si());
      } else {
        arr.push_back(c.get_str());
      }
    }
    if (lead24) {
      os << json{{"lead24", *lead24}, {"coefficients", arr}}.dump() << "\n";
    } else {
      os << arr.dump() << "\n";
    }
  } else {
    if (lead24) os << "lead24 " << *lead24 << "\n";
    for (const auto& c : coeffs) os << c.get_str() << "\n";
  }
  emit(os.str(), a.out, out);
  return kExitOk;
}

int verify_exit_code(const SuiteSummary& s) {
  if (s.fail > 0) return kExitCoreFail;
  if (s.insufficient > 0) return kExitUsage;
  if (s.conjecture_fail > 0) return kExitConjecture;
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.n < 1) {
    err << "--n must be positive\n";
    return kExitUsage;
  }
  auto cache = make_cache(a.cache_dir);
  SuiteResult result;
  std::string suite_name;
  if (!a.claims.empty()) {
    std::vector<CongruenceClaim> claims;
    try {
      claims = read_claims(a.claims);
    } catch (const std::exception& e) {
      err << "bad claim file: " << e.what() << "\n";
      return kExitUsage;
    }
    result.n = a.n;
    result.reports.resize(claims.size());
    parallel_for(claims.size(), a.threads, [&](std::size_t i) {
      result.reports[i] = verify_claim(claims[i], a.n, cache.get());
    });
    suite_name = "claims";
  } else {
    const auto suite = parse_suite(a.suite);
    if (!suite) {
      err << "unknown suite '" << a.suite << "'\n";
      return kExitUsage;
    }
    result = run_suite({*suite, a.n, a.threads, cache.get()});
    suite_name = to_string(*suite);
  }
  for (const auto& r : result.reports) {
    out << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "INSUFFICIENT ")
        << "[" << to_string(r.tier) << "] " << r.label;
    if (r.checked_through >= 0) out << " (through " << r.checked_through << ")";
    if (!r.detail.empty()) out << " -- " << r.detail;
    out << "\n";
  }
  const auto s = result.summary();
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.insufficient
      << " insufficient, " << s.conjecture_fail << " conjecture-tier fail\n";
  if (!a.out.empty()) {
    auto j = suite_to_json(result);
    j["suite"] = suite_name;
    write_file_atomic(a.out, j.dump(2) + "\n");
  }
  return verify_exit_code(s);
}

// Lines of an interrupted stream that are kept on resume, and the moduli A
// already finished.
struct ResumeState {
  std::vector<std::string> lines;
  std::set<std::int64_t> done;
  std::size_t found = 0;
  std::size_t refuted = 0;
  std::size_t notes = 0;
};

ResumeState read_stream(const std::string& path) {
  ResumeState st;
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> pending;
  while (std::getline(in, line)) {
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      break;
    }
    const auto type = j.value("type", "");
    if (type == "summary") continue;
    pending.push_back(line);
    if (type == "cell_done") {
      st.done.insert(j.at("A").get<std::int64_t>());
      st.lines.insert(st.lines.end(), pending.begin(), pending.end());
      pending.clear();
    } else if (type == "zero_progression" || type == "similarity") {
      ++st.found;
      if (j.value("status", "") == "refuted") ++st.refuted;
    } else if (type == "note") {
      ++st.notes;
    }
  }
  // Hits of an unfinished modulus are recomputed.
  for (const auto& p : pending) {
    const auto j = json::parse(p);
    const auto type = j.value("type", "");
    if (type == "zero_progression" || type == "similarity") {
      --st.found;
      if (j.value("status", "") == "refuted") --st.refuted;
    } else if (type == "note") {
      --st.notes;
    }
  }
  return st;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  ScanOptions opt;
  opt.ell = a.ell;
  opt.m = a.mod;
  opt.n = a.n;
  opt.k_max = a.kmax;
  opt.j_max = a.jmax;
  opt.min_evidence = a.min_evidence;
  opt.exclude_multiples_of_a = a.exclude_multiples;
  opt.reverify = !a.no_reverify;
  opt.threads = a.threads;
  opt.a_min = a.amin;
  opt.a_max = a.amax;
  try {
    opt.validate();
  } catch (const std::invalid_argument& e) {
    err << "bad scan range: " << e.what() << "\n";
    return kExitUsage;
  }
  if (a.resume && a.out.empty()) {
    err << "--resume needs --out\n";
    return kExitUsage;
  }
  auto cache = make_cache(a.cache_dir);
  opt.cache = cache.get();

  ResumeState state;
  std::ofstream file;
  std::ostream* stream = &out;
  if (!a.out.empty()) {
    if (a.resume && std::filesystem::exists(a.out)) {
      state = read_stream(a.out);
      std::string kept;
      for (const auto& l : state.lines) kept += l + "\n";
      write_file_atomic(a.out, kept);
      file.open(a.out, std::ios::app);
    } else {
      file.open(a.out, std::ios::trunc);
    }
    if (!file) {
      err << "cannot open " << a.out << "\n";
      return kExitInternal;
    }
    stream = &file;
  }

  std::size_t found = state.found;
  std::size_t refuted = state.refuted;
  std::size_t notes = state.notes;
  for (std::int64_t A = a.amin; A <= a.amax; ++A) {
    if (state.done.count(A) != 0) continue;
    ScanOptions cell = opt;
    cell.a_min = cell.a_max = A;
    std::vector<json> lines;
    std::vector<std::string> cell_notes;
    if (a.similar) {
      const auto r = scan_self_similarity(cell);
      for (const auto& s : r.found) lines.emplace_back(s);
      cell_notes = r.notes;
    } else {
      const auto r = scan_zero_progressions(cell);
      for (const auto& z : r.found) lines.emplace_back(z);
      cell_notes = r.notes;
    }
    for (const auto& n : cell_notes) {
      *stream << json{{"type", "note"}, {"A", A}, {"text", n}}.dump() << "\n";
      ++notes;
    }
    for (const auto& l : lines) {
      *stream << l.dump() << "\n";
      ++found;
      if (l.at("status") == "refuted") ++refuted;
    }
    *stream << json{{"type", "cell_done"}, {"A", A}}.dump() << "\n";
    stream->flush();
  }
  json summary{{"type", "summary"},
               {"mode", a.similar ? "similarity" : "zero_progression"},
               {"ell", a.ell},
               {"m", a.mod},
               {"amin", a.amin},
               {"amax", a.amax},
               {"n", a.n},
               {"found", found},
               {"candidates", found - refuted},
               {"refuted", refuted},
               {"notes", notes}};
  if (a.summary.empty()) {
    *stream << summary.dump() << "\n";
  } else {
    write_file_atomic(a.summary, summary.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"regulus: q-series expansion and congruence verification for regular partitions"};
  app.require_subcommand(1);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Expand a Pochhammer product or eta quotient");
  expand->add_option("spec", ex.spec, "Product such as \"(q;q)^-1 (q^9;q^9)\"");
  expand->add_option("--eta", ex.eta, "Eta quotient such as \"27: 9^1 * 1^63\"");
  expand->add_option("--n", ex.n, "Number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--mod", ex.mod, "Reduce coefficients mod m")->check(CLI::PositiveNumber);
  expand->add_option("--format", ex.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  expand->add_option("--out", ex.out, "Write to file instead of stdout");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run a verification suite or a claim file");
  verify->add_option("--suite", ve.suite, "paper-core, paper-conjectures or all");
  verify->add_option("--claims", ve.claims, "JSON claim file to verify instead of a suite");
  verify->add_option("--n", ve.n, "Largest exponent checked");
  verify->add_option("--out", ve.out, "JSON report path");
  verify->add_option("--threads", ve.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--cache-dir", ve.cache_dir, "Series cache directory");

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Search for zero progressions or self-similarities");
  scan->add_option("--ell", sc.ell, "Regularity l")->required();
  scan->add_option("--mod", sc.mod, "Modulus m")->required();
  scan->add_option("--amin", sc.amin, "Smallest progression modulus");
  scan->add_option("--amax", sc.amax, "Largest progression modulus");
  scan->add_option("--n", sc.n, "Series precision");
  scan->add_flag("--similar", sc.similar, "Search self-similarities instead of zero progressions");
  scan->add_option("--kmax", sc.kmax, "Largest dilation k");
  scan->add_option("--jmax", sc.jmax, "Largest shift j");
  scan->add_option("--min-evidence", sc.min_evidence, "Minimum checked coefficients");
  scan->add_flag("--exclude-multiples", sc.exclude_multiples,
                 "Skip progression indices divisible by A");
  scan->add_flag("--no-reverify", sc.no_reverify, "Skip the double-precision re-check");
  scan->add_option("--out", sc.out, "JSONL output path");
  scan->add_option("--summary", sc.summary, "Write the summary document here");
  scan->add_flag("--resume", sc.resume, "Continue an interrupted --out stream");
  scan->add_option("--threads", sc.threads, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--cache-dir", sc.cache_dir, "Series cache directory");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (expand->parsed()) return cmd_expand(ex, out, err);
    if (verify->parsed()) return cmd_verify(ve, out, err);
    if (scan->parsed()) return cmd_scan(sc, out, err);
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace regulus::cli
