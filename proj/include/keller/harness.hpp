#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "keller/criteria.hpp"
#include "keller/endo.hpp"
#include "keller/groebner.hpp"

namespace keller {

inline constexpr int kReportSchemaVersion = 1;

enum class Check { degree_conjecture, gcd_conjecture, formanek, minpoly, classify, invert, tower };

std::string_view to_string(Check c);
/// Throws InputError for unknown names.
Check parse_check(std::string_view name);
std::set<Check> all_checks();

struct FamilyCount {
  Family family = Family::triangular;
  std::size_t count = 0;

  friend bool operator==(const FamilyCount&, const FamilyCount&) = default;
};

/// Everything that determines a scan except timings.
///
/// Text form, one `key = value` per line, `#` comments:
///   families = triangular:10, composed:5
///   n = 2..3
///   degree_bound = 3
///   factors = 2
///   r = 1
///   seed = 42
///   checks = degree_conjecture, formanek, classify   (or: all)
///   controls = true
///   threads = 4
///   out = report.jsonl
///   max_pairs = 200000   (also max_terms, max_basis)
struct ScanConfig {
  std::vector<FamilyCount> families;
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  unsigned degree_bound = 3;
  unsigned factors = 2;
  std::size_t r = 1;
  std::uint64_t seed = 0;
  std::set<Check> checks = all_checks();
  /// Append the non-Keller control (x1^2, x2^2).
  bool controls = false;
  std::string out;
  unsigned threads = 1;
  GroebnerLimits limits;
};

/// Throws InputError naming the offending line.
ScanConfig parse_scan_config(std::string_view text);
ScanConfig load_scan_config(const std::string& path);

/// Seeds of the single-map measurements, all derived from one map seed s:
/// D from derive_seed(s, 0), d_i from derive_seed(s, 1 + i), the Formanek
/// check from derive_seed(s, 1 + n), tower degrees from derive_seed(s,
/// 2 + n + i); classify takes s itself.
std::uint64_t seed_for_degree(std::uint64_t s);
std::uint64_t seed_for_minpoly(std::uint64_t s, std::size_t i);
std::uint64_t seed_for_formanek(std::uint64_t s, std::size_t n);
std::uint64_t seed_for_tower(std::uint64_t s, std::size_t n, std::size_t i);

struct CertificateSummary {
  std::string rule;
  bool verified = false;
  std::map<std::string, std::string> evidence;

  friend bool operator==(const CertificateSummary&, const CertificateSummary&) = default;
};

struct ScanRecord {
  std::size_t index = 0;
  std::string id;
  /// Seed of this map's generator and measurements.
  std::uint64_t seed = 0;
  bool control = false;
  std::optional<GeneratorSpec> provenance;
  /// Coordinates as printed by to_string; empty when generation failed.
  std::vector<std::string> map;
  std::size_t n = 0;
  std::vector<long> degrees;
  bool keller = false;
  /// "ok", "BUDGET_EXCEEDED" or "ERROR".
  std::string status = "ok";
  std::string error;

  std::optional<std::size_t> D;
  std::vector<std::size_t> d;
  std::vector<std::size_t> tower;
  std::optional<bool> formanek_ok;
  std::optional<bool> formanek_witness;
  std::optional<bool> invertible;
  std::optional<CertificateSummary> certificate;
  /// "holds", "fails" or "out_of_hypothesis".
  std::optional<std::string> degree_conjecture;
  /// "confirmed", "not_applicable" or "counterexample_candidate".
  std::optional<std::string> gcd_conjecture;
  std::optional<std::size_t> corank;

  /// Milliseconds per check; excluded from comparisons and hashes.
  std::map<std::string, double> timings_ms;

  /// Compares everything but timings.
  friend bool operator==(const ScanRecord& a, const ScanRecord& b);
};

struct ScanAbort {
  std::size_t index = 0;
  std::string reason;

  friend bool operator==(const ScanAbort&, const ScanAbort&) = default;
};

struct ScanReport {
  std::vector<ScanRecord> records;
  /// Counts keyed "keller", "rule.<RULE>", "degree_conjecture.<verdict>",
  /// ...; only nonzero entries.
  std::map<std::string, std::size_t> summary;
  /// Set when a Keller map failed inversion, the degree conjecture or the
  /// gcd conjecture; `records` ends with the offending map.
  std::optional<ScanAbort> abort;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Generates the corpus and runs the configured checks on every map. Map k
/// gets seed derive_seed(config.seed, k). Records come out in index order
/// whatever the thread count.
ScanReport run_scan(const ScanConfig& config);

/// Runs the checks on one map; `record` carries the identity fields.
void analyze_map(const PolyMap& f, const std::set<Check>& checks, const GroebnerLimits& limits, ScanRecord& record);

/// Line-delimited JSON with sorted keys: one object per record, then a
/// summary object and, if any, an abort object. Every line carries
/// schema_version.
void write_report(std::ostream& os, const ScanReport& report);
void write_report(const std::string& path, const ScanReport& report);
std::string format_report(const ScanReport& report);

/// Throws InputError on schema mismatch or a malformed line (with its
/// number).
ScanReport read_report(std::istream& is);
ScanReport read_report(const std::string& path);

/// One JSON object for a record, keys sorted.
std::string format_record(const ScanRecord& record);

/// FNV-1a 64 over the report text with every timings field removed.
std::uint64_t report_hash(const ScanReport& report);
/// The same hash computed from report text (line by line, timings dropped).
std::uint64_t report_hash_text(std::string_view text);

namespace cli {

/// Entry point of kellertool. Exit status 0 on success, 1 on an
/// analysis-level negative or failed computation, 2 on input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace keller
