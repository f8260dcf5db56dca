#include <fstream>
#include <sstream>

#include <json.hpp>

#include "keller/error.hpp"
#include "keller/harness.hpp"

namespace keller {

namespace {

using json = nlohmann::json;

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

json to_json(const GeneratorSpec& s) {
  return {{"family", std::string(to_string(s.family))}, {"seed", s.seed},       {"n", s.n},
          {"degree_bound", s.degree_bound},             {"factors", s.factors}, {"r", s.r}};
}

GeneratorSpec spec_from_json(const json& j) {
  GeneratorSpec s;
  s.family = parse_family(j.at("family").get<std::string>());
  s.seed = j.at("seed").get<std::uint64_t>();
  s.n = j.at("n").get<std::size_t>();
  s.degree_bound = j.at("degree_bound").get<unsigned>();
  s.factors = j.at("factors").get<unsigned>();
  s.r = j.at("r").get<std::size_t>();
  return s;
}

json record_json(const ScanRecord& r) {
  json j;
  j["kind"] = "record";
  j["schema_version"] = kReportSchemaVersion;
  j["index"] = r.index;
  j["id"] = r.id;
  j["seed"] = r.seed;
  j["control"] = r.control;
  j["provenance"] = r.provenance ? to_json(*r.provenance) : json(nullptr);
  j["map"] = r.map;
  j["n"] = r.n;
  j["degrees"] = r.degrees;
  j["keller"] = r.keller;
  j["status"] = r.status;
  j["error"] = r.error;
  j["D"] = opt(r.D);
  j["d"] = r.d;
  j["tower"] = r.tower;
  j["formanek_ok"] = opt(r.formanek_ok);
  j["formanek_witness"] = opt(r.formanek_witness);
  j["invertible"] = opt(r.invertible);
  if (r.certificate)
    j["certificate"] = {{"rule", r.certificate->rule},
                        {"verified", r.certificate->verified},
                        {"evidence", r.certificate->evidence}};
  else
    j["certificate"] = nullptr;
  j["degree_conjecture"] = opt(r.degree_conjecture);
  j["gcd_conjecture"] = opt(r.gcd_conjecture);
  j["corank"] = opt(r.corank);
  j["timings_ms"] = r.timings_ms;
  return j;
}

ScanRecord record_from_json(const json& j) {
  ScanRecord r;
  r.index = j.at("index").get<std::size_t>();
  r.id = j.at("id").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.control = j.at("control").get<bool>();
  if (!j.at("provenance").is_null()) r.provenance = spec_from_json(j.at("provenance"));
  r.map = j.at("map").get<std::vector<std::string>>();
  r.n = j.at("n").get<std::size_t>();
  r.degrees = j.at("degrees").get<std::vector<long>>();
  r.keller = j.at("keller").get<bool>();
  r.status = j.at("status").get<std::string>();
  r.error = j.at("error").get<std::string>();
  r.D = get_opt<std::size_t>(j, "D");
  r.d = j.at("d").get<std::vector<std::size_t>>();
  r.tower = j.at("tower").get<std::vector<std::size_t>>();
  r.formanek_ok = get_opt<bool>(j, "formanek_ok");
  r.formanek_witness = get_opt<bool>(j, "formanek_witness");
  r.invertible = get_opt<bool>(j, "invertible");
  if (const auto& c = j.at("certificate"); !c.is_null())
    r.certificate = CertificateSummary{c.at("rule").get<std::string>(), c.at("verified").get<bool>(),
                                       c.at("evidence").get<std::map<std::string, std::string>>()};
  r.degree_conjecture = get_opt<std::string>(j, "degree_conjecture");
  r.gcd_conjecture = get_opt<std::string>(j, "gcd_conjecture");
  r.corank = get_opt<std::size_t>(j, "corank");
  r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return r;
}

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

}  // namespace

std::string format_record(const ScanRecord& record) { return record_json(record).dump(); }

void write_report(std::ostream& os, const ScanReport& report) {
  for (const auto& r : report.records) os << format_record(r) << '\n';
  json s = {{"kind", "summary"}, {"schema_version", kReportSchemaVersion}, {"counts", report.summary}};
  os << s.dump() << '\n';
  if (report.abort) {
    json a = {{"kind", "abort"},
              {"schema_version", kReportSchemaVersion},
              {"index", report.abort->index},
              {"reason", report.abort->reason},
              {"verdict", "COUNTEREXAMPLE-CANDIDATE"}};
    os << a.dump() << '\n';
  }
}

void write_report(const std::string& path, const ScanReport& report) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write report '" + path + "'");
  write_report(out, report);
}

std::string format_report(const ScanReport& report) {
  std::ostringstream ss;
  write_report(ss, report);
  return ss.str();
}

ScanReport read_report(std::istream& is) {
  ScanReport report;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& what) {
      throw InputError("report line " + std::to_string(lineno) + ": " + what);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      fail(std::string("malformed JSON: ") + e.what());
    }
    try {
      if (!j.is_object()) fail("expected an object");
      if (!j.contains("schema_version")) fail("missing schema_version");
      int version = j.at("schema_version").get<int>();
      if (version != kReportSchemaVersion)
        fail("schema_version " + std::to_string(version) + ", expected " + std::to_string(kReportSchemaVersion));
      auto kind = j.at("kind").get<std::string>();
      if (kind == "record") {
        report.records.push_back(record_from_json(j));
      } else if (kind == "summary") {
        report.summary = j.at("counts").get<std::map<std::string, std::size_t>>();
      } else if (kind == "abort") {
        report.abort = ScanAbort{j.at("index").get<std::size_t>(), j.at("reason").get<std::string>()};
      } else {
        fail("unknown record kind '" + kind + "'");
      }
    } catch (const json::exception& e) {
      fail(e.what());
    } catch (const InputError& e) {
      std::string what = e.what();
      if (what.rfind("report line", 0) == 0) throw;
      fail(what);
    }
  }
  return report;
}

ScanReport read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read report '" + path + "'");
  return read_report(in);
}

std::uint64_t report_hash_text(std::string_view text) {
  std::uint64_t h = kFnvOffset;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw InputError("report line " + std::to_string(lineno) + ": malformed JSON: " + e.what());
    }
    if (j.is_object()) j.erase("timings_ms");
    h = fnv1a(h, j.dump());
    h = fnv1a(h, "\n");
  }
  return h;
}

std::uint64_t report_hash(const ScanReport& report) { return report_hash_text(format_report(report)); }

}  // namespace keller
