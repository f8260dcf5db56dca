#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "keller/error.hpp"
#include "keller/extension.hpp"
#include "keller/harness.hpp"

namespace keller {

namespace {

constexpr std::string_view kCheckNames[] = {"degree_conjecture", "gcd_conjecture", "formanek", "minpoly",
                                            "classify",          "invert",         "tower"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

[[noreturn]] void config_error(std::size_t line, const std::string& what) {
  throw InputError("config line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view v, std::size_t line) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    config_error(line, "expected a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view v, std::size_t line) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  config_error(line, "expected true or false, got '" + std::string(v) + "'");
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

PolyMap control_map() {
  return PolyMap({parse_polynomial("x1^2", 2), parse_polynomial("x2^2", 2)});
}

struct WorkItem {
  std::string id;
  bool control = false;
  std::optional<GeneratorSpec> spec;
};

std::vector<WorkItem> plan(const ScanConfig& config) {
  std::vector<WorkItem> items;
  const std::size_t span = config.n_max - config.n_min + 1;
  for (const auto& fc : config.families)
    for (std::size_t j = 0; j < fc.count; ++j) {
      GeneratorSpec spec;
      spec.family = fc.family;
      spec.seed = derive_seed(config.seed, items.size());
      spec.n = config.n_min + j % span;
      spec.degree_bound = config.degree_bound;
      spec.factors = config.factors;
      spec.r = std::min(config.r, spec.n);
      std::ostringstream id;
      id << to_string(fc.family) << '-' << j;
      items.push_back({id.str(), false, spec});
    }
  if (config.controls) items.push_back({"control-0", true, std::nullopt});
  return items;
}

ScanRecord process(const WorkItem& item, std::size_t index, const ScanConfig& config, std::optional<ScanAbort>& abort) {
  ScanRecord rec;
  rec.index = index;
  rec.id = item.id;
  rec.control = item.control;
  rec.provenance = item.spec;
  rec.seed = item.spec ? item.spec->seed : derive_seed(config.seed, index);
  try {
    Stopwatch gen;
    PolyMap f = item.spec ? generate_family(*item.spec) : control_map();
    rec.timings_ms["generate"] = gen.ms();
    analyze_map(f, config.checks, config.limits, rec);
  } catch (const BudgetExceededError& e) {
    rec.status = "BUDGET_EXCEEDED";
    rec.error = e.what();
  } catch (const InternalInconsistencyError& e) {
    rec.status = "ERROR";
    rec.error = e.what();
    abort = ScanAbort{index, std::string("internal inconsistency: ") + e.what()};
  } catch (const Error& e) {
    rec.status = "ERROR";
    rec.error = e.what();
  }
  if (!abort && rec.keller) {
    if (rec.invertible == false)
      abort = ScanAbort{index, "Keller map is not invertible"};
    else if (rec.degree_conjecture == "fails")
      abort = ScanAbort{index, "Keller map violates D <= d^(n-1)"};
    else if (rec.gcd_conjecture == "counterexample_candidate")
      abort = ScanAbort{index, "pairwise coprime degrees without an inverse"};
  }
  return rec;
}

void count(std::map<std::string, std::size_t>& summary, const ScanRecord& r) {
  ++summary["maps"];
  ++summary[r.keller ? "keller" : "non_keller"];
  if (r.status != "ok") ++summary["status." + r.status];
  if (r.certificate) ++summary["rule." + r.certificate->rule];
  if (r.degree_conjecture) ++summary["degree_conjecture." + *r.degree_conjecture];
  if (r.gcd_conjecture) ++summary["gcd_conjecture." + *r.gcd_conjecture];
  if (r.formanek_ok) ++summary[*r.formanek_ok ? "formanek.true" : "formanek.false"];
  if (r.invertible) ++summary[*r.invertible ? "invertible.true" : "invertible.false"];
}

}  // namespace

std::string_view to_string(Check c) { return kCheckNames[static_cast<std::size_t>(c)]; }

Check parse_check(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kCheckNames); ++i)
    if (kCheckNames[i] == name) return static_cast<Check>(i);
  throw InputError("unknown check '" + std::string(name) + "'");
}

std::set<Check> all_checks() {
  std::set<Check> s;
  for (std::size_t i = 0; i < std::size(kCheckNames); ++i) s.insert(static_cast<Check>(i));
  return s;
}

ScanConfig parse_scan_config(std::string_view text) {
  ScanConfig c;
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) config_error(lineno, "expected key = value");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    try {
      if (key == "families") {
        c.families.clear();
        if (value.empty()) continue;
        for (auto part : split(value, ',')) {
          auto colon = part.find(':');
          if (colon == std::string_view::npos) config_error(lineno, "expected family:count, got '" + std::string(part) + "'");
          c.families.push_back({parse_family(trim(part.substr(0, colon))),
                                parse_number<std::size_t>(trim(part.substr(colon + 1)), lineno)});
        }
      } else if (key == "n") {
        auto dots = value.find("..");
        if (dots == std::string_view::npos) {
          c.n_min = c.n_max = parse_number<std::size_t>(value, lineno);
        } else {
          c.n_min = parse_number<std::size_t>(trim(value.substr(0, dots)), lineno);
          c.n_max = parse_number<std::size_t>(trim(value.substr(dots + 2)), lineno);
        }
        if (c.n_min < 1 || c.n_max < c.n_min) config_error(lineno, "bad n range");
      } else if (key == "degree_bound") {
        c.degree_bound = parse_number<unsigned>(value, lineno);
      } else if (key == "factors") {
        c.factors = parse_number<unsigned>(value, lineno);
      } else if (key == "r") {
        c.r = parse_number<std::size_t>(value, lineno);
      } else if (key == "seed") {
        c.seed = parse_number<std::uint64_t>(value, lineno);
      } else if (key == "checks") {
        c.checks.clear();
        if (value == "all") {
          c.checks = all_checks();
        } else if (!value.empty()) {
          for (auto part : split(value, ',')) c.checks.insert(parse_check(part));
        }
      } else if (key == "controls") {
        c.controls = parse_bool(value, lineno);
      } else if (key == "threads") {
        c.threads = std::max(1u, parse_number<unsigned>(value, lineno));
      } else if (key == "out") {
        c.out = std::string(value);
      } else if (key == "max_pairs") {
        c.limits.max_pairs = parse_number<std::size_t>(value, lineno);
      } else if (key == "max_terms") {
        c.limits.max_terms = parse_number<std::size_t>(value, lineno);
      } else if (key == "max_basis") {
        c.limits.max_basis = parse_number<std::size_t>(value, lineno);
      } else {
        config_error(lineno, "unknown key '" + std::string(key) + "'");
      }
    } catch (const InputError& e) {
      std::string what = e.what();
      if (what.rfind("config line", 0) == 0) throw;
      config_error(lineno, what);
    }
  }
  return c;
}

ScanConfig load_scan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scan_config(ss.str());
}

std::uint64_t seed_for_degree(std::uint64_t s) { return derive_seed(s, 0); }
std::uint64_t seed_for_minpoly(std::uint64_t s, std::size_t i) { return derive_seed(s, 1 + i); }
std::uint64_t seed_for_formanek(std::uint64_t s, std::size_t n) { return derive_seed(s, 1 + n); }
std::uint64_t seed_for_tower(std::uint64_t s, std::size_t n, std::size_t i) { return derive_seed(s, 2 + n + i); }

bool operator==(const ScanRecord& a, const ScanRecord& b) {
  auto key = [](const ScanRecord& r) {
    return std::tie(r.index, r.id, r.seed, r.control, r.provenance, r.map, r.n, r.degrees, r.keller, r.status, r.error,
                    r.D, r.d, r.tower, r.formanek_ok, r.formanek_witness, r.invertible, r.certificate,
                    r.degree_conjecture, r.gcd_conjecture, r.corank);
  };
  return key(a) == key(b);
}

void analyze_map(const PolyMap& f, const std::set<Check>& checks, const GroebnerLimits& limits, ScanRecord& rec) {
  const std::size_t n = f.n();
  const std::uint64_t s = rec.seed;
  auto has = [&](Check c) { return checks.count(c) > 0; };
  auto timed = [&](const char* name, auto&& fn) {
    Stopwatch w;
    fn();
    rec.timings_ms[name] = w.ms();
  };

  rec.n = n;
  rec.degrees = f.degrees();
  rec.map.clear();
  for (const auto& c : f.coords()) rec.map.push_back(to_string(c));
  rec.keller = is_keller(f);
  if (f.provenance() && f.provenance()->family == Family::druzkowski)
    if (auto a = druzkowski_matrix(f)) rec.corank = druzkowski_corank(*a);
  const bool dominant = rec.keller || is_dominant(f);

  if (has(Check::invert)) timed("invert", [&] { rec.invertible = invert(f, limits).has_value(); });

  if (dominant && has(Check::degree_conjecture)) {
    timed("degree_conjecture", [&] {
      auto r = degree_conjecture_check(f, seed_for_degree(s), limits);
      rec.D = r.D;
      rec.degree_conjecture = !r.in_hypothesis ? "out_of_hypothesis" : r.holds ? "holds" : "fails";
    });
  } else if (has(Check::degree_conjecture)) {
    rec.degree_conjecture = "out_of_hypothesis";
  }
  if (dominant && !rec.D && (has(Check::minpoly) || has(Check::tower)))
    timed("degree", [&] { rec.D = extension_degree(f, seed_for_degree(s), limits).value; });

  if (dominant && has(Check::minpoly))
    timed("minpoly", [&] {
      rec.d.clear();
      for (std::size_t i = 0; i < n; ++i) rec.d.push_back(coordinate_minpoly(f, i, seed_for_minpoly(s, i), limits).degree);
    });

  if (dominant && has(Check::tower))
    timed("tower", [&] {
      rec.tower.clear();
      for (std::size_t i = 0; i < n; ++i) rec.tower.push_back(tower_degree(f, i, seed_for_tower(s, n, i), limits).value);
    });

  if (has(Check::formanek)) {
    if (dominant) {
      timed("formanek", [&] {
        auto r = verify_formanek(f, seed_for_formanek(s, n), limits);
        rec.formanek_ok = r.holds;
        rec.formanek_witness = r.witness.has_value();
      });
    } else {
      rec.formanek_ok = false;
      rec.formanek_witness = false;
    }
  }

  if (rec.keller && has(Check::gcd_conjecture))
    timed("gcd_conjecture", [&] {
      auto r = gcd_conjecture_check(f, limits);
      rec.gcd_conjecture = !r.applicable ? "not_applicable"
                           : r.counterexample_candidate ? "counterexample_candidate"
                                                        : "confirmed";
    });

  if (rec.keller && has(Check::classify))
    timed("classify", [&] {
      auto c = classify(f, {s, limits, {}});
      rec.certificate = CertificateSummary{std::string(to_string(c.rule)), c.verified_by_inversion, c.evidence};
    });
}

ScanReport run_scan(const ScanConfig& config) {
  const auto items = plan(config);
  std::vector<ScanRecord> done(items.size());
  std::vector<std::optional<ScanAbort>> aborts(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_abort{items.size()};

  auto worker = [&] {
    while (true) {
      std::size_t k = next.fetch_add(1);
      if (k >= items.size() || k > first_abort.load()) return;
      done[k] = process(items[k], k, config, aborts[k]);
      if (aborts[k]) {
        std::size_t cur = first_abort.load();
        while (k < cur && !first_abort.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(items.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  for (std::size_t k = 0; k < items.size(); ++k) {
    count(report.summary, done[k]);
    report.records.push_back(std::move(done[k]));
    if (aborts[k]) {
      report.abort = aborts[k];
      break;
    }
  }
  return report;
}

}  // namespace keller
