#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "keller/error.hpp"
#include "keller/extension.hpp"
#include "keller/harness.hpp"

namespace keller::cli {

namespace {

using json = nlohmann::json;

struct Common {
  std::string input;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "text";
};

struct Output {
  int code = 0;
  std::string text;
  json record;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  ss << in.rdbuf();
  return ss.str();
}

PolyMap load_map(const Common& c) { return parse_map(read_input(c.input)); }

std::vector<std::string> coords_text(const PolyMap& f) {
  std::vector<std::string> v;
  for (const auto& p : f.coords()) v.push_back(to_string(p));
  return v;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? std::string(sep) : "") + parts[i];
  return s;
}

Output cmd_parse(const Common& c) {
  auto f = load_map(c);
  return {0, format_map(f), {{"map", coords_text(f)}, {"n", f.n()}, {"degrees", f.degrees()}}};
}

Output cmd_jacobian(const Common& c) {
  auto f = load_map(c);
  auto j = jacobian_det(f);
  return {0, to_string(j) + "\n", {{"jacobian", to_string(j)}, {"keller", is_keller(f)}}};
}

Output cmd_keller(const Common& c) {
  bool k = is_keller(load_map(c));
  return {k ? 0 : 1, k ? "true\n" : "false\n", {{"keller", k}}};
}

Output cmd_invert(const Common& c) {
  auto f = load_map(c);
  auto g = invert(f);
  if (!g) return {1, "not an automorphism\n", {{"invertible", false}, {"inverse", nullptr}}};
  return {0, format_map(*g), {{"invertible", true}, {"inverse", coords_text(*g)}}};
}

Output cmd_degree(const Common& c) {
  auto f = load_map(c);
  auto r = degree_conjecture_check(f, seed_for_degree(c.seed));
  std::string verdict = !r.in_hypothesis ? "out_of_hypothesis" : r.holds ? "holds" : "fails";
  std::ostringstream t;
  t << "D = " << r.D << "\n"
    << "d = " << r.d << ", bound d^(n-1) = " << r.bound << "\n"
    << "degree_conjecture: " << verdict << "\n";
  return {0, t.str(), {{"D", r.D}, {"d", r.d}, {"bound", r.bound}, {"holds", r.holds}, {"degree_conjecture", verdict}}};
}

Output cmd_minpoly(const Common& c, std::size_t coord) {
  auto f = load_map(c);
  if (coord > f.n()) throw InputError("--coord " + std::to_string(coord) + " out of range 1.." + std::to_string(f.n()));
  std::ostringstream t;
  json d = json::array();
  json symbolic = json::array();
  for (std::size_t i = 0; i < f.n(); ++i) {
    if (coord != 0 && coord != i + 1) continue;
    auto mp = coordinate_minpoly(f, i, seed_for_minpoly(c.seed, i));
    t << "d" << i + 1 << " = " << mp.degree;
    if (mp.symbolic) {
      auto s = to_string(*mp.symbolic, symbolic_minpoly_names(f.n()));
      t << "  " << s;
      symbolic.push_back(s);
    } else {
      symbolic.push_back(nullptr);
    }
    t << "\n";
    d.push_back(mp.degree);
  }
  return {0, t.str(), {{"d", d}, {"symbolic", symbolic}}};
}

Output cmd_formanek(const Common& c) {
  auto f = load_map(c);
  auto r = verify_formanek(f, seed_for_formanek(c.seed, f.n()));
  std::ostringstream t;
  t << (r.holds ? "true" : "false") << "\n" << "degree " << r.degree << "\n";
  json rec = {{"formanek_ok", r.holds}, {"degree", r.degree}, {"witness", nullptr}};
  if (r.witness) {
    auto names = formanek_witness_names(f.n());
    auto num = to_string(r.witness->numerator, names);
    auto den = to_string(r.witness->denominator, names);
    t << "x" << f.n() << " = (" << num << ") / (" << den << ")\n";
    rec["witness"] = {{"numerator", num}, {"denominator", den}};
  }
  return {r.holds ? 0 : 1, t.str(), rec};
}

Output cmd_classify(const Common& c) {
  auto f = load_map(c);
  auto cert = classify(f, {c.seed, {}, {}});
  std::ostringstream t;
  t << to_string(cert.rule) << "\n" << "verified_by_inversion: " << (cert.verified_by_inversion ? "true" : "false") << "\n";
  for (const auto& [k, v] : cert.evidence) t << k << ": " << v << "\n";
  json rec = {{"rule", std::string(to_string(cert.rule))},
              {"verified", cert.verified_by_inversion},
              {"evidence", cert.evidence}};
  return {cert.rule == Rule::NONE ? 1 : 0, t.str(), rec};
}

Output cmd_cmw(const Common& c) {
  auto f = load_map(c);
  auto r = cmw_decompose_2d(f);
  std::vector<std::string> cs;
  for (const auto& q : r.c) cs.push_back(to_string(q));
  std::ostringstream t;
  t << "g: (" << join(coords_text(r.g), ", ") << ")\n" << "c: " << join(cs, ", ") << "\n";
  return {0, t.str(), {{"g", coords_text(r.g)}, {"c", cs}}};
}

Output cmd_generate(const Common& c, const std::string& family, std::size_t n, unsigned degree, unsigned factors,
                    std::size_t r) {
  GeneratorSpec spec{parse_family(family), c.seed, n, degree, factors, r};
  auto f = generate_family(spec);
  return {0, format_map(f), {{"map", coords_text(f)}, {"n", f.n()}, {"degrees", f.degrees()}}};
}

std::string hex(std::uint64_t h) {
  std::ostringstream s;
  s << "0x" << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

Output cmd_scan(const Common& c, bool seed_given, unsigned threads) {
  auto config = load_scan_config(c.input);
  if (seed_given) config.seed = c.seed;
  if (!c.out.empty()) config.out = c.out;
  if (threads) config.threads = threads;
  auto report = run_scan(config);
  auto text = format_report(report);
  if (!config.out.empty()) {
    std::ofstream o(config.out);
    if (!o) throw InputError("cannot write report '" + config.out + "'");
    o << text;
  }
  Output out;
  out.code = report.abort ? 1 : 0;
  if (c.format == "records") {
    out.text = config.out.empty() ? text : "";
    return out;
  }
  std::ostringstream t;
  for (const auto& [k, v] : report.summary) t << k << ": " << v << "\n";
  if (report.abort)
    t << "COUNTEREXAMPLE-CANDIDATE at map " << report.abort->index << " (" << report.records.back().id
      << "): " << report.abort->reason << "\n";
  t << "hash: " << hex(report_hash_text(text)) << "\n";
  out.text = t.str();
  return out;
}

void add_common(CLI::App* sub, Common& c, const char* input_help) {
  sub->add_option("input", c.input, input_help)->required();
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--out", c.out, "Write output to this path");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "records"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial maps, Keller criteria and extension-degree measurements", "kellertool"};
  app.require_subcommand(1);

  Common c;
  std::size_t coord = 0;
  std::string family = "triangular";
  std::size_t n = 2, r = 1;
  unsigned degree = 3, factors = 2, threads = 0;
  std::map<std::string, std::function<Output()>> handlers;

  auto single = [&](const char* name, const char* help, std::function<Output()> fn) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, c, "Map file ('-' for stdin)");
    handlers[name] = std::move(fn);
    return sub;
  };
  single("parse", "Parse a map file and print it canonically", [&] { return cmd_parse(c); });
  single("jacobian", "Print the Jacobian determinant", [&] { return cmd_jacobian(c); });
  single("keller", "Is the Jacobian a nonzero constant (exit 1 if not)", [&] { return cmd_keller(c); });
  single("invert", "Print the inverse map (exit 1 if none)", [&] { return cmd_invert(c); });
  single("degree", "Extension degree D and the degree bound", [&] { return cmd_degree(c); });
  single("minpoly", "Degrees of the minimal polynomials of the coordinates", [&] { return cmd_minpoly(c, coord); })
      ->add_option("--coord", coord, "Only coordinate i (1-based)");
  single("formanek", "Q(F, x1..x(n-1)) = Q(x) (exit 1 if not)", [&] { return cmd_formanek(c); });
  single("classify", "First criterion certifying the map (exit 1 if none)", [&] { return cmd_classify(c); });
  single("cmw", "Decompose a 2-variable map with an affine first coordinate", [&] { return cmd_cmw(c); });

  auto* gen = app.add_subcommand("generate", "Generate a map of a family");
  gen->add_option("--family", family, "triangular, affine, composed, druzkowski, lang_maslamani, essen_form");
  gen->add_option("--n", n, "Number of variables");
  gen->add_option("--degree", degree, "Degree bound");
  gen->add_option("--factors", factors, "Factors (composed)");
  gen->add_option("--r", r, "Linear coordinates (essen_form)");
  gen->add_option("--seed", c.seed, "Random seed");
  gen->add_option("--out", c.out, "Write the map file to this path");
  gen->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  handlers["generate"] = [&] { return cmd_generate(c, family, n, degree, factors, r); };

  auto* scan = app.add_subcommand("scan", "Run a conjecture scan from a config file");
  add_common(scan, c, "Scan config file");
  auto* seed_opt = scan->get_option("--seed");
  scan->add_option("--threads", threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Output o = name == "scan" ? cmd_scan(c, seed_opt->count() > 0, threads) : handlers.at(name)();
    std::string body = c.format == "records" && name != "scan" ? o.record.dump() + "\n" : o.text;
    if (!c.out.empty() && name != "scan") {
      std::ofstream f(c.out);
      if (!f) throw InputError("cannot write '" + c.out + "'");
      f << body;
    } else {
      out << body;
    }
    return o.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace keller::cli
