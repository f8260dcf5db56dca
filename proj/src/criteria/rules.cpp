#include <numeric>

#include "keller/criteria.hpp"
#include "keller/error.hpp"

namespace keller {

namespace {

constexpr std::string_view kRuleNames[] = {
    "KELLER_BIRATIONAL",  "WANG_QUADRATIC_DEGREE",      "MAGNUS_CLASSICAL_2D", "NAKAI_BABA_2D",
    "MINPOLY_QUADRATIC",  "MINPOLY_POWER",              "MINPOLY_GCD_2D",      "MINPOLY_GCD_LE2_2D",
    "MINPOLY_SYMMETRIC_PRIME_2D", "MINPOLY_GCD_N",      "DEGREE1_COMPONENT",   "FORMANEK_ADJUNCTION",
    "NONE"};

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

void require_keller(const PolyMap& f, const char* what) {
  if (!is_keller(f)) throw PreconditionError(std::string(what) + " needs a Keller map (constant nonzero Jacobian)");
}

// Lazily measured D and d_i shared by the rules of one classification.
class Context {
 public:
  Context(const PolyMap& f, const ClassifyOptions& options)
      : f_(f), options_(options), minpolys_(f.n()) {}

  const PolyMap& map() const { return f_; }
  const ClassifyOptions& options() const { return options_; }

  std::size_t D() {
    if (!D_) D_ = extension_degree(f_, derive_seed(options_.seed, 0), options_.limits).value;
    return *D_;
  }

  const CoordinateMinpoly& minpoly(std::size_t i) {
    if (!minpolys_[i]) minpolys_[i] = coordinate_minpoly(f_, i, derive_seed(options_.seed, 1 + i), options_.limits);
    return *minpolys_[i];
  }

  std::vector<std::size_t> d() {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f_.n(); ++i) out.push_back(minpoly(i).degree);
    return out;
  }

  const SubalgebraMembership& membership() {
    if (!member_) member_.emplace(f_, options_.limits);
    return *member_;
  }

 private:
  const PolyMap& f_;
  const ClassifyOptions& options_;
  std::optional<std::size_t> D_;
  std::vector<std::optional<CoordinateMinpoly>> minpolys_;
  std::optional<SubalgebraMembership> member_;
};

using Evidence = std::map<std::string, std::string>;

std::optional<Evidence> wang(Context& ctx) {
  auto l = ctx.map().degrees();
  for (auto d : l)
    if (d > 2) return std::nullopt;
  return Evidence{{"degrees", join(l)}};
}

std::optional<Evidence> magnus(Context& ctx) {
  if (ctx.map().n() != 2) return std::nullopt;
  auto l = ctx.map().degrees();
  long g = std::gcd(l[0], l[1]);
  if (g == 1) return Evidence{{"degrees", join(l)}, {"gcd", "1"}};
  for (std::size_t k = 0; k < 2; ++k)
    if (is_prime(static_cast<std::size_t>(l[k])))
      return Evidence{{"degrees", join(l)}, {"gcd", std::to_string(g)}, {"prime_degree", "F" + std::to_string(k + 1)}};
  return std::nullopt;
}

std::optional<Evidence> nakai_baba(Context& ctx) {
  if (ctx.map().n() != 2) return std::nullopt;
  auto l = ctx.map().degrees();
  long g = std::gcd(l[0], l[1]);
  if (g > 2) return std::nullopt;
  return Evidence{{"degrees", join(l)}, {"gcd", std::to_string(g)}};
}

std::optional<Evidence> degree1_component(Context& ctx) {
  const auto& f = ctx.map();
  auto l = f.degrees();
  std::size_t j = 0;
  while (j < l.size() && l[j] != 1) ++j;
  if (j == l.size()) return std::nullopt;
  Evidence e{{"degrees", join(l)}, {"affine_coordinate", "F" + std::to_string(j + 1)}};
  if (f.n() == 2) {
    PolyMap ordered = j == 0 ? f : PolyMap({f[1], f[0]});
    auto cmw = cmw_decompose_2d(ordered, ctx.options().limits);
    e["complement"] = to_string(cmw.g[1]);
    std::string cs;
    for (std::size_t i = 0; i < cmw.c.size(); ++i) cs += (i ? "," : "") + to_string(cmw.c[i]);
    e["cmw_coefficients"] = cs;
    return e;
  }
  // n >= 3: the degree bound d^(n-1) = 1 is measured, not assumed.
  auto D = ctx.D();
  if (D != 1) return std::nullopt;
  e["D"] = "1";
  e["bound"] = "1";
  return e;
}

std::optional<Evidence> keller_birational(Context& ctx) {
  if (ctx.D() != 1) return std::nullopt;
  return Evidence{{"D", "1"}};
}

std::optional<Evidence> formanek_adjunction(Context& ctx) {
  const auto& f = ctx.map();
  const std::size_t n = f.n();
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Polynomial> gens(f.coords().begin(), f.coords().end());
    gens.push_back(Polynomial::variable(n, k));
    SubalgebraMembership member(gens, ctx.options().limits);
    Evidence e{{"adjoined", "x" + std::to_string(k + 1)}};
    auto names = default_variable_names(n + 1, "y");
    bool all = true;
    for (std::size_t i = 0; i < n && all; ++i) {
      auto w = member.witness(Polynomial::variable(n, i));
      if (!w) all = false;
      else e["x" + std::to_string(i + 1)] = to_string(*w, names);
    }
    if (all) return e;
  }
  return std::nullopt;
}

std::optional<Evidence> gcd_rule(Context& ctx, Rule rule) {
  const std::size_t n = ctx.map().n();
  if ((rule == Rule::MINPOLY_GCD_N) != (n >= 3)) return std::nullopt;
  auto d = ctx.d();
  std::vector<std::size_t> gcds;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) gcds.push_back(std::gcd(d[u], d[v]));
  Evidence e{{"d", join(d)}, {"pairwise_gcds", join(gcds)}};
  if (n == 2 && d[0] != d[1])
    throw InternalInconsistencyError("Keller map in two variables with d1 = " + std::to_string(d[0]) +
                                     " != d2 = " + std::to_string(d[1]));
  bool fires = false;
  if (rule == Rule::MINPOLY_GCD_N || rule == Rule::MINPOLY_GCD_2D)
    fires = std::all_of(gcds.begin(), gcds.end(), [](std::size_t g) { return g == 1; });
  else
    fires = gcds[0] <= 2;
  if (!fires) return std::nullopt;
  // The gcd argument forces every d_i to 1.
  if (rule != Rule::MINPOLY_GCD_LE2_2D && std::any_of(d.begin(), d.end(), [](std::size_t x) { return x != 1; }))
    throw InternalInconsistencyError("pairwise coprime minimal-polynomial degrees " + join(d) + " are not all 1");
  return e;
}

std::optional<AnnihilatorInput> annihilator_from_minpoly(const Polynomial& mp, std::size_t n, std::size_t j) {
  // T at 0, t_k at 1 + k -> y_k at k.
  if (mp.degree_in(0) != 2) return std::nullopt;
  std::vector<Polynomial> images{Polynomial(n)};
  for (std::size_t k = 0; k < n; ++k) images.push_back(Polynomial::variable(n, k));
  auto c = mp.coefficients_in(0);
  return AnnihilatorInput{j, c[2].substitute(images), c[1].substitute(images), c[0].substitute(images), std::nullopt,
                          1};
}

// Square-root recovery of x_j (power = false) or of x_j^m first (power = true).
std::optional<Evidence> minpoly_recovery(Context& ctx, bool power) {
  const auto& f = ctx.map();
  const std::size_t n = f.n();
  const auto& given = ctx.options().annihilators;
  bool used_power = false;
  std::size_t recovered = 0;
  Evidence e;
  auto names = default_variable_names(n, "y");
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Recovery> r;
    std::string how;
    for (const auto& inp : given) {
      if (inp.j != j || inp.d || (inp.m > 1) != power) continue;
      r = recover_coordinate_quadratic(f, inp, ctx.options().limits);
      if (r) {
        how = "annihilator m=" + std::to_string(inp.m);
        used_power = used_power || inp.m > 1;
        break;
      }
    }
    if (!r && !power) {
      const auto& mp = ctx.minpoly(j);
      if (mp.degree == 1) {
        if (auto w = ctx.membership().witness(Polynomial::variable(n, j))) {
          r = Recovery{*w, *w, Polynomial::variable(n, j)};
          how = "d=1";
        }
      } else if (mp.degree == 2 && mp.symbolic) {
        if (auto inp = annihilator_from_minpoly(*mp.symbolic, n, j)) {
          r = recover_coordinate_quadratic(f, *inp, ctx.options().limits);
          how = "d=2";
        }
      }
    }
    if (!r) continue;
    ++recovered;
    e["x" + std::to_string(j + 1)] = to_string(r->coordinate_witness, names) + " (" + how + ")";
  }
  if (recovered + 1 < n || (power && !used_power)) return std::nullopt;
  e["recovered"] = std::to_string(recovered);
  return e;
}

std::optional<Evidence> symmetric_prime(Context& ctx) {
  if (ctx.map().n() != 2) return std::nullopt;
  ExchangeSymmetry sym;
  try {
    sym = check_exchange_symmetry(ctx.map(), ctx.options().limits);
  } catch (const UnsupportedError&) {
    return std::nullopt;
  }
  std::string tags;
  for (auto t : sym.tags) {
    if (t == ExchangeTag::neither) return std::nullopt;
    tags += (tags.empty() ? "" : ",") + std::string(to_string(t));
  }
  auto d = ctx.d();
  auto g = std::gcd(d[0], d[1]);
  if (!(is_prime(d[0]) || is_prime(d[1]) || g == 1 || is_prime(g))) return std::nullopt;
  return Evidence{{"d", join(d)}, {"tags", tags}, {"conjugate_contained", sym.conjugate_contained ? "true" : "false"}};
}

std::optional<Evidence> evaluate(Context& ctx, Rule rule) {
  switch (rule) {
    case Rule::WANG_QUADRATIC_DEGREE: return wang(ctx);
    case Rule::MAGNUS_CLASSICAL_2D: return magnus(ctx);
    case Rule::NAKAI_BABA_2D: return nakai_baba(ctx);
    case Rule::DEGREE1_COMPONENT: return degree1_component(ctx);
    case Rule::KELLER_BIRATIONAL: return keller_birational(ctx);
    case Rule::FORMANEK_ADJUNCTION: return formanek_adjunction(ctx);
    case Rule::MINPOLY_GCD_N:
    case Rule::MINPOLY_GCD_2D:
    case Rule::MINPOLY_GCD_LE2_2D: return gcd_rule(ctx, rule);
    case Rule::MINPOLY_QUADRATIC: return minpoly_recovery(ctx, false);
    case Rule::MINPOLY_POWER: return minpoly_recovery(ctx, true);
    case Rule::MINPOLY_SYMMETRIC_PRIME_2D: return symmetric_prime(ctx);
    case Rule::NONE: return std::nullopt;
  }
  return std::nullopt;
}

Certificate confirm(const PolyMap& f, Rule rule, Evidence evidence, const GroebnerLimits& limits) {
  Certificate c{rule, std::move(evidence), false, std::nullopt};
  c.inverse = invert(f, limits);
  if (!c.inverse)
    throw InternalInconsistencyError("rule " + std::string(to_string(rule)) + " fired but the map does not invert");
  c.verified_by_inversion = true;
  return c;
}

}  // namespace

std::string_view to_string(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

Rule parse_rule(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kRuleNames); ++i)
    if (kRuleNames[i] == name) return static_cast<Rule>(i);
  throw InputError("unknown rule '" + std::string(name) + "'");
}

std::vector<Rule> classification_order() {
  return {Rule::WANG_QUADRATIC_DEGREE, Rule::MAGNUS_CLASSICAL_2D, Rule::NAKAI_BABA_2D,
          Rule::DEGREE1_COMPONENT,     Rule::KELLER_BIRATIONAL,   Rule::FORMANEK_ADJUNCTION,
          Rule::MINPOLY_GCD_N,         Rule::MINPOLY_GCD_2D,      Rule::MINPOLY_GCD_LE2_2D,
          Rule::MINPOLY_QUADRATIC,     Rule::MINPOLY_POWER,       Rule::MINPOLY_SYMMETRIC_PRIME_2D};
}

Certificate evaluate_rule(const PolyMap& f, Rule rule, const ClassifyOptions& options) {
  require_keller(f, "evaluate_rule");
  Context ctx(f, options);
  auto e = evaluate(ctx, rule);
  if (!e) return {};
  return confirm(f, rule, std::move(*e), options.limits);
}

Certificate classify(const PolyMap& f, const ClassifyOptions& options) {
  require_keller(f, "classify");
  Context ctx(f, options);
  for (auto rule : classification_order())
    if (auto e = evaluate(ctx, rule)) return confirm(f, rule, std::move(*e), options.limits);
  Certificate none;
  none.inverse = invert(f, options.limits);
  none.evidence["inversion"] = none.inverse ? "succeeded" : "failed";
  return none;
}

Certificate minpoly_gcd_criterion(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits) {
  require_keller(f, "minpoly_gcd_criterion");
  ClassifyOptions options{seed, limits, {}};
  Context ctx(f, options);
  std::vector<Rule> rules = f.n() >= 3 ? std::vector<Rule>{Rule::MINPOLY_GCD_N}
                                       : std::vector<Rule>{Rule::MINPOLY_GCD_2D, Rule::MINPOLY_GCD_LE2_2D};
  for (auto rule : rules)
    if (auto e = gcd_rule(ctx, rule)) return confirm(f, rule, std::move(*e), limits);
  Certificate none;
  none.evidence["d"] = join(ctx.d());
  return none;
}

DegreeConjectureRecord degree_conjecture_check(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits) {
  DegreeConjectureRecord r;
  r.n = f.n();
  r.in_hypothesis = is_keller(f);
  long d = -1;
  for (auto l : f.degrees())
    if (l >= 0 && (d < 0 || l < d)) d = l;
  r.d = d;
  r.D = extension_degree(f, seed, limits).value;
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(d).get_mpz_t(), static_cast<unsigned long>(r.n - 1));
  r.bound = bound.get_str();
  r.holds = Integer(static_cast<unsigned long>(r.D)) <= bound;
  return r;
}

GcdConjectureRecord gcd_conjecture_check(const PolyMap& f, const GroebnerLimits& limits) {
  require_keller(f, "gcd_conjecture_check");
  GcdConjectureRecord r;
  r.degrees = f.degrees();
  r.applicable = true;
  for (std::size_t u = 0; u < f.n(); ++u)
    for (std::size_t v = u + 1; v < f.n(); ++v) {
      r.pairwise_gcds.push_back(std::gcd(r.degrees[u], r.degrees[v]));
      r.applicable = r.applicable && r.pairwise_gcds.back() == 1;
    }
  if (r.applicable) {
    r.automorphism_confirmed = invert(f, limits).has_value();
    r.counterexample_candidate = !r.automorphism_confirmed;
  }
  return r;
}

}  // namespace keller
