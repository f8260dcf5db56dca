#include <numeric>

#include "keller/error.hpp"
#include "keller/extension.hpp"
#include "sampling.hpp"

namespace keller {

using detail::agree;
using detail::image;
using detail::require_dominant;
using detail::shifted;

namespace {

// Ring Q[x_1..x_n, y_1..y_n] holding the graph ideal (y_j - F_j(x)).
std::vector<Polynomial> graph_ideal(const PolyMap& f) {
  const std::size_t n = f.n();
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < n; ++j)
    gens.push_back(Polynomial::variable(2 * n, n + j) - f[j].embed(2 * n, xs));
  return gens;
}

std::vector<std::size_t> lower_block(std::size_t n) {
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  return xs;
}

// Counts the fibre of (F, x_k for k in fixed) through a random point.
Sample fibre_through_point(const PolyMap& f, std::span<const std::size_t> fixed, SampleStream& s,
                           const GroebnerLimits& limits) {
  const std::size_t n = f.n();
  Sample out;
  out.point = s.point(n);
  auto gens = shifted(f, image(f, out.point));
  for (auto k : fixed) gens.push_back(Polynomial::variable(n, k) - Polynomial::constant(n, out.point[k]));
  out.value = quotient_dimension(buchberger(gens, MonomialOrder::grevlex(n), limits));
  return out;
}

}  // namespace

std::optional<std::size_t> fiber_count(const PolyMap& f, std::span<const Rational> c, const GroebnerLimits& limits) {
  if (c.size() != f.n()) throw StructuralError("fiber_count: point has the wrong dimension");
  return quotient_dimension(buchberger(shifted(f, c), MonomialOrder::grevlex(f.n()), limits));
}

Measurement extension_degree(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits) {
  require_dominant(f, "extension_degree");
  SampleStream stream(seed);
  return agree(stream, [&](SampleStream& s) {
    Sample out;
    out.point = s.point(f.n());
    out.value = fiber_count(f, out.point, limits);
    return out;
  });
}

std::vector<std::string> symbolic_minpoly_names(std::size_t n) {
  auto names = default_variable_names(n, "t");
  names.insert(names.begin(), "T");
  return names;
}

Polynomial symbolic_coordinate_minpoly(const PolyMap& f, std::size_t i, const GroebnerLimits& limits) {
  const std::size_t n = f.n();
  if (i >= n) throw StructuralError("coordinate index out of range");
  require_dominant(f, "symbolic_coordinate_minpoly");
  auto gens = graph_ideal(f);
  std::vector<std::size_t> eliminate;
  for (std::size_t k = 0; k < n; ++k)
    if (k != i) eliminate.push_back(k);
  std::vector<Polynomial> kept;
  if (eliminate.empty()) {
    kept = gens;
  } else {
    kept = elimination_ideal(gens, eliminate, limits);
  }
  // x_i -> T (index 0), y_j -> t_j (index 1 + j).
  std::vector<Polynomial> images(2 * n, Polynomial(n + 1));
  images[i] = Polynomial::variable(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) images[n + j] = Polynomial::variable(n + 1, 1 + j);
  std::optional<Polynomial> best;
  for (const auto& g : kept) {
    if (!g.uses_variable(i)) continue;
    if (!best || g.degree_in(i) < best->degree_in(0)) best = g.substitute(images);
  }
  if (!best) throw InternalInconsistencyError("x" + std::to_string(i + 1) + " is not algebraic over Q(F)");
  return detail::primitive_in(*best, 0);
}

CoordinateMinpoly coordinate_minpoly(const PolyMap& f, std::size_t i, std::uint64_t seed,
                                     const GroebnerLimits& limits) {
  const std::size_t n = f.n();
  if (i >= n) throw StructuralError("coordinate index out of range");
  require_dominant(f, "coordinate_minpoly");
  std::vector<std::pair<std::vector<Rational>, UnivariatePolynomial>> found;
  SampleStream stream(seed);
  auto m = agree(stream, [&](SampleStream& s) {
    Sample out;
    out.point = s.point(n);
    auto gb = buchberger(shifted(f, out.point), MonomialOrder::grevlex(n), limits);
    if (!quotient_dimension(gb)) return out;
    auto mp = minpoly_in_quotient(gb, Polynomial::variable(n, i));
    out.value = static_cast<std::size_t>(mp.degree());
    found.emplace_back(out.point, std::move(mp));
    return out;
  });
  CoordinateMinpoly r;
  r.degree = m.value;
  r.samples = m.samples;
  for (auto& [point, mp] : found)
    if (static_cast<std::size_t>(mp.degree()) == m.value) {
      r.sample = point;
      r.specialized = mp;
      break;
    }
  if (n <= 2 && f.max_degree() <= 6) {
    try {
      r.symbolic = symbolic_coordinate_minpoly(f, i, limits);
    } catch (const BudgetExceededError&) {
    }
    if (r.symbolic && r.symbolic->degree_in(0) != r.degree)
      throw InternalInconsistencyError("symbolic minimal polynomial of x" + std::to_string(i + 1) + " has degree " +
                                       std::to_string(r.symbolic->degree_in(0)) + ", specialization gave " +
                                       std::to_string(r.degree));
  }
  return r;
}

std::vector<std::string> formanek_witness_names(std::size_t n) {
  auto names = default_variable_names(n, "F");
  auto xs = default_variable_names(n - 1, "x");
  names.insert(names.end(), xs.begin(), xs.end());
  return names;
}

namespace {

std::optional<FormanekWitness> formanek_witness(const PolyMap& f, const GroebnerLimits& limits) {
  const std::size_t n = f.n();
  const std::size_t last = n - 1;
  auto gb = buchberger(graph_ideal(f), MonomialOrder::block(2 * n, {last}), limits);
  // Ring Q[y_1..y_n, x_1..x_{n-1}]: y_j at j, x_k at n + k.
  const std::size_t w = 2 * n - 1;
  std::vector<Polynomial> images(2 * n, Polynomial(w));
  for (std::size_t k = 0; k < last; ++k) images[k] = Polynomial::variable(w, n + k);
  for (std::size_t j = 0; j < n; ++j) images[n + j] = Polynomial::variable(w, j);
  for (const auto& g : gb.generators()) {
    if (g.degree_in(last) != 1) continue;
    auto c = g.coefficients_in(last);
    FormanekWitness out{(-c[0]).substitute(images), c[1].substitute(images)};
    // Check den(F, x') * x_n == num(F, x') in Q[x].
    std::vector<Polynomial> back(f.coords().begin(), f.coords().end());
    for (std::size_t k = 0; k < last; ++k) back.push_back(Polynomial::variable(n, k));
    Polynomial den = out.denominator.substitute(back);
    if (den.is_zero() || den * Polynomial::variable(n, last) != out.numerator.substitute(back))
      throw InternalInconsistencyError("Formanek witness fails its substitution check");
    return out;
  }
  return std::nullopt;
}

}  // namespace

FormanekResult verify_formanek(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits) {
  require_dominant(f, "verify_formanek");
  const std::size_t n = f.n();
  std::vector<std::size_t> fixed(n - 1);
  std::iota(fixed.begin(), fixed.end(), 0);
  SampleStream stream(seed);
  auto m = agree(stream, [&](SampleStream& s) { return fibre_through_point(f, fixed, s, limits); });
  FormanekResult r;
  r.degree = m.value;
  r.holds = m.value == 1;
  r.samples = m.samples;
  if (r.holds) {
    try {
      r.witness = formanek_witness(f, limits);
    } catch (const BudgetExceededError&) {
    }
  }
  return r;
}

Measurement tower_degree(const PolyMap& f, std::size_t i, std::uint64_t seed, const GroebnerLimits& limits) {
  if (i >= f.n()) throw StructuralError("coordinate index out of range");
  require_dominant(f, "tower_degree");
  std::vector<std::size_t> fixed{i};
  SampleStream stream(seed);
  return agree(stream, [&](SampleStream& s) { return fibre_through_point(f, fixed, s, limits); });
}

namespace {

// Q[x_1..x_n, y_1..y_m] with (y_j - g_j(x)) and x > y.
GroebnerBasis generator_graph_basis(std::span<const Polynomial> gens, const GroebnerLimits& limits) {
  if (gens.empty()) throw StructuralError("a subalgebra needs at least one generator");
  const std::size_t n = gens[0].nvars();
  const std::size_t m = gens.size();
  auto xs = lower_block(n);
  std::vector<Polynomial> ideal;
  for (std::size_t j = 0; j < m; ++j) {
    if (gens[j].nvars() != n) throw StructuralError("subalgebra generators live in different rings");
    ideal.push_back(Polynomial::variable(n + m, n + j) - gens[j].embed(n + m, xs));
  }
  return buchberger(ideal, MonomialOrder::block(n + m, xs), limits);
}

}  // namespace

SubalgebraMembership::SubalgebraMembership(const PolyMap& f, const GroebnerLimits& limits)
    : SubalgebraMembership(f.coords(), limits) {}

SubalgebraMembership::SubalgebraMembership(std::span<const Polynomial> gens, const GroebnerLimits& limits)
    : gens_(gens.begin(), gens.end()), basis_(generator_graph_basis(gens, limits)) {}

std::optional<Polynomial> SubalgebraMembership::witness(const Polynomial& h) const {
  const std::size_t n = gens_[0].nvars();
  const std::size_t m = gens_.size();
  if (h.nvars() != n) throw StructuralError("membership query lives in the wrong ring");
  auto xs = lower_block(n);
  Polynomial r = basis_.normal_form(h.embed(n + m, xs));
  for (std::size_t k = 0; k < n; ++k)
    if (r.uses_variable(k)) return std::nullopt;
  std::vector<Polynomial> images(n + m, Polynomial(m));
  for (std::size_t j = 0; j < m; ++j) images[n + j] = Polynomial::variable(m, j);
  Polynomial w = r.substitute(images);
  if (w.substitute(gens_) != h)
    throw InternalInconsistencyError("membership witness does not reproduce the queried element");
  return w;
}

std::optional<Polynomial> subalgebra_membership(const Polynomial& h, const PolyMap& f, const GroebnerLimits& limits) {
  return SubalgebraMembership(f, limits).witness(h);
}

RootClosure root_closure_check(const Polynomial& g, unsigned m, const PolyMap& f, const GroebnerLimits& limits) {
  if (!is_keller(f)) throw PreconditionError("root_closure_check needs a Keller map");
  if (m == 0) throw PreconditionError("root_closure_check needs m >= 1");
  SubalgebraMembership member(f, limits);
  RootClosure r;
  r.power_member = member.witness(g.pow(m)).has_value();
  r.root_member = member.witness(g).has_value();
  r.verdict = r.power_member && !r.root_member ? ClosureVerdict::violation : ClosureVerdict::consistent;
  return r;
}

ExtensionReport analyze_extension(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits) {
  ExtensionReport r;
  auto D = extension_degree(f, derive_seed(seed, 0), limits);
  r.D = D.value;
  r.notes.push_back("D: fibre count, " + std::to_string(D.samples.size()) + " draws");
  for (std::size_t i = 0; i < f.n(); ++i) {
    auto mp = coordinate_minpoly(f, i, derive_seed(seed, 1 + i), limits);
    r.d.push_back(mp.degree);
    r.notes.push_back("d" + std::to_string(i + 1) + ": " + (mp.symbolic ? "specialization and symbolic" : "specialization"));
  }
  auto fm = verify_formanek(f, derive_seed(seed, 1 + f.n()), limits);
  r.formanek_ok = fm.holds;
  r.witness = fm.witness;
  r.notes.push_back(std::string("formanek: fibre count") + (fm.witness ? " with witness" : ""));
  return r;
}

}  // namespace keller
