#include <numeric>
#include <random>

#include "keller/endo.hpp"
#include "keller/error.hpp"

namespace keller {

namespace {

// Graph ideal generators y_j - f_j(x) in Q[x_1..x_n, y_1..y_n].
std::vector<Polynomial> graph_ideal(const PolyMap& f) {
  const std::size_t n = f.n();
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < n; ++j)
    gens.push_back(Polynomial::variable(2 * n, n + j) - f[j].embed(2 * n, xs));
  return gens;
}

// Fibre size over f(p) for a random integer point p; nullopt when infinite.
std::optional<std::size_t> sampled_fibre(const PolyMap& f, const GroebnerLimits& limits) {
  std::mt19937_64 rng(0x6b656c6c6572ULL);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < f.n(); ++i) p.emplace_back(static_cast<long>(rng() % 201) - 100);
  std::vector<Polynomial> gens;
  for (const auto& c : f.coords()) gens.push_back(c - Polynomial::constant(f.n(), c.evaluate(p)));
  return quotient_dimension(buchberger(gens, MonomialOrder::grevlex(f.n()), limits));
}

}  // namespace

std::optional<PolyMap> invert(const PolyMap& f, const GroebnerLimits& limits) {
  const std::size_t n = f.n();
  std::vector<std::size_t> xs(n);
  std::iota(xs.begin(), xs.end(), 0);
  auto gb = buchberger(graph_ideal(f), MonomialOrder::block(2 * n, xs), limits);

  std::vector<std::optional<Polynomial>> g(n);
  for (std::size_t k = 0; k < gb.generators().size(); ++k) {
    const auto& b = gb.generators()[k];
    const auto& lm = gb.leading_monomials()[k];
    if (lm.total_degree() != 1) continue;
    std::size_t i = 0;
    while (i < n && lm[i] == 0) ++i;
    if (i == n) continue;
    Polynomial rest = Polynomial::variable(2 * n, i) - b;
    bool in_y = true;
    for (std::size_t v = 0; v < n && in_y; ++v) in_y = !rest.uses_variable(v);
    if (!in_y) continue;
    // Project Q[x, y] -> Q[y] by renaming y_j to x_j; x never occurs here.
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < 2 * n; ++v)
      images.push_back(v < n ? Polynomial(n) : Polynomial::variable(n, v - n));
    g[i] = rest.substitute(images);
  }

  bool complete = true;
  for (const auto& gi : g) complete = complete && gi.has_value();
  if (!complete) {
    if (is_keller(f) && sampled_fibre(f, limits) == std::optional<std::size_t>(1))
      throw InternalInconsistencyError("Keller map with single-point fibres has no detected inverse");
    return std::nullopt;
  }

  std::vector<Polynomial> coords;
  for (auto& gi : g) coords.push_back(std::move(*gi));
  PolyMap inverse(std::move(coords));
  if (!compose(f, inverse).is_identity() || !compose(inverse, f).is_identity())
    throw InternalInconsistencyError("inverse read off the graph ideal does not compose to the identity");
  return inverse;
}

}  // namespace keller
