#include <random>

#include "keller/endo.hpp"
#include "keller/error.hpp"

namespace keller {

bool is_monic_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return false;
  auto c = p.coefficients_in(var);
  return c.back().is_constant();
}

bool is_monic_in_last(const PolyMap& f) {
  for (const auto& c : f.coords())
    if (!is_monic_in(c, f.n() - 1)) return false;
  return true;
}

NormalizedMap make_monic_in_last(const PolyMap& f) {
  const std::size_t n = f.n();
  const long delta = std::max<long>(f.max_degree(), 1);
  std::vector<Polynomial> g;
  Integer m = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    m *= delta + 1;
    if (!m.fits_uint_p()) throw UnsupportedError("normalizing exponent overflows");
    g.push_back(Polynomial::variable(n, i) + Polynomial::variable(n, n - 1).pow(static_cast<unsigned>(m.get_ui())));
  }
  g.push_back(Polynomial::variable(n, n - 1));
  PolyMap automorphism(std::move(g));
  return {compose(f, automorphism), std::move(automorphism)};
}

PolyMap linear_map(const RationalMatrix& h) {
  const std::size_t n = h.size();
  std::vector<Polynomial> c;
  for (const auto& row : h) {
    if (row.size() != n) throw StructuralError("linear map needs a square matrix");
    Polynomial p(n);
    for (std::size_t k = 0; k < n; ++k)
      if (sgn(row[k]) != 0) p += Polynomial::variable(n, k) * Polynomial::constant(n, row[k]);
    c.push_back(std::move(p));
  }
  return PolyMap(std::move(c));
}

bool preserves_monicity(const PolyMap& f, const RationalMatrix& h) {
  if (h.size() != f.n()) throw StructuralError("linear map of the wrong dimension");
  if (sgn(matrix_determinant(h)) == 0) return false;
  return is_monic_in_last(compose(f, linear_map(h)));
}

NormalizedMap generic_linear_compose(const PolyMap& f, std::uint64_t seed) {
  if (!is_monic_in_last(f)) throw PreconditionError("generic_linear_compose needs coordinates monic in the last variable");
  const std::size_t n = f.n();
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < 100; ++draw) {
    RationalMatrix h(n, std::vector<Rational>(n));
    for (auto& row : h)
      for (auto& e : row) e = static_cast<long>(rng() % 11) - 5;
    if (sgn(matrix_determinant(h)) == 0) continue;
    auto composed = compose(f, linear_map(h));
    if (is_monic_in_last(composed)) return {std::move(composed), linear_map(h)};
  }
  throw BudgetExceededError("no monicity-preserving linear map in 100 draws");
}

}  // namespace keller
