#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "keller/error.hpp"
#include "keller/groebner.hpp"

namespace keller {

Staircase staircase(const GroebnerBasis& g) {
  Staircase s;
  const std::size_t n = g.nvars();
  if (g.is_unit()) {
    s.finite = true;
    return s;
  }
  // Finite iff every variable has a pure power among the leading monomials.
  for (std::size_t v = 0; v < n; ++v) {
    bool pure = std::any_of(g.leading_monomials().begin(), g.leading_monomials().end(), [&](const Monomial& m) {
      return m[v] > 0 && m.total_degree() == m[v];
    });
    if (!pure) return s;
  }
  s.finite = true;
  auto standard = [&](const Monomial& m) {
    return std::none_of(g.leading_monomials().begin(), g.leading_monomials().end(),
                        [&](const Monomial& lead) { return lead.divides(m); });
  };
  std::unordered_set<Monomial, MonomialHash> seen;
  std::deque<Monomial> queue{Monomial(n)};
  seen.insert(Monomial(n));
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
    s.monomials.push_back(std::move(m));
  }
  std::sort(s.monomials.begin(), s.monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return g.order().compare(a, b) < 0; });
  return s;
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& g) {
  auto s = staircase(g);
  if (!s.finite) return std::nullopt;
  return s.monomials.size();
}

UnivariatePolynomial minpoly_in_quotient(const GroebnerBasis& g, const Polynomial& elem) {
  auto s = staircase(g);
  if (!s.finite) throw UnsupportedError("minimal polynomial needs a finite-dimensional quotient");
  const std::size_t dim = s.monomials.size();
  if (dim == 0) return UnivariatePolynomial{{Rational(1)}};  // zero ring

  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < dim; ++k) index.emplace(s.monomials[k], k);
  auto coords = [&](const Polynomial& nf) {
    std::vector<Rational> v(dim);
    for (const auto& t : nf.terms()) v[index.at(t.mono)] = t.coef;
    return v;
  };

  // Echelon rows: vector in staircase coordinates, pivot column, and the
  // combination of powers of elem it represents.
  struct Row {
    std::vector<Rational> vec;
    std::size_t pivot;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  const Polynomial reduced_elem = g.normal_form(elem);
  Polynomial power = g.normal_form(Polynomial::constant(g.nvars(), Rational(1)));
  for (std::size_t k = 0; k <= dim; ++k) {
    std::vector<Rational> v = coords(power);
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& r : rows) {
      if (sgn(v[r.pivot]) == 0) continue;
      Rational f = v[r.pivot] / r.vec[r.pivot];
      for (std::size_t c = 0; c < dim; ++c)
        if (sgn(r.vec[c]) != 0) v[c] -= f * r.vec[c];
      for (std::size_t c = 0; c < r.combo.size(); ++c) combo[c] -= f * r.combo[c];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == v.end()) return UnivariatePolynomial{std::move(combo)};
    auto pivot = static_cast<std::size_t>(nz - v.begin());
    rows.push_back(Row{std::move(v), pivot, std::move(combo)});
    power = g.normal_form(power * reduced_elem);
  }
  throw InternalInconsistencyError("no linear dependence among dim+1 powers");
}

Rational UnivariatePolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial UnivariatePolynomial::evaluate(const Polynomial& p) const {
  Polynomial acc(p.nvars());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * p + Polynomial::constant(p.nvars(), *it);
  return acc;
}

std::string UnivariatePolynomial::to_string(std::string_view var) const {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) terms.push_back(Term{Monomial::variable(1, 0, k), coeffs[k]});
  std::vector<std::string> names{std::string(var)};
  return keller::to_string(Polynomial::from_terms(1, std::move(terms)), names);
}

}  // namespace keller
