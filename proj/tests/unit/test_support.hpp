#pragma once

#include <random>
#include <vector>

#include "keller/polynomial.hpp"

namespace keller::testing {

inline Polynomial P(const char* text, std::size_t nvars) { return parse_polynomial(text, nvars); }

/// Random polynomial with up to `max_terms` terms of total degree at most
/// `max_degree` and small integer coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree,
                                    std::size_t max_terms, int coef_range = 5) {
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::uniform_int_distribution<int> coef(-coef_range, coef_range);
  std::vector<Term> terms;
  std::size_t count = nterms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    Monomial m(nvars);
    unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) {
      auto v = var(rng);
      m.set(v, m[v] + 1);
    }
    terms.push_back(Term{m, Rational(coef(rng))});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

inline std::vector<Polynomial> random_map(std::mt19937_64& rng, std::size_t n, unsigned max_degree,
                                          std::size_t max_terms) {
  std::vector<Polynomial> f;
  for (std::size_t i = 0; i < n; ++i) f.push_back(random_polynomial(rng, n, max_degree, max_terms));
  return f;
}

inline std::vector<Polynomial> identity_images(std::size_t n) {
  std::vector<Polynomial> id;
  for (std::size_t i = 0; i < n; ++i) id.push_back(Polynomial::variable(n, i));
  return id;
}

}  // namespace keller::testing
