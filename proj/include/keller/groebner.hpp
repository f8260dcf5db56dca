#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "keller/order.hpp"
#include "keller/polynomial.hpp"

namespace keller {

/// Caps that turn runaway Buchberger runs into BudgetExceededError.
struct GroebnerLimits {
  std::size_t max_pairs = 200000;
  std::size_t max_terms = 200000;   // per intermediate polynomial
  std::size_t max_basis = 5000;     // basis elements
};

/// Reduced Gröbner basis with respect to a fixed order. Generators are
/// monic (leading coefficient 1 in the basis order), sorted by increasing
/// leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(std::move(order)) {}

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Polynomial> generators() const { return gens_; }
  std::span<const Monomial> leading_monomials() const { return leads_; }
  bool reduced() const { return reduced_; }
  bool is_unit() const;
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Leading term of p in this basis' order.
  Term leading_term(const Polynomial& p) const;

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&, const GroebnerLimits&);

  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
  // Generator terms sorted descending in order_, for reduction.
  std::vector<std::vector<Term>> ordered_;
  bool reduced_ = false;
};

/// Remainder of multivariate division of p by G (full reduction).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Reduced Gröbner basis of the ideal generated by gens. Uses the product
/// and chain (Gebauer-Möller) criteria and selects pairs by
/// (sugar degree, lcm, creation index).
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order,
                         const GroebnerLimits& limits = {});

/// Generators of ideal(gens) ∩ Q[kept variables], computed with a block
/// order. The result still lives in the full ring.
std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::size_t> eliminate,
                                          const GroebnerLimits& limits = {});

/// Standard monomials of a reduced basis, sorted increasingly in the basis
/// order. `finite` is false when some variable has no pure power among
/// the leading monomials, in which case `monomials` is empty.
struct Staircase {
  bool finite = false;
  std::vector<Monomial> monomials;
};

Staircase staircase(const GroebnerBasis& g);

/// Dimension of Q[x]/I over Q, or nullopt for an infinite-dimensional
/// quotient.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& g);

/// Dense univariate polynomial over Q, coefficients from degree 0 up.
struct UnivariatePolynomial {
  std::vector<Rational> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Rational evaluate(const Rational& t) const;
  /// Evaluates at a multivariate polynomial (Horner).
  Polynomial evaluate(const Polynomial& p) const;
  std::string to_string(std::string_view var = "T") const;
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;
};

/// Monic minimal polynomial of elem acting on the finite-dimensional
/// algebra Q[x]/I. Throws UnsupportedError for infinite quotients.
UnivariatePolynomial minpoly_in_quotient(const GroebnerBasis& g, const Polynomial& elem);

}  // namespace keller
