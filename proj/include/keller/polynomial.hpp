#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keller/monomial.hpp"
#include "keller/rational.hpp"

namespace keller {

struct Term {
  Monomial mono;
  Rational coef;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are stored in descending graded reverse lexicographic order with
/// no zero coefficients and no repeated monomials, so two equal polynomials
/// always have identical term vectors and print identically.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;

  /// Maximum total degree; -1 for the zero polynomial.
  long total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;

  /// Leading term in grevlex. Requires !is_zero().
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  /// p(images[0], ..., images[n-1]). All images must share one nvars.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Relabels x_i as x_{perm[i]} (0-based). perm must be a bijection.
  Polynomial permute_variables(std::span<const std::size_t> perm) const;

  /// Moves variable i to position var_map[i] in a ring of new_nvars
  /// variables. var_map must be injective.
  Polynomial embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Coefficients c_k (polynomials not involving var) with
  /// p = sum_k c_k * var^k; size is degree_in(var)+1, empty for zero.
  std::vector<Polynomial> coefficients_in(std::size_t var) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// The r with r^k == p, if p is a perfect k-th power over Q. For even k the
/// root is chosen with positive leading coefficient.
std::optional<Polynomial> nth_root(const Polynomial& p, unsigned k);

/// p / q when q divides p exactly in Q[x]; nullopt otherwise. q != 0.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

/// Determinant of the Jacobian matrix (d coords[i] / d x_j). coords must be
/// n polynomials in n variables.
Polynomial jacobian_det(std::span<const Polynomial> coords);

/// Determinant of a square matrix of polynomials. Fraction-free Bareiss
/// elimination up to 6x6, cofactor expansion beyond.
Polynomial determinant(std::vector<std::vector<Polynomial>> matrix);

/// Names "x1".."xn".
std::vector<std::string> default_variable_names(std::size_t nvars, std::string_view prefix = "x");

/// Canonical text form, e.g. "3/4*x1^2*x3 - x2 + 5".
std::string to_string(const Polynomial& p);
std::string to_string(const Polynomial& p, std::span<const std::string> names);

/// Inverse of to_string. Accepts arbitrary whitespace, optional '*'
/// between factors, repeated variables, and unsorted or duplicate terms.
/// Throws InputError with the offending column.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

}  // namespace keller
