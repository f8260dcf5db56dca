#pragma once

// Fibre size of a 2-variable map by resultants, independent of the Gröbner
// engine: shear so both equations are monic in x1, eliminate x1 with a
// Sylvester determinant over Q[x2] and count distinct roots of the
// resultant.

#include <span>
#include <stdexcept>
#include <vector>

#include "keller/endo.hpp"

namespace keller::oracle {

using UPoly = std::vector<Rational>;  // coefficients from degree 0 up, no trailing zeros

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long deg(const UPoly& p) { return static_cast<long>(p.size()) - 1; }

inline UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline UPoly neg(UPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

/// Quotient and remainder of a by b != 0.
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

inline UPoly divexact(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.empty()) throw std::logic_error("oracle: inexact division");
  return q;
}

inline UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

inline UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Determinant of a square matrix over Q[t] by Bareiss elimination.
inline UPoly bareiss_det(std::vector<std::vector<UPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return {Rational(1)};
  bool negate = false;
  UPoly prev{Rational(1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].empty()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divexact(add(mul(m[i][j], m[k][k]), neg(mul(m[i][k], m[k][j]))), prev);
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  return negate ? neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

/// Coefficients of p in x1 (index 0), each converted to a polynomial in x2.
inline std::vector<UPoly> coefficients_in_x1(const Polynomial& p) {
  std::vector<UPoly> out;
  for (const auto& c : p.coefficients_in(0)) {
    UPoly u;
    for (const auto& t : c.terms()) {
      std::size_t e = t.mono[1];
      if (u.size() <= e) u.resize(e + 1);
      u[e] += t.coef;
    }
    trim(u);
    out.push_back(u);
  }
  return out;
}

/// Res_x1(p, q) for p, q with nonzero constant leading coefficients in x1.
inline UPoly resultant_x1(const Polynomial& p, const Polynomial& q) {
  auto a = coefficients_in_x1(p);
  auto b = coefficients_in_x1(q);
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  return bareiss_det(std::move(s));
}

/// Number of distinct points of {x : F(x) = c} for a 2-variable map; throws
/// when the fibre is infinite.
inline std::size_t fibre_points(const PolyMap& f, std::span<const Rational> c) {
  if (f.n() != 2) throw std::logic_error("oracle: n = 2 only");
  std::size_t best = 0;
  int usable = 0;
  for (long lambda = 2; usable < 3 && lambda < 40; ++lambda) {
    // x2 -> x2 + lambda x1 makes the top form's x1-coefficient top(1, lambda).
    std::vector<Polynomial> shear{Polynomial::variable(2, 0),
                                  Polynomial::variable(2, 1) + Polynomial::variable(2, 0) * Rational(lambda)};
    Polynomial g1 = (f[0] - Polynomial::constant(2, c[0])).substitute(shear);
    Polynomial g2 = (f[1] - Polynomial::constant(2, c[1])).substitute(shear);
    auto c1 = coefficients_in_x1(g1), c2 = coefficients_in_x1(g2);
    if (c1.size() < 2 || c2.size() < 2) throw std::logic_error("oracle: constant coordinate");
    if (deg(c1.back()) != 0 || deg(c2.back()) != 0) continue;
    ++usable;
    UPoly r = resultant_x1(g1, g2);
    if (r.empty()) throw std::runtime_error("oracle: infinite fibre");
    std::size_t distinct = static_cast<std::size_t>(deg(r) - deg(gcd(r, derivative(r))));
    best = std::max(best, distinct);
  }
  if (usable == 0) throw std::logic_error("oracle: no usable shear");
  return best;
}

}  // namespace keller::oracle
