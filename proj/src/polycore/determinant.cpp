#include <string>
#include <utility>

#include "keller/error.hpp"
#include "keller/polynomial.hpp"

namespace keller {

namespace {

constexpr std::size_t kBareissLimit = 6;

Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * cofactor_det(minor, nvars);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

Polynomial bareiss_det(std::vector<std::vector<Polynomial>> m, std::size_t nvars) {
  const std::size_t n = m.size();
  Polynomial prev = Polynomial::constant(nvars, Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial(nvars);
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw InternalInconsistencyError("Bareiss step was not an exact division");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

}  // namespace

Polynomial determinant(std::vector<std::vector<Polynomial>> matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) throw StructuralError("determinant of an empty matrix");
  const std::size_t nvars = matrix[0].empty() ? 0 : matrix[0][0].nvars();
  for (const auto& row : matrix) {
    if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
    for (const auto& e : row)
      if (e.nvars() != nvars) throw StructuralError("matrix entries live in different rings");
  }
  if (n <= kBareissLimit) return bareiss_det(std::move(matrix), nvars);
  return cofactor_det(matrix, nvars);
}

Polynomial jacobian_det(std::span<const Polynomial> coords) {
  const std::size_t n = coords.size();
  if (n == 0) throw StructuralError("jacobian of an empty map");
  for (const auto& f : coords)
    if (f.nvars() != n)
      throw StructuralError("jacobian needs n polynomials in n variables, got " + std::to_string(n) +
                            " polynomials in " + std::to_string(f.nvars()));
  std::vector<std::vector<Polynomial>> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(coords[i].derivative(j));
  return determinant(std::move(m));
}

}  // namespace keller
