#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "keller/groebner.hpp"
#include "keller/polynomial.hpp"

namespace keller {

enum class Family { triangular, affine, composed, druzkowski, lang_maslamani, essen_form };

std::string_view to_string(Family f);
/// Throws InputError for unknown names.
Family parse_family(std::string_view name);

/// Everything a generator needs; the same spec always yields the same map.
struct GeneratorSpec {
  Family family = Family::triangular;
  std::uint64_t seed = 0;
  std::size_t n = 2;
  unsigned degree_bound = 3;
  unsigned factors = 2;  // composed
  std::size_t r = 1;     // essen_form: number of linear coordinates

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Polynomial endomorphism x_i -> coords[i] of Q[x_1..x_n].
class PolyMap {
 public:
  /// Throws StructuralError unless every coordinate lives in coords.size()
  /// variables.
  explicit PolyMap(std::vector<Polynomial> coords);

  static PolyMap identity(std::size_t n);

  std::size_t n() const { return coords_.size(); }
  std::span<const Polynomial> coords() const { return coords_; }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }

  const std::optional<GeneratorSpec>& provenance() const { return provenance_; }
  void set_provenance(std::optional<GeneratorSpec> spec) { provenance_ = std::move(spec); }

  /// Total degrees l_i of the coordinates.
  std::vector<long> degrees() const;
  long max_degree() const;

  bool is_identity() const;

  /// Coordinates only; provenance is metadata.
  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Polynomial> coords_;
  std::optional<GeneratorSpec> provenance_;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

Polynomial jacobian_det(const PolyMap& f);

/// Jacobian determinant is a nonzero constant.
bool is_keller(const PolyMap& f);

/// Jacobian determinant is not the zero polynomial (the coordinates are
/// algebraically independent).
bool is_dominant(const PolyMap& f);

/// (f ∘ g)_i = f_i(g_1, ..., g_n).
PolyMap compose(const PolyMap& f, const PolyMap& g);

/// Inverse through the graph ideal (y_j - f_j(x)) under a block order with
/// x > y. Both compositions are verified to be the identity exactly.
/// nullopt when the reduced basis does not contain x_i - g_i(y) for every
/// i, i.e. f is not an automorphism. Throws InternalInconsistencyError
/// when a Keller map has no inverse yet its sampled fibres are single
/// points.
std::optional<PolyMap> invert(const PolyMap& f, const GroebnerLimits& limits = {});

/// The coefficient of the highest power of x_var is a nonzero constant.
bool is_monic_in(const Polynomial& p, std::size_t var);
bool is_monic_in_last(const PolyMap& f);

/// A map together with the automorphism it was composed with.
struct NormalizedMap {
  PolyMap map;
  PolyMap automorphism;
};

/// Returns (f ∘ g, g) with g(x_i) = x_i + x_n^(m_i) for i < n and
/// g(x_n) = x_n, m_i = (Δ+1)^i, Δ the largest coordinate degree of f. Every
/// coordinate of f ∘ g is monic in x_n.
NormalizedMap make_monic_in_last(const PolyMap& f);

/// x -> h x for an n x n matrix.
PolyMap linear_map(const RationalMatrix& h);

/// f ∘ h keeps every coordinate monic in x_n and det h != 0.
bool preserves_monicity(const PolyMap& f, const RationalMatrix& h);

/// Returns (f ∘ h, h) for a random invertible linear h keeping every
/// coordinate monic in x_n. Requires is_monic_in_last(f). Throws
/// BudgetExceededError after 100 rejected draws.
NormalizedMap generic_linear_compose(const PolyMap& f, std::uint64_t seed);

PolyMap generate_family(const GeneratorSpec& spec);

/// x_i -> x_i + ((a x)_i)^3.
PolyMap druzkowski_map(const RationalMatrix& a);

/// Recovers a from x_i -> x_i + ((a x)_i)^3; nullopt when f is not of that
/// form.
std::optional<RationalMatrix> druzkowski_matrix(const PolyMap& f);

/// n - rank(a). Throws StructuralError for non-square input.
std::size_t druzkowski_corank(const RationalMatrix& a);

/// Rank of an arbitrary rational matrix by exact elimination.
std::size_t matrix_rank(RationalMatrix a);
Rational matrix_determinant(RationalMatrix a);

/// Map file text:
///   # family=triangular      (optional provenance, fixed key order)
///   nvars: 3
///   x1 -> x1
///   x2 -> x2 + x1^2
std::string format_map(const PolyMap& f);
/// Throws InputError naming the offending line.
PolyMap parse_map(std::string_view text);

}  // namespace keller
