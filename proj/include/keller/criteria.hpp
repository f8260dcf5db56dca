#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "keller/endo.hpp"
#include "keller/extension.hpp"

namespace keller {

enum class Rule {
  KELLER_BIRATIONAL,
  WANG_QUADRATIC_DEGREE,
  MAGNUS_CLASSICAL_2D,
  NAKAI_BABA_2D,
  MINPOLY_QUADRATIC,
  MINPOLY_POWER,
  MINPOLY_GCD_2D,
  MINPOLY_GCD_LE2_2D,
  MINPOLY_SYMMETRIC_PRIME_2D,
  MINPOLY_GCD_N,
  DEGREE1_COMPONENT,
  FORMANEK_ADJUNCTION,
  NONE,
};

std::string_view to_string(Rule r);
/// Throws InputError for unknown names.
Rule parse_rule(std::string_view name);

/// Order in which classify tries the rules.
std::vector<Rule> classification_order();

struct Certificate {
  Rule rule = Rule::NONE;
  /// Rule-specific data as printable key/value pairs.
  std::map<std::string, std::string> evidence;
  bool verified_by_inversion = false;
  std::optional<PolyMap> inverse;
};

/// a*X^2 + b*X + c = 0 (or a*X^3 + b*X^2 + c*X + d = 0 when d is set) with
/// X = x_j^m. Coefficients are elements of Q[F] written in y_1..y_n
/// (stored in n variables), y_k standing for F_k.
struct AnnihilatorInput {
  std::size_t j = 0;
  Polynomial a, b, c;
  std::optional<Polynomial> d;
  unsigned m = 1;
};

/// Membership witnesses produced by a successful recovery.
struct Recovery {
  /// w(F) = x_j^m.
  Polynomial power_witness;
  /// w(F) = x_j; equals power_witness when m = 1.
  Polynomial coordinate_witness;
  /// The extracted square (cube) root, as a polynomial in x.
  Polynomial root;
};

/// Completes the square: (a X + b/2)^2 = b^2/4 - ac, takes the polynomial
/// square root, solves for X and checks X, then x_j, for membership in Q[F].
/// A degree-1 relation (a = 0) gives X = -c/b directly. Throws InputError
/// when the relation does not hold and DegenerateInputError when a = b = c
/// = 0. Absent when a root or a membership fails.
std::optional<Recovery> recover_coordinate_quadratic(const PolyMap& f, const AnnihilatorInput& inp,
                                                     const GroebnerLimits& limits = {});

enum class CubicStatus { recovered, absent, not_supported };

struct CubicRecovery {
  CubicStatus status = CubicStatus::absent;
  std::optional<Recovery> recovery;
};

/// The cubic case with b^2 = 3ac: (a X + b/3)^3 = b^3/27 - a^2 d. Any other
/// cubic is not_supported. Throws InputError when the relation fails.
CubicRecovery recover_coordinate_cubic_special(const PolyMap& f, const AnnihilatorInput& inp,
                                               const GroebnerLimits& limits = {});

enum class ExchangeTag { symmetric, skew, neither };
std::string_view to_string(ExchangeTag t);

/// Behaviour of p(x_1, x_2) under x_1 <-> x_2. Zero counts as symmetric.
ExchangeTag exchange_tag(const Polynomial& p);

struct ExchangeSymmetry {
  /// Minimal polynomial of x_1 over Q[F_1, F_2], layout as
  /// symbolic_coordinate_minpoly.
  Polynomial minpoly;
  /// c_k(F) in x, k = 0..d_1.
  std::vector<Polynomial> coefficients;
  std::vector<ExchangeTag> tags;
  /// sum_k c_k(F) x_2^k == 0.
  bool conjugate_contained = false;
};

/// n = 2 only; throws UnsupportedError when the symbolic minimal polynomial
/// exceeds `limits`.
ExchangeSymmetry check_exchange_symmetry(const PolyMap& f, const GroebnerLimits& limits = {});

struct CmwDecomposition {
  /// Affine automorphism with g_1 = F_1 and Jacobian equal to F's.
  PolyMap g;
  /// F_2 = g_2 + sum_i c[i] F_1^i.
  std::vector<Rational> c;
};

/// n = 2, Keller, F_1 of degree 1. Throws PreconditionError otherwise and
/// InternalInconsistencyError when F_2 - g_2 is not in Q[F_1].
CmwDecomposition cmw_decompose_2d(const PolyMap& f, const GroebnerLimits& limits = {});

struct DegreeConjectureRecord {
  long d = 0;
  std::size_t n = 0;
  std::size_t D = 0;
  /// d^(n-1) as a decimal string (it can be large).
  std::string bound;
  bool holds = false;
  /// False for non-Keller controls; the conjecture only speaks about Keller
  /// maps.
  bool in_hypothesis = false;
};

/// d = smallest coordinate degree, D from extension_degree, holds = D <=
/// d^(n-1). Requires a dominant map.
DegreeConjectureRecord degree_conjecture_check(const PolyMap& f, std::uint64_t seed,
                                               const GroebnerLimits& limits = {});

struct GcdConjectureRecord {
  std::vector<long> degrees;
  /// gcd(l_u, l_v) for u < v in lexicographic pair order.
  std::vector<long> pairwise_gcds;
  bool applicable = false;
  bool automorphism_confirmed = false;
  /// Applicable but inversion failed.
  bool counterexample_candidate = false;
};

/// Requires is_keller(f). Inverts only when applicable.
GcdConjectureRecord gcd_conjecture_check(const PolyMap& f, const GroebnerLimits& limits = {});

/// MINPOLY_GCD_N (n >= 3, all pairwise gcd(d_u, d_v) = 1), MINPOLY_GCD_2D
/// (n = 2, gcd 1) or MINPOLY_GCD_LE2_2D (n = 2, gcd 2); NONE otherwise.
/// Cross-checked by inversion. Requires is_keller(f).
Certificate minpoly_gcd_criterion(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits = {});

struct ClassifyOptions {
  std::uint64_t seed = 0;
  GroebnerLimits limits;
  /// Optional annihilators for the MINPOLY_QUADRATIC / MINPOLY_POWER rules.
  std::vector<AnnihilatorInput> annihilators;
};

/// Tries one rule; NONE when it does not fire. A fired rule is cross-checked
/// by inversion. Requires is_keller(f).
Certificate evaluate_rule(const PolyMap& f, Rule rule, const ClassifyOptions& options = {});

/// First rule of classification_order() that fires. Requires is_keller(f).
/// Throws InternalInconsistencyError if a fired rule is not confirmed by
/// inversion.
Certificate classify(const PolyMap& f, const ClassifyOptions& options = {});

}  // namespace keller
