#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "keller/endo.hpp"
#include "keller/groebner.hpp"

namespace keller {

/// Deterministic stream of integer sample values in [-10^4, 10^4].
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : rng_(seed) {}
  Rational next();
  std::vector<Rational> point(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

/// SplitMix64 finalizer applied to seed + k * golden ratio; independent
/// child seeds for sub-computations and per-map streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k);

/// One sampled specialization and what it measured (nullopt: infinite or
/// otherwise unusable fibre).
struct Sample {
  std::vector<Rational> point;
  std::optional<std::size_t> value;
};

/// A degree obtained by the two-draw agreement protocol, with the draws.
struct Measurement {
  std::size_t value = 0;
  std::vector<Sample> samples;
};

/// Number of points, with multiplicity, of {x : F(x) = c}; nullopt when the
/// fibre is infinite.
std::optional<std::size_t> fiber_count(const PolyMap& f, std::span<const Rational> c,
                                       const GroebnerLimits& limits = {});

/// D = [Q(x) : Q(F)] as the size of the fibre over random c. Two draws must
/// agree; a third decides by majority. Throws PreconditionError for
/// non-dominant maps and DegenerateSampleError when no majority exists or
/// ten consecutive draws give infinite fibres.
Measurement extension_degree(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits = {});

/// Minimal polynomial of x_i over Q(F).
struct CoordinateMinpoly {
  std::size_t degree = 0;
  /// Minimal polynomial of x_i in Q[x]/(F - c) at the first agreeing draw.
  UnivariatePolynomial specialized;
  std::vector<Rational> sample;
  /// Generator of (F_j(x) - t_j) ∩ Q[T, t] with T = x_i: variables T
  /// (index 0) then t_1..t_n. Present when the symbolic path ran.
  std::optional<Polynomial> symbolic;
  std::vector<Sample> samples;
};

/// d_i by specialization; for n <= 2 and degree <= 6 the symbolic path runs
/// too and must agree (InternalInconsistencyError otherwise). A symbolic
/// computation that exceeds `limits` is skipped.
CoordinateMinpoly coordinate_minpoly(const PolyMap& f, std::size_t i, std::uint64_t seed,
                                     const GroebnerLimits& limits = {});

/// The symbolic path alone; layout as CoordinateMinpoly::symbolic. The
/// result is primitive with positive leading coefficient in T.
Polynomial symbolic_coordinate_minpoly(const PolyMap& f, std::size_t i, const GroebnerLimits& limits = {});

/// Names "T", "t1".."tn" for printing symbolic minimal polynomials.
std::vector<std::string> symbolic_minpoly_names(std::size_t n);

/// x_n = numerator / denominator, both in Q[y_1..y_n, x_1..x_{n-1}]
/// (variables in that order) with y_j standing for F_j.
struct FormanekWitness {
  Polynomial numerator;
  Polynomial denominator;
};

struct FormanekResult {
  bool holds = false;
  /// [Q(x) : Q(F, x_1..x_{n-1})].
  std::size_t degree = 0;
  std::optional<FormanekWitness> witness;
  std::vector<Sample> samples;
};

/// Whether Q(F, x_1, ..., x_{n-1}) = Q(x). The degree is counted on fibres
/// of (F, x_1..x_{n-1}) over images of random points; when it is 1 the
/// witness comes from a Gröbner basis of (y - F(x)) with x_n eliminated
/// first and is verified exactly. The witness is absent when that basis
/// exceeds `limits`.
FormanekResult verify_formanek(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits = {});

/// Names "F1".."Fn", "x1".."x{n-1}" for printing witnesses.
std::vector<std::string> formanek_witness_names(std::size_t n);

/// [Q(x) : Q(F, x_i)] counted on fibres of (F, x_i) over images of random
/// points, two-draw protocol.
Measurement tower_degree(const PolyMap& f, std::size_t i, std::uint64_t seed, const GroebnerLimits& limits = {});

/// Membership in Q[g_1..g_m] through one Gröbner basis of (y - g(x)) under a
/// block order with x > y, reused across queries.
class SubalgebraMembership {
 public:
  explicit SubalgebraMembership(const PolyMap& f, const GroebnerLimits& limits = {});
  /// Any nonempty list of generators sharing one ring.
  explicit SubalgebraMembership(std::span<const Polynomial> gens, const GroebnerLimits& limits = {});

  /// Polynomial w in y_1..y_m (stored in m variables) with w(g) = h, or
  /// nullopt when h is not in Q[g]. The reconstruction is checked exactly.
  std::optional<Polynomial> witness(const Polynomial& h) const;

  std::span<const Polynomial> generators() const { return gens_; }

 private:
  std::vector<Polynomial> gens_;
  GroebnerBasis basis_;
};

std::optional<Polynomial> subalgebra_membership(const Polynomial& h, const PolyMap& f,
                                                const GroebnerLimits& limits = {});

enum class ClosureVerdict { consistent, violation };

struct RootClosure {
  ClosureVerdict verdict = ClosureVerdict::consistent;
  bool power_member = false;
  bool root_member = false;
};

/// Compares membership of g^m and g in Q[F]; g^m in and g out would mean Q[F]
/// is not root closed. Requires is_keller(f).
RootClosure root_closure_check(const Polynomial& g, unsigned m, const PolyMap& f,
                               const GroebnerLimits& limits = {});

struct ExtensionReport {
  std::size_t D = 0;
  std::vector<std::size_t> d;
  bool formanek_ok = false;
  std::optional<FormanekWitness> witness;
  /// One line per measured quantity naming the path that produced it.
  std::vector<std::string> notes;
};

/// D, every d_i and the Formanek check with seeds derived from `seed`.
ExtensionReport analyze_extension(const PolyMap& f, std::uint64_t seed, const GroebnerLimits& limits = {});

}  // namespace keller
