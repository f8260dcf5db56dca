#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace keller {

/// Exponent vector of fixed length (the ambient variable count).
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  std::uint64_t total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e);

  /// True when this divides `other` componentwise.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

/// Graded reverse lexicographic comparison with x1 > x2 > ... > xn.
/// Returns <0, 0, >0.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace keller
