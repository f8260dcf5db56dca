#include "keller/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace keller {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] += b.exps_[i];
  m.degree_ += b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] -= b.exps_[i];
  m.degree_ -= b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  m.degree_ = std::accumulate(m.exps_.begin(), m.exps_.end(), std::uint64_t{0});
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() > b.total_degree() ? 1 : -1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace keller
