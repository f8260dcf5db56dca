#include "keller/error.hpp"
#include "keller/extension.hpp"
#include "sampling.hpp"

namespace keller {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational SampleStream::next() { return Rational(static_cast<long>(rng_() % 20001) - 10000); }

std::vector<Rational> SampleStream::point(std::size_t n) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(next());
  return p;
}

namespace detail {

namespace {

constexpr int kDrawAttempts = 10;

Sample usable_draw(SampleStream& stream, const std::function<Sample(SampleStream&)>& measure) {
  for (int k = 0; k < kDrawAttempts; ++k) {
    Sample s = measure(stream);
    if (s.value) return s;
  }
  throw DegenerateSampleError("no usable specialization in " + std::to_string(kDrawAttempts) + " draws");
}

}  // namespace

Measurement agree(SampleStream& stream, const std::function<Sample(SampleStream&)>& measure) {
  Measurement m;
  m.samples.push_back(usable_draw(stream, measure));
  m.samples.push_back(usable_draw(stream, measure));
  if (m.samples[0].value == m.samples[1].value) {
    m.value = *m.samples[0].value;
    return m;
  }
  m.samples.push_back(usable_draw(stream, measure));
  const auto& a = m.samples[0].value;
  const auto& b = m.samples[1].value;
  const auto& c = m.samples[2].value;
  if (c == a || c == b) {
    m.value = *c;
    return m;
  }
  throw DegenerateSampleError("three specializations disagree: " + std::to_string(*a) + ", " + std::to_string(*b) +
                              ", " + std::to_string(*c));
}

std::vector<Polynomial> shifted(const PolyMap& f, std::span<const Rational> c) {
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < f.n(); ++j) gens.push_back(f[j] - Polynomial::constant(f.n(), c[j]));
  return gens;
}

std::vector<Rational> image(const PolyMap& f, std::span<const Rational> p) {
  std::vector<Rational> c;
  for (const auto& fj : f.coords()) c.push_back(fj.evaluate(p));
  return c;
}

void require_dominant(const PolyMap& f, const char* what) {
  if (!is_dominant(f)) throw PreconditionError(std::string(what) + " needs a dominant map (Jacobian determinant is zero)");
}

Polynomial primitive_in(const Polynomial& p, std::size_t var) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  Polynomial out = p * scale;
  auto lead = out.coefficients_in(var).back().leading_term().coef;
  if (sgn(lead) < 0) out = -out;
  return out;
}

}  // namespace detail
}  // namespace keller
