#include <algorithm>
#include <random>

#include "keller/endo.hpp"
#include "keller/error.hpp"

namespace keller {

namespace {

constexpr int kRejectionBudget = 1000;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  long nonzero(long bound) {
    long v = uniform(-bound, bound - 1);
    return v >= 0 ? v + 1 : v;
  }

  // Monomial of the given total degree in the variables `vars`.
  Monomial monomial(std::size_t nvars, const std::vector<std::size_t>& vars, unsigned degree) {
    Monomial m(nvars);
    for (unsigned k = 0; k < degree; ++k) {
      auto v = vars[static_cast<std::size_t>(uniform(0, static_cast<long>(vars.size()) - 1))];
      m.set(v, m[v] + 1);
    }
    return m;
  }

  // One or two terms of degree 2..max_degree in `vars`.
  Polynomial sparse(std::size_t nvars, const std::vector<std::size_t>& vars, unsigned max_degree) {
    Polynomial p(nvars);
    if (vars.empty() || max_degree < 2) return p;
    long terms = uniform(1, 2);
    for (long t = 0; t < terms; ++t) {
      auto d = static_cast<unsigned>(uniform(2, max_degree));
      p += Polynomial::monomial(monomial(nvars, vars, d), nonzero(5));
    }
    return p;
  }

  RationalMatrix invertible_matrix(std::size_t n) {
    for (;;) {
      RationalMatrix a(n, std::vector<Rational>(n));
      for (auto& row : a)
        for (auto& e : row) e = uniform(-5, 5);
      if (sgn(matrix_determinant(a)) != 0) return a;
    }
  }

 private:
  std::mt19937_64 rng_;
};

PolyMap triangular(Sampler& s, std::size_t n, unsigned degree) {
  std::vector<Polynomial> c;
  std::vector<std::size_t> earlier;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(Polynomial::variable(n, i) + s.sparse(n, earlier, degree) + Polynomial::constant(n, s.uniform(-5, 5)));
    earlier.push_back(i);
  }
  return PolyMap(std::move(c));
}

// x_i -> x_i + p(x_j, j != i) for one random i, identity elsewhere.
PolyMap elementary(Sampler& s, std::size_t n, unsigned degree) {
  auto i = static_cast<std::size_t>(s.uniform(0, static_cast<long>(n) - 1));
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) others.push_back(j);
  std::vector<Polynomial> c;
  for (std::size_t j = 0; j < n; ++j) c.push_back(Polynomial::variable(n, j));
  c[i] += s.sparse(n, others, degree);
  return PolyMap(std::move(c));
}

PolyMap affine(Sampler& s, std::size_t n) {
  auto f = linear_map(s.invertible_matrix(n));
  std::vector<Polynomial> c(f.coords().begin(), f.coords().end());
  for (auto& p : c) p += Polynomial::constant(n, s.uniform(-5, 5));
  return PolyMap(std::move(c));
}

PolyMap composed(Sampler& s, std::size_t n, unsigned degree, unsigned factors) {
  PolyMap f = PolyMap::identity(n);
  for (unsigned k = 0; k < factors; ++k) f = compose(f, k % 2 == 0 ? elementary(s, n, degree) : affine(s, n));
  return f;
}

PolyMap druzkowski(Sampler& s, std::size_t n) {
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) a[i][j] = s.uniform(-5, 5);
  return druzkowski_map(a);
}

std::vector<std::size_t> all_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

PolyMap lang_maslamani(Sampler& s, std::size_t n, unsigned degree) {
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < n; ++i) {
      auto m = s.monomial(n, all_vars(n), static_cast<unsigned>(s.uniform(2, std::max(2u, degree))));
      c.push_back(Polynomial::variable(n, i) + Polynomial::monomial(m, s.uniform(-5, 5)));
    }
    PolyMap f(std::move(c));
    if (is_keller(f)) return f;
  }
  throw BudgetExceededError("lang_maslamani: no Keller map in 1000 draws");
}

PolyMap essen_form(Sampler& s, std::size_t n, std::size_t r, unsigned degree) {
  if (r > n) throw PreconditionError("essen_form needs r <= n");
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::vector<Polynomial> c;
    for (std::size_t i = 0; i < r; ++i) {
      Polynomial l(n);
      for (std::size_t k = 0; k < n; ++k)
        if (s.uniform(0, 1)) l += Polynomial::variable(n, k) * Polynomial::constant(n, s.uniform(-5, 5));
      c.push_back(std::move(l));
    }
    for (std::size_t i = r; i < n; ++i) {
      auto others = all_vars(n);
      others.erase(others.begin() + static_cast<long>(i));
      auto m = s.monomial(n, others, static_cast<unsigned>(s.uniform(2, std::max(2u, degree))));
      c.push_back(Polynomial::variable(n, i) + Polynomial::monomial(m, 1));
    }
    PolyMap f(std::move(c));
    if (is_keller(f)) return f;
  }
  throw BudgetExceededError("essen_form: no Keller map in 1000 draws");
}

}  // namespace

PolyMap druzkowski_map(const RationalMatrix& a) {
  const std::size_t n = a.size();
  auto ax = linear_map(a);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(Polynomial::variable(n, i) + ax[i].pow(3));
  return PolyMap(std::move(c));
}

std::optional<RationalMatrix> druzkowski_matrix(const PolyMap& f) {
  const std::size_t n = f.n();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial cube = f[i] - Polynomial::variable(n, i);
    if (cube.is_zero()) continue;
    auto form = nth_root(cube, 3);
    if (!form || form->total_degree() != 1) return std::nullopt;
    for (const auto& t : form->terms()) {
      if (t.mono.total_degree() != 1) return std::nullopt;
      for (std::size_t j = 0; j < n; ++j)
        if (t.mono[j] == 1) a[i][j] = t.coef;
    }
    if (form->pow(3) != cube) return std::nullopt;
  }
  return a;
}

PolyMap generate_family(const GeneratorSpec& spec) {
  if (spec.n == 0) throw PreconditionError("generator needs n >= 1");
  Sampler s(spec.seed);
  PolyMap f = [&] {
    switch (spec.family) {
      case Family::triangular: return triangular(s, spec.n, spec.degree_bound);
      case Family::affine: return affine(s, spec.n);
      case Family::composed: return composed(s, spec.n, spec.degree_bound, spec.factors);
      case Family::druzkowski: return druzkowski(s, spec.n);
      case Family::lang_maslamani: return lang_maslamani(s, spec.n, spec.degree_bound);
      case Family::essen_form: return essen_form(s, spec.n, spec.r, spec.degree_bound);
    }
    throw PreconditionError("unknown family");
  }();
  f.set_provenance(spec);
  return f;
}

}  // namespace keller
