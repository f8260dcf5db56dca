#include "keller/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "keller/error.hpp"

namespace keller {

namespace {

void require_same_ring(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != q.nvars())
    throw StructuralError("polynomials live in rings with " + std::to_string(p.nvars()) + " and " +
                          std::to_string(q.nvars()) + " variables");
}

// Sorts descending and merges equal monomials in place.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.mono, b.mono) > 0; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational sum = terms[i].coef;
    while (j < terms.size() && terms[j].mono == terms[i].mono) sum += terms[j++].coef;
    if (sgn(sum) != 0) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coef = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists: a + sign*b.
std::vector<Term> merge(const std::vector<Term>& a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (sign < 0) out.back().coef = -out.back().coef;
      ++j;
    } else {
      Rational s = sign < 0 ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (sgn(s) != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw StructuralError("variable index out of range");
  return monomial(Monomial::variable(nvars, index), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != nvars) throw StructuralError("term has wrong variable count");
  Polynomial p(nvars);
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Rational(0);
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.front().mono.total_degree());
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_ring(*this, q);
  terms_ = merge(terms_, q.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  require_same_ring(*this, q);
  terms_ = merge(terms_, q.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  Polynomial r(p.nvars());
  if (p.is_zero() || q.is_zero()) return r;
  if (q.size() == 1 || p.size() == 1) {
    const Polynomial& single = p.size() == 1 ? p : q;
    const Polynomial& other = p.size() == 1 ? q : p;
    const Term& s = single.terms_[0];
    // Multiplying by a monomial preserves the order.
    r.terms_.reserve(other.size());
    for (const auto& t : other.terms_) r.terms_.push_back(Term{t.mono * s.mono, t.coef * s.coef});
    return r;
  }
  std::vector<Term> prods;
  prods.reserve(p.size() * q.size());
  for (const auto& a : p.terms_)
    for (const auto& b : q.terms_) prods.push_back(Term{a.mono * b.mono, a.coef * b.coef});
  canonicalize(prods);
  r.terms_ = std::move(prods);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw StructuralError("variable index out of range");
  Polynomial d(nvars_);
  for (const auto& t : terms_) {
    auto e = t.mono[var];
    if (e == 0) continue;
    Term dt{t.mono, t.coef * e};
    dt.mono.set(var, e - 1);
    d.terms_.push_back(std::move(dt));
  }
  // Lowering one exponent can reorder terms.
  canonicalize(d.terms_);
  return d;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars_)
    throw StructuralError("substitute: expected " + std::to_string(nvars_) + " images, got " +
                          std::to_string(images.size()));
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw StructuralError("substitute: images live in different rings");
  if (images.empty()) return constant(0, constant_term());

  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(constant(target, Rational(1)));
    while (row.size() <= e) row.push_back(row.back() * images[i]);
    return row[e];
  };

  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coef);
    for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i)
      if (t.mono[i] != 0) prod *= power(i, t.mono[i]);
    acc.insert(acc.end(), prod.terms_.begin(), prod.terms_.end());
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::permute_variables(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw StructuralError("permutation has wrong length");
  std::vector<bool> seen(nvars_, false);
  for (auto v : perm) {
    if (v >= nvars_ || seen[v]) throw StructuralError("invalid permutation");
    seen[v] = true;
  }
  return embed(nvars_, perm);
}

Polynomial Polynomial::embed(std::size_t new_nvars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != nvars_) throw StructuralError("embed: variable map has wrong length");
  std::vector<bool> used(new_nvars, false);
  for (auto v : var_map) {
    if (v >= new_nvars || used[v]) throw StructuralError("embed: variable map is not injective");
    used[v] = true;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(new_nvars);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i]) m.set(var_map[i], t.mono[i]);
    out.push_back(Term{std::move(m), t.coef});
  }
  return from_terms(new_nvars, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw StructuralError("evaluate: point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const {
  if (is_zero()) return {};
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.mono.set(var, 0);
    buckets[t.mono[var]].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(nvars_, std::move(b)));
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw StructuralError("division by the zero polynomial");
  Polynomial rem = p;
  std::vector<Term> quot;
  const Term& lq = q.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!lq.mono.divides(lr.mono)) return std::nullopt;
    Polynomial t = Polynomial::monomial(lr.mono / lq.mono, lr.coef / lq.coef);
    quot.push_back(t.terms()[0]);
    rem -= t * q;
  }
  return Polynomial::from_terms(p.nvars(), std::move(quot));
}

std::optional<Polynomial> nth_root(const Polynomial& p, unsigned k) {
  if (k == 0) throw StructuralError("nth_root: k must be positive");
  if (p.is_zero() || k == 1) return p;
  const Term& lead = p.leading_term();
  Monomial root_mono(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    if (lead.mono[i] % k != 0) return std::nullopt;
    root_mono.set(i, lead.mono[i] / k);
  }
  Rational c = lead.coef;
  bool negate = false;
  if (sgn(c) < 0) {
    if (k % 2 == 0) return std::nullopt;
    c = -c;
    negate = true;
  }
  auto cr = rational_root(c, k);
  if (!cr) return std::nullopt;
  Polynomial root = Polynomial::monomial(root_mono, negate ? Rational(-*cr) : *cr);

  // Each step fixes the leading term of p - root^k by adding the next term
  // t of the root: LT(p - r^k) = k * LT(r)^(k-1) * t.
  const Polynomial denom_lt = Polynomial::monomial(root_mono, root.leading_term().coef).pow(k - 1) * Rational(k);
  const Term& dl = denom_lt.leading_term();
  Polynomial residual = p - root.pow(k);
  while (!residual.is_zero()) {
    const Term& lr = residual.leading_term();
    if (!dl.mono.divides(lr.mono)) return std::nullopt;
    Monomial tm = lr.mono / dl.mono;
    if (grevlex_compare(tm, root_mono) >= 0) return std::nullopt;
    root += Polynomial::monomial(tm, lr.coef / dl.coef);
    Polynomial next = p - root.pow(k);
    if (!next.is_zero() && grevlex_compare(next.leading_term().mono, lr.mono) >= 0) return std::nullopt;
    residual = std::move(next);
  }
  return root;
}

}  // namespace keller
