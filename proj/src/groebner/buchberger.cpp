#include <algorithm>
#include <set>
#include <string>

#include "keller/error.hpp"
#include "keller/groebner.hpp"

namespace keller {

namespace {

struct ZTerm {
  Monomial mono;
  Integer coef;
};
using ZPoly = std::vector<ZTerm>;

void sort_by(std::vector<Term>& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  Integer g = content(p);
  if (sgn(p.front().coef) < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
}

// Clears denominators; the result is primitive with positive leading
// coefficient.
ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order) {
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  sort_by(terms, order);
  Integer den = 1;
  for (const auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  ZPoly z;
  z.reserve(terms.size());
  for (auto& t : terms) {
    Integer c = t.coef.get_num() * (den / t.coef.get_den());
    z.push_back(ZTerm{std::move(t.mono), std::move(c)});
  }
  make_primitive(z);
  return z;
}

Polynomial to_monic_polynomial(const ZPoly& z, std::size_t nvars) {
  std::vector<Term> terms;
  terms.reserve(z.size());
  const Integer& lc = z.front().coef;
  for (const auto& t : z) {
    Rational c(t.coef, lc);
    c.canonicalize();
    terms.push_back(Term{t.mono, std::move(c)});
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
  std::uint64_t seq;
};

class Engine {
 public:
  Engine(std::size_t nvars, const MonomialOrder& order, const GroebnerLimits& limits)
      : nvars_(nvars), order_(order), limits_(limits), pairs_(PairLess{&order_}) {}

  std::vector<ZPoly> run(std::span<const Polynomial> gens) {
    for (const auto& g : gens) {
      if (g.nvars() != nvars_) throw StructuralError("generator lives in a ring of different size");
      ZPoly z = reduce(to_zpoly(g, order_));
      if (z.empty()) continue;
      std::uint64_t s = static_cast<std::uint64_t>(std::max<long>(g.total_degree(), 0));
      if (add(std::move(z), s)) return unit();
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > limits_.max_pairs)
        throw BudgetExceededError("Buchberger exceeded " + std::to_string(limits_.max_pairs) + " pairs");
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      ZPoly h = reduce(spoly(p));
      if (h.empty()) continue;
      if (add(std::move(h), p.sugar)) return unit();
    }
    return interreduce();
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = order->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return a.seq < b.seq;
    }
  };

  std::vector<ZPoly> unit() {
    ZPoly one{ZTerm{Monomial(nvars_), Integer(1)}};
    return {one};
  }

  const Monomial& lm(std::size_t i) const { return polys_[i].front().mono; }

  ZPoly spoly(const Pair& p) const {
    const ZPoly& f = polys_[p.i];
    const ZPoly& g = polys_[p.j];
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.front().coef.get_mpz_t(), g.front().coef.get_mpz_t());
    Integer cf = g.front().coef / gcd;  // multiplies f
    Integer cg = f.front().coef / gcd;  // multiplies g
    Monomial mf = p.lcm / lm(p.i);
    Monomial mg = p.lcm / lm(p.j);
    return combine(f, 1, cf, mf, g, 1, cg, mg);
  }

  // cf*mf*f[fi..] - cg*mg*g[gi..], merged by order.
  ZPoly combine(const ZPoly& f, std::size_t fi, const Integer& cf, const Monomial& mf, const ZPoly& g,
                std::size_t gi, const Integer& cg, const Monomial& mg) const {
    ZPoly out;
    out.reserve(f.size() - fi + g.size() - gi);
    Monomial a, b;
    bool have_a = false, have_b = false;
    while (fi < f.size() || gi < g.size()) {
      if (!have_a && fi < f.size()) {
        a = f[fi].mono * mf;
        have_a = true;
      }
      if (!have_b && gi < g.size()) {
        b = g[gi].mono * mg;
        have_b = true;
      }
      int c = !have_a ? -1 : !have_b ? 1 : order_.compare(a, b);
      if (c > 0) {
        out.push_back(ZTerm{std::move(a), cf * f[fi].coef});
        ++fi;
        have_a = false;
      } else if (c < 0) {
        out.push_back(ZTerm{std::move(b), -(cg * g[gi].coef)});
        ++gi;
        have_b = false;
      } else {
        Integer v = cf * f[fi].coef - cg * g[gi].coef;
        if (sgn(v) != 0) out.push_back(ZTerm{std::move(a), std::move(v)});
        ++fi;
        ++gi;
        have_a = have_b = false;
      }
    }
    if (out.size() > limits_.max_terms)
      throw BudgetExceededError("intermediate polynomial exceeded " + std::to_string(limits_.max_terms) + " terms");
    return out;
  }

  // Full reduction by the active basis, except `skip`. Result is primitive.
  ZPoly reduce(ZPoly p, std::size_t skip = static_cast<std::size_t>(-1)) const {
    ZPoly result;
    std::size_t head = 0;
    std::size_t steps = 0;
    while (head < p.size()) {
      const Monomial& m = p[head].mono;
      std::size_t divisor = static_cast<std::size_t>(-1);
      for (auto idx : active_) {
        if (idx == skip) continue;
        if (lm(idx).divides(m)) {
          divisor = idx;
          break;
        }
      }
      if (divisor == static_cast<std::size_t>(-1)) {
        result.push_back(std::move(p[head++]));
        continue;
      }
      const ZPoly& g = polys_[divisor];
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), g.front().coef.get_mpz_t(), p[head].coef.get_mpz_t());
      Integer fp = g.front().coef / gcd;
      Integer fg = p[head].coef / gcd;
      Monomial q = m / lm(divisor);
      p = combine(p, head + 1, fp, Monomial(nvars_), g, 1, fg, q);
      head = 0;
      if (fp != 1)
        for (auto& t : result) t.coef *= fp;
      if (++steps % 8 == 0) {
        Integer c = content(p);
        for (const auto& t : result) {
          if (c == 1) break;
          mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.coef.get_mpz_t());
        }
        if (c > 1) {
          for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
          for (auto& t : result) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
        }
      }
    }
    make_primitive(result);
    return result;
  }

  // Gebauer-Möller update. Returns true when h is a nonzero constant.
  bool add(ZPoly h, std::uint64_t sugar) {
    if (h.front().mono.is_one()) return true;
    if (polys_.size() >= limits_.max_basis)
      throw BudgetExceededError("basis exceeded " + std::to_string(limits_.max_basis) + " elements");
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    const Monomial& lh = lm(hi);

    std::vector<Pair> candidates;
    for (auto g : active_) candidates.push_back(make_pair(g, hi));

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool keep = true;
      if (!coprime(lh, lm(p.i))) {
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (lh.divides(p.lcm) && lcm(lm(p.i), lh) != p.lcm && lcm(lm(p.j), lh) != p.lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : kept)
      if (!coprime(lh, lm(p.i))) pairs_.insert(std::move(p));

    std::vector<std::size_t> next;
    for (auto g : active_)
      if (!lh.divides(lm(g))) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
    return false;
  }

  Pair make_pair(std::size_t i, std::size_t j) {
    Monomial l = lcm(lm(i), lm(j));
    std::uint64_t s = std::max(sugars_[i] + (l.total_degree() - lm(i).total_degree()),
                               sugars_[j] + (l.total_degree() - lm(j).total_degree()));
    return Pair{i, j, std::move(l), s, seq_++};
  }

  std::vector<ZPoly> interreduce() {
    std::vector<ZPoly> out;
    out.reserve(active_.size());
    for (auto idx : active_) out.push_back(reduce(polys_[idx], idx));
    std::sort(out.begin(), out.end(),
              [&](const ZPoly& a, const ZPoly& b) { return order_.compare(a.front().mono, b.front().mono) < 0; });
    return out;
  }

  std::size_t nvars_;
  const MonomialOrder& order_;
  GroebnerLimits limits_;
  std::vector<ZPoly> polys_;
  std::vector<std::uint64_t> sugars_;
  std::vector<std::size_t> active_;
  std::set<Pair, PairLess> pairs_;
  std::uint64_t seq_ = 0;
};

}  // namespace

bool GroebnerBasis::is_unit() const { return gens_.size() == 1 && gens_[0].is_constant() && !gens_[0].is_zero(); }

Term GroebnerBasis::leading_term(const Polynomial& p) const {
  if (p.is_zero()) throw StructuralError("leading term of the zero polynomial");
  const Term* best = &p.terms()[0];
  for (const auto& t : p.terms())
    if (order_.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (p.nvars() != nvars_) throw StructuralError("normal_form: polynomial and basis live in different rings");
  std::vector<Term> rest(p.terms().begin(), p.terms().end());
  sort_by(rest, order_);
  std::vector<Term> remainder;
  std::size_t head = 0;
  while (head < rest.size()) {
    const Monomial& m = rest[head].mono;
    std::size_t divisor = gens_.size();
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (leads_[k].divides(m)) {
        divisor = k;
        break;
      }
    if (divisor == gens_.size()) {
      remainder.push_back(std::move(rest[head++]));
      continue;
    }
    // rest[head..] -= c * (m / lead) * g, generators are monic.
    const auto& g = ordered_[divisor];
    Monomial q = m / leads_[divisor];
    Rational c = rest[head].coef;
    std::vector<Term> merged;
    merged.reserve(rest.size() - head + g.size());
    std::size_t a = head + 1, b = 1;
    while (a < rest.size() || b < g.size()) {
      Monomial gm;
      if (b < g.size()) gm = g[b].mono * q;
      int cmp = a == rest.size() ? -1 : b == g.size() ? 1 : order_.compare(rest[a].mono, gm);
      if (cmp > 0) {
        merged.push_back(std::move(rest[a++]));
      } else if (cmp < 0) {
        merged.push_back(Term{std::move(gm), -(c * g[b].coef)});
        ++b;
      } else {
        Rational v = rest[a].coef - c * g[b].coef;
        if (sgn(v) != 0) merged.push_back(Term{std::move(gm), std::move(v)});
        ++a;
        ++b;
      }
    }
    rest = std::move(merged);
    head = 0;
  }
  return Polynomial::from_terms(nvars_, std::move(remainder));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) { return g.normal_form(p); }

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order, const GroebnerLimits& limits) {
  if (gens.empty()) throw StructuralError("buchberger needs at least one generator");
  const std::size_t nvars = gens[0].nvars();
  if (order.nvars() != nvars) throw StructuralError("order and generators disagree on the variable count");
  Engine engine(nvars, order, limits);
  auto basis = engine.run(gens);
  GroebnerBasis g(nvars, order);
  for (const auto& z : basis) {
    Polynomial p = to_monic_polynomial(z, nvars);
    g.leads_.push_back(z.front().mono);
    std::vector<Term> ordered(p.terms().begin(), p.terms().end());
    sort_by(ordered, order);
    g.ordered_.push_back(std::move(ordered));
    g.gens_.push_back(std::move(p));
  }
  g.reduced_ = true;
  return g;
}

std::vector<Polynomial> elimination_ideal(std::span<const Polynomial> gens, std::span<const std::size_t> eliminate,
                                          const GroebnerLimits& limits) {
  if (gens.empty()) throw StructuralError("elimination_ideal needs at least one generator");
  const std::size_t nvars = gens[0].nvars();
  auto order = MonomialOrder::block(nvars, std::vector<std::size_t>(eliminate.begin(), eliminate.end()));
  auto gb = buchberger(gens, order, limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators()) {
    bool free = std::none_of(eliminate.begin(), eliminate.end(), [&](std::size_t v) { return g.uses_variable(v); });
    if (free) out.push_back(g);
  }
  return out;
}

}  // namespace keller
