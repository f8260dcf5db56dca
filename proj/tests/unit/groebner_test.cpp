#include <gtest/gtest.h>

#include <random>

#include "keller/error.hpp"
#include "keller/groebner.hpp"
#include "test_support.hpp"

namespace keller {
namespace {

using testing::P;

// S-polynomial in rational arithmetic, independent of the engine.
Polynomial s_polynomial(const GroebnerBasis& g, const Polynomial& f, const Polynomial& h) {
  Term lf = g.leading_term(f), lh = g.leading_term(h);
  Monomial l = lcm(lf.mono, lh.mono);
  return Polynomial::monomial(l / lf.mono, 1 / lf.coef) * f - Polynomial::monomial(l / lh.mono, 1 / lh.coef) * h;
}

// Buchberger's criterion plus the reduced-basis shape invariants.
void expect_reduced_groebner(const GroebnerBasis& g) {
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    EXPECT_EQ(g.leading_term(gens[i]).coef, 1);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gens[i].terms())
        EXPECT_FALSE(g.leading_monomials()[j].divides(t.mono)) << "generator " << i << " not reduced by " << j;
      if (j > i) EXPECT_TRUE(g.normal_form(s_polynomial(g, gens[i], gens[j])).is_zero());
    }
  }
}

std::vector<Polynomial> random_ideal(std::mt19937_64& rng, std::size_t nvars, std::size_t ngens) {
  std::vector<Polynomial> gens;
  while (gens.size() < ngens) {
    auto p = testing::random_polynomial(rng, nvars, 3, 3);
    if (!p.is_constant()) gens.push_back(p);
  }
  return gens;
}

TEST(NormalForm, WorkedExamples) {
  std::vector<Polynomial> x{P("x1", 2)};
  auto g = buchberger(x, MonomialOrder::grevlex(2));
  EXPECT_TRUE(normal_form(P("x1^2", 2), g).is_zero());
  EXPECT_EQ(normal_form(P("x1 + x2", 2), g), P("x2", 2));
  std::vector<Polynomial> gens{P("x1^2 - x2", 2), P("x2^2 - x1", 2)};
  auto g2 = buchberger(gens, MonomialOrder::grevlex(2));
  auto p = P("x1^5*x2 + 3*x2^4 - 7/3*x1", 2);
  auto once = normal_form(p, g2);
  EXPECT_EQ(normal_form(once, g2), once);
}

TEST(Buchberger, WorkedExamples) {
  std::vector<Polynomial> x{P("x1", 1)};
  auto g = buchberger(x, MonomialOrder::lex(1));
  ASSERT_EQ(g.generators().size(), 1u);
  EXPECT_EQ(g.generators()[0], P("x1", 1));

  std::vector<Polynomial> one{P("1", 2)};
  auto u = buchberger(one, MonomialOrder::grevlex(2));
  EXPECT_TRUE(u.is_unit());

  // Twisted cubic: x1 = t, x2 = t^2, x3 = t^3.
  std::vector<Polynomial> cubic{P("x2 - x1^2", 3), P("x3 - x1^3", 3)};
  auto gl = buchberger(cubic, MonomialOrder::lex(3));
  expect_reduced_groebner(gl);
  bool found = false;
  for (const auto& f : gl.generators()) {
    if (f.uses_variable(0)) continue;
    if (f == P("x2^3 - x3^2", 3) || f == P("x3^2 - x2^3", 3)) found = true;
  }
  EXPECT_TRUE(found);
  // Every element vanishes on the parametrization.
  for (const auto& f : gl.generators()) {
    std::vector<Polynomial> curve{P("x1", 1), P("x1^2", 1), P("x1^3", 1)};
    EXPECT_TRUE(f.substitute(curve).is_zero()) << to_string(f);
  }
}

TEST(Buchberger, ZeroGeneratorsAreIgnored) {
  std::vector<Polynomial> gens{Polynomial(2), P("x1*x2 - 1", 2)};
  auto g = buchberger(gens, MonomialOrder::grevlex(2));
  ASSERT_EQ(g.generators().size(), 1u);
  std::vector<Polynomial> zeros{Polynomial(2)};
  EXPECT_TRUE(buchberger(zeros, MonomialOrder::grevlex(2)).is_zero_ideal());
}

TEST(Buchberger, BudgetIsEnforced) {
  std::vector<Polynomial> gens{P("x1^3 - x2*x3 + 1", 3), P("x2^3 - x1*x3 - 2", 3), P("x3^3 - x1*x2 + 3", 3)};
  GroebnerLimits tiny;
  tiny.max_pairs = 2;
  EXPECT_THROW(buchberger(gens, MonomialOrder::lex(3), tiny), BudgetExceededError);
}

TEST(Buchberger, RandomIdealsSatisfyCriterion) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 15; ++i) {
    auto gens = random_ideal(rng, 3, 3);
    auto order = i % 2 ? MonomialOrder::lex(3) : MonomialOrder::grevlex(3);
    auto g = buchberger(gens, order);
    expect_reduced_groebner(g);
    for (const auto& f : gens) EXPECT_TRUE(g.contains(f));
  }
}

TEST(Buchberger, SameIdealUnderTwoOrdersHasMutualContainment) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 10; ++i) {
    auto gens = random_ideal(rng, 3, 2);
    auto a = buchberger(gens, MonomialOrder::grevlex(3));
    auto b = buchberger(gens, MonomialOrder::block(3, {0}));
    for (const auto& f : a.generators()) EXPECT_TRUE(b.contains(f));
    for (const auto& f : b.generators()) EXPECT_TRUE(a.contains(f));
  }
}

TEST(Buchberger, ReducedBasisIsUniqueAcrossPresentations) {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 10; ++i) {
    auto gens = random_ideal(rng, 3, 3);
    // Same ideal: unimodular recombination plus a redundant member.
    std::vector<Polynomial> other{gens[0] + gens[1] * P("x1 - 2", 3), gens[1], gens[2] - gens[0] * P("3*x2", 3),
                                  gens[0] * gens[2]};
    auto order = MonomialOrder::grevlex(3);
    auto a = buchberger(gens, order);
    auto b = buchberger(other, order);
    ASSERT_EQ(a.generators().size(), b.generators().size());
    for (std::size_t k = 0; k < a.generators().size(); ++k) EXPECT_EQ(a.generators()[k], b.generators()[k]);
  }
}

TEST(Buchberger, ReductionCompatibleWithIdealArithmetic) {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 10; ++i) {
    auto g = buchberger(random_ideal(rng, 3, 3), MonomialOrder::grevlex(3));
    auto p = testing::random_polynomial(rng, 3, 3, 4);
    auto q = testing::random_polynomial(rng, 3, 2, 3);
    auto r = testing::random_polynomial(rng, 3, 3, 4);
    EXPECT_EQ(g.normal_form(p * q + r), g.normal_form(g.normal_form(p) * q + r));
  }
}

TEST(Elimination, WorkedExamples) {
  std::vector<Polynomial> parabola{P("x2 - x1^2", 2)};
  std::vector<std::size_t> x1{0};
  EXPECT_TRUE(elimination_ideal(parabola, x1).empty());

  std::vector<Polynomial> cubic{P("x2 - x1^2", 3), P("x3 - x1^3", 3)};
  auto elim = elimination_ideal(cubic, x1);
  ASSERT_EQ(elim.size(), 1u);
  EXPECT_TRUE(elim[0] == P("x2^3 - x3^2", 3) || elim[0] == P("x3^2 - x2^3", 3)) << to_string(elim[0]);

  std::vector<Polynomial> unit{P("x1*x2", 2), P("x1*x2 + 1", 2)};
  auto u = elimination_ideal(unit, x1);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_EQ(u[0], P("1", 2));
}

TEST(Elimination, ElementsLieInIdealAndAvoidEliminatedVariables) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < 10; ++i) {
    auto gens = random_ideal(rng, 3, 2);
    std::vector<std::size_t> elim{0};
    auto full = buchberger(gens, MonomialOrder::grevlex(3));
    for (const auto& f : elimination_ideal(gens, elim)) {
      EXPECT_FALSE(f.uses_variable(0));
      EXPECT_TRUE(full.contains(f));
    }
  }
}

TEST(Quotient, WorkedExamples) {
  std::vector<Polynomial> gens{P("x1^2 - x2", 2), P("x2^2 - x1", 2)};
  EXPECT_EQ(quotient_dimension(buchberger(gens, MonomialOrder::grevlex(2))), 4u);
  std::vector<Polynomial> x{P("x1", 1)};
  EXPECT_EQ(quotient_dimension(buchberger(x, MonomialOrder::grevlex(1))), 1u);
  std::vector<Polynomial> parabola{P("x2 - x1^2", 2)};
  EXPECT_EQ(quotient_dimension(buchberger(parabola, MonomialOrder::grevlex(2))), std::nullopt);
  std::vector<Polynomial> one{P("1", 2)};
  EXPECT_EQ(quotient_dimension(buchberger(one, MonomialOrder::grevlex(2))), 0u);
}

TEST(Quotient, DimensionIndependentOfOrder) {
  std::mt19937_64 rng(127);
  int zero_dim = 0;
  for (int i = 0; i < 12; ++i) {
    auto gens = random_ideal(rng, 2, 2);
    auto a = quotient_dimension(buchberger(gens, MonomialOrder::grevlex(2)));
    auto b = quotient_dimension(buchberger(gens, MonomialOrder::lex(2)));
    EXPECT_EQ(a, b);
    if (a) ++zero_dim;
  }
  EXPECT_GT(zero_dim, 5);
}

TEST(Quotient, StaircaseClosedUnderDivision) {
  std::vector<Polynomial> gens{P("x1^3 - x2", 2), P("x2^2 - x1*x2 + 1", 2)};
  auto g = buchberger(gens, MonomialOrder::grevlex(2));
  auto s = staircase(g);
  ASSERT_TRUE(s.finite);
  for (const auto& m : s.monomials)
    for (std::size_t v = 0; v < 2; ++v)
      if (m[v] > 0) {
        Monomial d = m;
        d.set(v, m[v] - 1);
        EXPECT_NE(std::find(s.monomials.begin(), s.monomials.end(), d), s.monomials.end());
      }
}

TEST(Minpoly, WorkedExamples) {
  std::vector<Polynomial> sqrt2{P("x1^2 - 2", 1)};
  auto g = buchberger(sqrt2, MonomialOrder::grevlex(1));
  EXPECT_EQ(minpoly_in_quotient(g, P("x1", 1)).to_string(), "T^2 - 2");
  EXPECT_EQ(minpoly_in_quotient(g, Polynomial(1)).to_string(), "T");

  // Hand reduction: y^2 = x, y^3 = xy, y^4 = x^2 = y.
  std::vector<Polynomial> gens{P("x1^2 - x2", 2), P("x2^2 - x1", 2)};
  auto g2 = buchberger(gens, MonomialOrder::grevlex(2));
  EXPECT_EQ(minpoly_in_quotient(g2, P("x2", 2)).to_string(), "T^4 - T");
}

TEST(Minpoly, InfiniteQuotientUnsupported) {
  std::vector<Polynomial> parabola{P("x2 - x1^2", 2)};
  auto g = buchberger(parabola, MonomialOrder::grevlex(2));
  EXPECT_THROW(minpoly_in_quotient(g, P("x1", 2)), UnsupportedError);
}

TEST(Minpoly, AnnihilatesElement) {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 12; ++i) {
    auto gens = random_ideal(rng, 2, 2);
    auto g = buchberger(gens, MonomialOrder::grevlex(2));
    auto dim = quotient_dimension(g);
    if (!dim || *dim == 0) continue;
    auto e = testing::random_polynomial(rng, 2, 2, 3);
    auto mp = minpoly_in_quotient(g, e);
    EXPECT_EQ(mp.coeffs.back(), 1);
    EXPECT_LE(mp.degree(), static_cast<long>(*dim));
    EXPECT_TRUE(g.normal_form(mp.evaluate(e)).is_zero());
  }
}

TEST(Order, BlockOrderEliminates) {
  auto o = MonomialOrder::block(3, {1});
  // Any monomial with x2 beats every monomial without it.
  EXPECT_GT(o.compare(Monomial({0, 1, 0}), Monomial({5, 0, 7})), 0);
  EXPECT_GT(MonomialOrder::lex(2).compare(Monomial({1, 0}), Monomial({0, 9})), 0);
  EXPECT_LT(MonomialOrder::grevlex(2).compare(Monomial({1, 0}), Monomial({0, 2})), 0);
  EXPECT_EQ(o.describe(), "block(grevlex{x2} > grevlex{x1,x3})");
}

}  // namespace
}  // namespace keller
