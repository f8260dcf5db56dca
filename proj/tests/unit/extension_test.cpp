#include <gtest/gtest.h>

#include "keller/error.hpp"
#include "keller/extension.hpp"
#include "test_support.hpp"

namespace keller {
namespace {

using testing::P;

PolyMap M(std::initializer_list<const char*> coords) {
  std::vector<Polynomial> c;
  for (const char* s : coords) c.push_back(P(s, coords.size()));
  return PolyMap(std::move(c));
}

TEST(Extension, SampleStreamIsDeterministicAndBounded) {
  SampleStream a(3), b(3);
  for (int k = 0; k < 1000; ++k) {
    auto v = a.next();
    EXPECT_EQ(v, b.next());
    EXPECT_LE(abs(v), 10000);
  }
}

TEST(Extension, FiberCountExamples) {
  std::vector<Rational> c{4, 9};
  EXPECT_EQ(fiber_count(M({"x1^2", "x2^2"}), c), 4u);
  EXPECT_EQ(fiber_count(M({"x1^2", "x2"}), c), 2u);
  // Over 0 the fibre of x1^2 is a double point.
  std::vector<Rational> zero{0, 0};
  EXPECT_EQ(fiber_count(M({"x1^2", "x2"}), zero), 2u);
  EXPECT_FALSE(fiber_count(M({"x1*x2", "x1"}), zero));
}

TEST(Extension, ExtensionDegreeExamples) {
  EXPECT_EQ(extension_degree(PolyMap::identity(3), 1).value, 1u);
  EXPECT_EQ(extension_degree(M({"x1^2", "x2"}), 1).value, 2u);
  EXPECT_EQ(extension_degree(M({"x1^2", "x2^2"}), 1).value, 4u);
  auto m = extension_degree(M({"x1^2", "x2^2"}), 2);
  EXPECT_EQ(m.samples.size(), 2u);
  EXPECT_THROW(extension_degree(M({"x1 + x2", "x1^2 + 2*x1*x2 + x2^2"}), 1), PreconditionError);
}

TEST(Extension, ExtensionDegreeOfProductMaps) {
  // (p(x1), q(x2)) with random p, q: D = deg p * deg q by construction.
  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    unsigned a = 1 + rng() % 3, b = 1 + rng() % 3;
    Polynomial p = Polynomial::variable(2, 0).pow(a) + Polynomial::constant(2, static_cast<long>(rng() % 7) - 3) *
                                                          Polynomial::variable(2, 1).pow(0);
    Polynomial q = Polynomial::variable(2, 1).pow(b) + Polynomial::variable(2, 1) * Rational(static_cast<long>(rng() % 5));
    PolyMap f({p, q});
    EXPECT_EQ(extension_degree(f, t).value, a * b) << format_map(f);
  }
}

TEST(Extension, EveryGeneratedAutomorphismHasDegreeOne) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto f = generate_family({Family::composed, seed, 2 + seed % 2, 3, 3, 1});
    EXPECT_EQ(extension_degree(f, seed).value, 1u);
    for (std::size_t i = 0; i < f.n(); ++i) EXPECT_EQ(coordinate_minpoly(f, i, seed).degree, 1u);
  }
}

TEST(Extension, CoordinateMinpolyExamples) {
  auto f = M({"x1^2", "x2"});
  auto m1 = coordinate_minpoly(f, 0, 4);
  EXPECT_EQ(m1.degree, 2u);
  ASSERT_TRUE(m1.symbolic);
  EXPECT_EQ(to_string(*m1.symbolic, symbolic_minpoly_names(2)), "T^2 - t1");
  // Specialized: T^2 - c1.
  EXPECT_EQ(m1.specialized.coeffs.size(), 3u);
  EXPECT_EQ(m1.specialized.coeffs[0], -m1.sample[0]);
  EXPECT_EQ(m1.specialized.coeffs[1], 0);

  auto m2 = coordinate_minpoly(f, 1, 4);
  EXPECT_EQ(m2.degree, 1u);
  ASSERT_TRUE(m2.symbolic);
  EXPECT_EQ(to_string(*m2.symbolic, symbolic_minpoly_names(2)), "T - t2");

  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(coordinate_minpoly(PolyMap::identity(3), i, 1).degree, 1u);
}

TEST(Extension, SymbolicMinpolyAnnihilatesCoordinate) {
  std::mt19937_64 rng(23);
  int checked = 0;
  while (checked < 6) {
    PolyMap f(testing::random_map(rng, 2, 2, 3));
    if (!is_dominant(f)) continue;
    for (std::size_t i = 0; i < 2; ++i) {
      auto s = symbolic_coordinate_minpoly(f, i);
      // s(x_i, F_1, F_2) = 0 identically.
      std::vector<Polynomial> images{Polynomial::variable(2, i), f[0], f[1]};
      EXPECT_TRUE(s.substitute(images).is_zero()) << format_map(f);
      EXPECT_EQ(s.degree_in(0), coordinate_minpoly(f, i, checked).degree);
    }
    ++checked;
  }
}

TEST(Extension, FormanekExamples) {
  auto tri = M({"x1", "x2 + x1^2", "x3 + x2^2"});
  auto r = verify_formanek(tri, 1);
  EXPECT_TRUE(r.holds);
  ASSERT_TRUE(r.witness);

  auto sq = verify_formanek(M({"x1^2", "x2^2"}), 1);
  EXPECT_FALSE(sq.holds);
  EXPECT_EQ(sq.degree, 2u);
  EXPECT_FALSE(sq.witness);

  auto half = verify_formanek(M({"x1^2", "x2"}), 1);
  EXPECT_TRUE(half.holds);
  ASSERT_TRUE(half.witness);
  EXPECT_EQ(to_string(half.witness->numerator, formanek_witness_names(2)), "F2");
  EXPECT_EQ(to_string(half.witness->denominator, formanek_witness_names(2)), "1");
}

TEST(Extension, FormanekHoldsOnGeneratedKellerMaps) {
  for (auto fam : {Family::triangular, Family::composed, Family::druzkowski, Family::essen_form}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto f = generate_family({fam, seed, 2 + seed % 2, 3, 2, 1});
      auto r = verify_formanek(f, seed);
      EXPECT_TRUE(r.holds) << format_map(f);
      EXPECT_TRUE(r.witness) << format_map(f);
    }
  }
}

TEST(Extension, MembershipExamples) {
  auto f = M({"x1 + x2^2", "x2 + 1"});
  auto w = subalgebra_membership(f[0] + f[1].pow(2), f);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, P("x1 + x2^2", 2));
  auto seven = subalgebra_membership(Polynomial::constant(2, 7), f);
  ASSERT_TRUE(seven);
  EXPECT_EQ(*seven, Polynomial::constant(2, 7));
  EXPECT_FALSE(subalgebra_membership(P("x1", 2), M({"x1^2", "x2"})));
  EXPECT_TRUE(subalgebra_membership(P("x1^4 + x2^3*x1^2", 2), M({"x1^2", "x2"})));
}

TEST(Extension, RootClosureExamples) {
  auto f = generate_family({Family::composed, 3, 2, 2, 3, 1});
  auto a = root_closure_check(f[0], 3, f);
  EXPECT_EQ(a.verdict, ClosureVerdict::consistent);
  EXPECT_TRUE(a.power_member && a.root_member);
  auto b = root_closure_check(P("x1", 2) + f[1], 2, f);
  EXPECT_EQ(b.verdict, ClosureVerdict::consistent);
  EXPECT_TRUE(b.root_member);

  // Keller maps at this scale are automorphisms, so every g is a member.
  auto id = PolyMap::identity(2);
  EXPECT_EQ(root_closure_check(P("x1*x2 + 3", 2), 2, id).verdict, ClosureVerdict::consistent);
  EXPECT_THROW(root_closure_check(P("x1", 2), 2, M({"x1^2", "x2"})), PreconditionError);
}

TEST(Extension, TowerDegreeExamples) {
  EXPECT_EQ(tower_degree(M({"x1^2", "x2^2"}), 0, 1).value, 2u);
  EXPECT_EQ(tower_degree(M({"x1^2", "x2"}), 0, 1).value, 1u);
  EXPECT_EQ(tower_degree(M({"x1^2", "x2"}), 1, 1).value, 2u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(tower_degree(PolyMap::identity(3), i, 1).value, 1u);
}

TEST(Extension, TowerMultiplicativity) {
  std::mt19937_64 rng(29);
  int checked = 0;
  while (checked < 8) {
    PolyMap f(testing::random_map(rng, 2, 3, 3));
    if (!is_dominant(f)) continue;
    auto D = extension_degree(f, checked).value;
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_EQ(D, coordinate_minpoly(f, i, checked).degree * tower_degree(f, i, checked).value) << format_map(f);
    ++checked;
  }
}

TEST(Extension, FormanekInBothOrdersForcesEqualCoordinateDegrees) {
  // Q(F, x1) = Q(F, x2) = Q(x) gives d1 = D = d2. One order alone does not:
  // (x1^2, x2) has Q(F, x1) = Q(x) but d1 = 2, d2 = 1.
  auto half = M({"x1^2", "x2"});
  EXPECT_TRUE(verify_formanek(half, 1).holds);
  EXPECT_EQ(coordinate_minpoly(half, 0, 1).degree, 2u);
  EXPECT_EQ(coordinate_minpoly(half, 1, 1).degree, 1u);

  std::mt19937_64 rng(31);
  int checked = 0, both = 0;
  while (checked < 12) {
    PolyMap f(testing::random_map(rng, 2, 2, 3));
    if (!is_dominant(f)) continue;
    ++checked;
    if (tower_degree(f, 0, checked).value != 1 || tower_degree(f, 1, checked).value != 1) continue;
    ++both;
    auto D = extension_degree(f, checked).value;
    EXPECT_EQ(coordinate_minpoly(f, 0, checked).degree, D) << format_map(f);
    EXPECT_EQ(coordinate_minpoly(f, 1, checked).degree, D) << format_map(f);
  }
  EXPECT_GT(both, 0);
}

TEST(Extension, AnalyzeCollectsEverything) {
  auto r = analyze_extension(M({"x1^2", "x2^2"}), 5);
  EXPECT_EQ(r.D, 4u);
  EXPECT_EQ(r.d, (std::vector<std::size_t>{2, 2}));
  EXPECT_FALSE(r.formanek_ok);
  EXPECT_EQ(r.notes.size(), 4u);
}

}  // namespace
}  // namespace keller
