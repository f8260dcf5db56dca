#include <gtest/gtest.h>

#include <random>

#include "keller/error.hpp"
#include "keller/polynomial.hpp"
#include "test_support.hpp"

namespace keller {
namespace {

using testing::P;


TEST(Rational, ParseAndRoots) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_EQ(rational_root(make_rational(8, 27), 3), make_rational(2, 3));
  EXPECT_EQ(rational_root(make_rational(-8, 27), 3), make_rational(-2, 3));
  EXPECT_FALSE(rational_root(make_rational(-4), 2));
  EXPECT_FALSE(rational_root(make_rational(2), 2));
}

TEST(Arithmetic, WorkedExamples) {
  EXPECT_EQ(P("x1 + x2", 2) + P("x1 - x2", 2), P("2*x1", 2));
  EXPECT_EQ(P("x1 + x2", 2).pow(2), P("x1^2 + 2*x1*x2 + x2^2", 2));
  EXPECT_TRUE((P("x1^3 - 7/2*x2 + 1", 2) * Polynomial(2)).is_zero());
  EXPECT_EQ(P("x1 - 1", 1).pow(0), P("1", 1));
}

TEST(Arithmetic, MismatchedRingsThrow) {
  EXPECT_THROW(P("x1", 1) + P("x1", 2), StructuralError);
  EXPECT_THROW(P("x1", 1) * P("x1", 2), StructuralError);
}

TEST(Degree, WorkedExamples) {
  EXPECT_EQ(P("x1^2*x2 + x2", 2).total_degree(), 3);
  EXPECT_EQ(P("5", 2).total_degree(), 0);
  EXPECT_EQ(Polynomial(2).total_degree(), -1);
}

TEST(Degree, AdditiveUnderMultiplication) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto p = testing::random_polynomial(rng, 3, 4, 5);
    auto q = testing::random_polynomial(rng, 3, 4, 5);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).total_degree(), p.total_degree() + q.total_degree());
  }
}

TEST(Substitute, WorkedExamples) {
  std::vector<Polynomial> g{P("x1 + x2^2", 2), P("x2", 2)};
  EXPECT_EQ(P("x1", 2).substitute(g), P("x1 + x2^2", 2));
  std::vector<Polynomial> shift{P("x1 + 1", 2), P("x2", 2)};
  EXPECT_EQ(P("x1^2", 2).substitute(shift), P("x1^2 + 2*x1 + 1", 2));
  auto p = P("3/4*x1^2*x2 - x2 + 5", 2);
  EXPECT_EQ(p.substitute(testing::identity_images(2)), p);
}

TEST(Substitute, LengthMismatchThrows) {
  std::vector<Polynomial> one{P("x1", 2)};
  EXPECT_THROW(P("x1 + x2", 2).substitute(one), StructuralError);
  std::vector<Polynomial> mixed{P("x1", 2), P("x1", 3)};
  EXPECT_THROW(P("x1 + x2", 2).substitute(mixed), StructuralError);
}

TEST(Substitute, AssociativeWithComposition) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto p = testing::random_polynomial(rng, 2, 3, 4);
    auto g = testing::random_map(rng, 2, 2, 3);
    auto h = testing::random_map(rng, 2, 2, 3);
    std::vector<Polynomial> gh;
    for (const auto& gi : g) gh.push_back(gi.substitute(h));
    EXPECT_EQ(p.substitute(g).substitute(h), p.substitute(gh));
  }
}

TEST(Jacobian, WorkedExamples) {
  EXPECT_EQ(jacobian_det(testing::identity_images(3)), P("1", 3));
  std::vector<Polynomial> tri{P("x1", 3), P("x2 + x1^2", 3), P("x3 + x2^2", 3)};
  EXPECT_EQ(jacobian_det(tri), P("1", 3));
  std::vector<Polynomial> sq{P("x1^2", 2), P("x2", 2)};
  EXPECT_EQ(jacobian_det(sq), P("2*x1", 2));
}

TEST(Jacobian, NonSquareThrows) {
  std::vector<Polynomial> f{P("x1", 3), P("x2", 3)};
  EXPECT_THROW(jacobian_det(f), StructuralError);
}

TEST(Jacobian, ChainRule) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = 2 + i % 2;
    auto f = testing::random_map(rng, n, 2, 3);
    auto g = testing::random_map(rng, n, 2, 3);
    std::vector<Polynomial> fg;
    for (const auto& fi : f) fg.push_back(fi.substitute(g));
    EXPECT_EQ(jacobian_det(fg), jacobian_det(f).substitute(g) * jacobian_det(g));
  }
}

TEST(Determinant, BareissMatchesCofactor) {
  // A 7x7 matrix goes through cofactor expansion; its 6x6 leading minor
  // through Bareiss. Compare both paths on the same minors.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<Polynomial>> m(4, std::vector<Polynomial>(4));
    for (auto& row : m)
      for (auto& e : row) e = testing::random_polynomial(rng, 2, 2, 2);
    // Expand by the first row with Bareiss-computed minors.
    Polynomial expected(2);
    for (std::size_t col = 0; col < 4; ++col) {
      std::vector<std::vector<Polynomial>> minor;
      for (std::size_t r = 1; r < 4; ++r) {
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < 4; ++c)
          if (c != col) row.push_back(m[r][c]);
        minor.push_back(row);
      }
      auto term = m[0][col] * determinant(minor);
      expected = col % 2 ? expected - term : expected + term;
    }
    EXPECT_EQ(determinant(m), expected);
  }
  std::vector<std::vector<Polynomial>> id(7, std::vector<Polynomial>(7, Polynomial(1)));
  for (std::size_t i = 0; i < 7; ++i) id[i][i] = P("x1", 1);
  EXPECT_EQ(determinant(id), P("x1^7", 1));
}

TEST(Permute, ExchangeInvolution) {
  std::vector<std::size_t> swap{1, 0};
  EXPECT_EQ(P("x1 + x2", 2).permute_variables(swap), P("x1 + x2", 2));
  EXPECT_EQ(P("x1 - x2", 2).permute_variables(swap), -P("x1 - x2", 2));
  EXPECT_EQ(P("x1^2", 2).permute_variables(swap), P("x2^2", 2));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    auto p = testing::random_polynomial(rng, 3, 4, 6);
    std::vector<std::size_t> t{2, 1, 0};
    EXPECT_EQ(p.permute_variables(t).permute_variables(t), p);
  }
}

TEST(Permute, InvalidPermutationThrows) {
  std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(P("x1", 2).permute_variables(bad), StructuralError);
  std::vector<std::size_t> short_perm{0};
  EXPECT_THROW(P("x1", 2).permute_variables(short_perm), StructuralError);
}

TEST(NthRoot, WorkedExamples) {
  EXPECT_EQ(nth_root(P("x1 + x2", 2).pow(2), 2), P("x1 + x2", 2));
  EXPECT_FALSE(nth_root(P("x1^2 + 1", 2), 2));
  EXPECT_EQ(nth_root(Polynomial(2), 3), Polynomial(2));
}

TEST(NthRoot, SignConvention) {
  // (-x1 + 1)^2 has root x1 - 1 under the positive-leading-coefficient rule.
  EXPECT_EQ(nth_root(P("x1^2 - 2*x1 + 1", 1), 2), P("x1 - 1", 1));
  EXPECT_EQ(nth_root(P("-x1^3", 1), 3), P("-x1", 1));
  EXPECT_FALSE(nth_root(P("-x1^2", 1), 2));
  EXPECT_FALSE(nth_root(P("x1^3", 1), 2));
}

TEST(NthRoot, PowersRoundTrip) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto r = testing::random_polynomial(rng, 3, 3, 4);
    unsigned k = 1 + i % 4;
    auto p = r.pow(k);
    auto root = nth_root(p, k);
    ASSERT_TRUE(root) << to_string(r) << " k=" << k;
    EXPECT_EQ(root->pow(k), p);
  }
}

TEST(NthRoot, NonPowersRejected) {
  std::mt19937_64 rng(29);
  int rejected = 0;
  for (int i = 0; i < 40; ++i) {
    auto r = testing::random_polynomial(rng, 2, 3, 4);
    auto p = r * r + P("x1", 2);
    auto root = nth_root(p, 2);
    if (!root) {
      ++rejected;
      continue;
    }
    EXPECT_EQ(root->pow(2), p);
  }
  EXPECT_GT(rejected, 30);
}

TEST(DivideExact, Basics) {
  auto q = P("x1 - x2", 2);
  auto r = P("x1^2 + 3*x2 - 1/2", 2);
  EXPECT_EQ(divide_exact(q * r, q), r);
  EXPECT_FALSE(divide_exact(r + P("1", 2), q));
}

TEST(Text, CanonicalPrinting) {
  EXPECT_EQ(to_string(P("5 - x2 + 3/4*x3*x1^2", 3)), "3/4*x1^2*x3 - x2 + 5");
  EXPECT_EQ(to_string(P("-x1", 1)), "-x1");
  EXPECT_EQ(to_string(Polynomial(2)), "0");
  EXPECT_EQ(to_string(P("2x1 x1 - 3", 1)), "2*x1^2 - 3");
  EXPECT_EQ(to_string(P("x1 - x1", 1)), "0");
}

TEST(Text, ParseErrorsNameColumn) {
  try {
    parse_polynomial("x1 + y", 2);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_polynomial("", 2), InputError);
  EXPECT_THROW(parse_polynomial("x1 +", 2), InputError);
  EXPECT_THROW(parse_polynomial("x3", 2), InputError);
  EXPECT_THROW(parse_polynomial("x1^", 2), InputError);
  EXPECT_THROW(parse_polynomial("x1 * ", 2), InputError);
  EXPECT_THROW(parse_polynomial("1/0*x1", 2), InputError);
}

TEST(Text, RoundTripProperty) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto p = testing::random_polynomial(rng, 4, 5, 7, 50);
    p *= make_rational(1 + i % 7, 1 + i % 5);
    std::string s = to_string(p);
    auto back = parse_polynomial(s, 4);
    EXPECT_EQ(back, p);
    EXPECT_EQ(to_string(back), s);
  }
}

TEST(CoefficientsIn, Reassembles) {
  auto p = P("x1^2*x2 + 3*x2^2 - x1 + 4", 2);
  auto cs = p.coefficients_in(1);
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], P("-x1 + 4", 2));
  EXPECT_EQ(cs[1], P("x1^2", 2));
  EXPECT_EQ(cs[2], P("3", 2));
}

}  // namespace
}  // namespace keller
