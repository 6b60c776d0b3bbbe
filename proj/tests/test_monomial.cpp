#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace borel;
using borel::testing::M;
using borel::testing::string_set;

TEST(Monomial, DegreeAndSupport) {
  EXPECT_EQ(M("1").total_degree(), 0);
  EXPECT_EQ(M("x1^2*x3").total_degree(), 3);
  EXPECT_EQ(M("x1*x2*x3").total_degree(), 3);
  EXPECT_EQ(M("1").max_supp(), 0);
  EXPECT_EQ(M("x1^2*x3").max_supp(), 3);
  EXPECT_EQ(M("x2^5").max_supp(), 2);
}

TEST(Monomial, TrailingZerosAreDropped) {
  EXPECT_EQ(Monomial(std::vector<int>{1, 0, 0}), M("x1"));
  EXPECT_EQ(Monomial(std::vector<int>{0, 0}), M("1"));
  EXPECT_EQ(M("x1").exponents(3), (std::vector<int>{1, 0, 0}));
}

TEST(Monomial, ParseAndPrint) {
  EXPECT_EQ(M("x3*x1^2").to_string(), "x1^2*x3");
  EXPECT_EQ(M("[2,0,1]"), M("x1^2*x3"));
  EXPECT_EQ(M("x2*x2"), M("x2^2"));
  EXPECT_EQ(M("1").to_string(), "1");
  for (const char* bad : {"", "x0", "y1", "x1^", "x1**x2", "x1^-2", "[1,-1]", "x1 x2"})
    EXPECT_THROW(parse_monomial(bad), parse_error) << bad;
}

TEST(Monomial, Divides) {
  EXPECT_TRUE(divides(M("1"), M("x2^3*x4")));
  EXPECT_TRUE(divides(M("x1*x2"), M("x1^2*x2*x3")));
  EXPECT_FALSE(divides(M("x3"), M("x1^2*x2")));
}

TEST(Monomial, GcdLcmQuotient) {
  EXPECT_EQ(gcd(M("x1^2*x3"), M("x1*x2*x3^2")), M("x1*x3"));
  EXPECT_EQ(lcm(M("x1^2*x3"), M("x1*x2*x3^2")), M("x1^2*x2*x3^2"));
  EXPECT_EQ(quotient(M("x1^2*x3"), M("x1")), M("x1*x3"));
  EXPECT_THROW(quotient(M("x1"), M("x2")), precondition_error);
}

TEST(Monomial, StrongMovesUp) {
  EXPECT_TRUE(moves_strong_up(M("x1^3")).empty());
  EXPECT_EQ(string_set(moves_strong_up(M("x1*x2*x3"))), (std::set<std::string>{"x1^2*x3", "x1*x2^2", "x1^2*x2"}));
  EXPECT_EQ(string_set(moves_strong_up(M("x2^2"))), (std::set<std::string>{"x1*x2"}));
}

TEST(Monomial, StableMovesUp) {
  // Only the last variable moves, so x1^2*x3 is not reachable in one step.
  EXPECT_EQ(string_set(moves_stable_up(M("x1*x2*x3"))), (std::set<std::string>{"x1^2*x2", "x1*x2^2"}));
  EXPECT_TRUE(moves_stable_up(M("x1^4")).empty());
  EXPECT_EQ(string_set(moves_stable_up(M("x3^2"))), (std::set<std::string>{"x1*x3", "x2*x3"}));
}

TEST(Monomial, StrongMovesDownInvertUp) {
  for (const auto& m : monomials_up_to_degree(4, 4))
    for (const auto& u : moves_strong_up(m)) {
      const auto down = moves_strong_down(u, 4);
      EXPECT_NE(std::find(down.begin(), down.end(), m), down.end()) << m.to_string() << " -> " << u.to_string();
    }
}

TEST(Monomial, Potentials) {
  EXPECT_EQ(f_potential(M("1")), 0);
  EXPECT_EQ(f_potential(M("x1*x2*x3")), 6);
  EXPECT_EQ(f_potential(M("x1^2*x3")), 5);
  EXPECT_EQ(g_potential(M("1")), std::make_pair(0L, 0L));
  EXPECT_EQ(g_potential(M("x2")), std::make_pair(-1L, 2L));
  EXPECT_EQ(g_potential(M("x1*x3")), std::make_pair(-2L, 4L));
}

TEST(Monomial, EveryStrongMoveLowersThePotential) {
  for (const auto& m : monomials_up_to_degree(4, 5))
    for (const auto& u : moves_strong_up(m)) EXPECT_LT(f_potential(u), f_potential(m));
}

TEST(Monomial, EnumerationSizes) {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 6; ++d) {
      const auto g = monomials_of_degree(n, d);
      EXPECT_EQ(g.size(), binomial_u64(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d)));
      for (const auto& m : g) {
        EXPECT_EQ(m.total_degree(), d);
        EXPECT_LE(m.max_supp(), n);
      }
      EXPECT_EQ(std::set<Monomial>(g.begin(), g.end()).size(), g.size());
    }
  EXPECT_EQ(monomials_of_degree(3, 2).front(), M("x1^2"));
  EXPECT_EQ(monomials_up_to_degree(3, 2).size(), 10u);
}

TEST(Monomial, ArithmeticLaws) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(0, 3);
  auto pick = [&] { return Monomial(std::vector<int>{e(rng), e(rng), e(rng), e(rng), e(rng)}); };
  for (int k = 0; k < 500; ++k) {
    const auto a = pick(), b = pick(), c = pick();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(gcd(a, b) * lcm(a, b), a * b);
    EXPECT_EQ(gcd(a * c, b * c), gcd(a, b) * c);
    EXPECT_TRUE(divides(a, a * b));
    EXPECT_EQ(parse_monomial(a.to_string()), a);
    EXPECT_EQ(std::hash<Monomial>{}(a), std::hash<Monomial>{}(parse_monomial(a.to_string())));
  }
}
