#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace borel;
using borel::testing::M;

TEST(TermOrder, Comparisons) {
  EXPECT_EQ(compare(TermOrder::lex(), M("x1"), M("x2^5")), Cmp::Greater);
  EXPECT_EQ(compare(TermOrder::deglex(), M("x1"), M("x2^5")), Cmp::Less);
  EXPECT_EQ(compare(TermOrder::degrevlex(), M("x1*x3"), M("x2^2")), Cmp::Less);
  EXPECT_EQ(compare(TermOrder::deglex(), M("x1*x3"), M("x2^2")), Cmp::Greater);
  for (const auto& o : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex(), TermOrder::weighted({3, 2, 1})})
    for (const auto& m : monomials_up_to_degree(3, 3)) EXPECT_EQ(compare(o, m, m), Cmp::Equal);
  EXPECT_THROW(compare(TermOrder::weighted({2, 1}), M("x3"), M("x1")), precondition_error);
  EXPECT_EQ(parse_term_order("degrevlex"), TermOrder::degrevlex());
  EXPECT_THROW(parse_term_order("grevlex"), parse_error);
}

TEST(TermOrder, TotalAndMultiplicative) {
  const auto g = monomials_up_to_degree(3, 3);
  for (const auto& o : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex(), TermOrder::weighted({5, 3, 2}, true)})
    for (const auto& a : g)
      for (const auto& b : g) {
        const auto c = compare(o, a, b);
        EXPECT_EQ(c == Cmp::Equal, a == b) << o.to_string();
        EXPECT_EQ(compare(o, b, a), c == Cmp::Less ? Cmp::Greater : (c == Cmp::Greater ? Cmp::Less : Cmp::Equal));
        for (const auto& t : {M("x1"), M("x2*x3"), M("x3^2")}) EXPECT_EQ(compare(o, t * a, t * b), c) << o.to_string();
      }
}

TEST(Refinement, StandardOrdersRefineTheStrongOrder) {
  EXPECT_FALSE(refines_A(TermOrder::lex(), 3, 5));
  EXPECT_FALSE(refines_A(TermOrder::degrevlex(), 4, 5));
  for (int n = 1; n <= 4; ++n)
    for (const auto& o : {TermOrder::lex(), TermOrder::deglex(), TermOrder::degrevlex()}) EXPECT_FALSE(refines_A(o, n, 6)) << o.to_string();
}

TEST(Refinement, WrongVariableOrderIsCaught) {
  const auto v = refines_A(TermOrder::weighted({1, 2, 3}), 3, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->first, M("x2"));
  EXPECT_EQ(v->second, M("x1"));
}

TEST(Refinement, RandomWeightOrders) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const auto o = random_weighted_order(4, rng, k % 2 == 0);
    EXPECT_FALSE(refines_A(o, 4, 6)) << o.to_string();
    if (o.degree_first) {
      EXPECT_FALSE(refines_ordinal_sum(o, 4, 4)) << o.to_string();
    }
  }
}

TEST(Refinement, LexIsNotDegreeCompatible) {
  EXPECT_TRUE(refines_ordinal_sum(TermOrder::lex(), 2, 2));
  EXPECT_FALSE(refines_ordinal_sum(TermOrder::deglex(), 3, 5));
  EXPECT_FALSE(refines_ordinal_sum(TermOrder::degrevlex(), 3, 5));
}

TEST(OrdinalSum, Direction) {
  EXPECT_FALSE(ordinal_sum_leq(M("x3^2"), M("x1"), 3));
  EXPECT_TRUE(ordinal_sum_leq(M("x1"), M("x3^2"), 3));
  EXPECT_TRUE(ordinal_sum_leq(M("x2"), M("x1"), 3));
  for (const auto& m : monomials_up_to_degree(3, 3)) EXPECT_TRUE(ordinal_sum_leq(m, m, 3));
}

TEST(Witnesses, Example) {
  const auto w = separating_witnesses(M("x1*x3"), M("x2^2"), 3);
  EXPECT_EQ(w.greater, TermOrder::weighted({4, 2, 1}));
  EXPECT_EQ(w.less, TermOrder::weighted({4, 3, 1}));
  EXPECT_EQ(compare(w.greater, M("x1*x3"), M("x2^2")), Cmp::Greater);
  EXPECT_EQ(compare(w.less, M("x1*x3"), M("x2^2")), Cmp::Less);
}

TEST(Witnesses, AnalogousPair) {
  const auto w = separating_witnesses(M("x1*x3^2"), M("x2^3"), 3);
  EXPECT_EQ(compare(w.greater, M("x1*x3^2"), M("x2^3")), Cmp::Greater);
  EXPECT_EQ(compare(w.less, M("x1*x3^2"), M("x2^3")), Cmp::Less);
}

TEST(Witnesses, ComparablePairIsRejected) {
  EXPECT_THROW(separating_witnesses(M("x1*x2"), M("x2^2"), 3), precondition_error);
  EXPECT_THROW(separating_witnesses(M("x1"), M("x3^2"), 3, true), precondition_error);
}

TEST(Witnesses, EveryStrongAntichainPair) {
  const auto g = monomials_up_to_degree(3, 4);
  int pairs = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (leq_A(g[i], g[j]) || leq_A(g[j], g[i])) continue;
      ++pairs;
      const auto w = separating_witnesses(g[i], g[j], 3);
      EXPECT_EQ(compare(w.greater, g[i], g[j]), Cmp::Greater);
      EXPECT_EQ(compare(w.less, g[i], g[j]), Cmp::Less);
      EXPECT_FALSE(refines_A(w.greater, 3, 4));
      EXPECT_FALSE(refines_A(w.less, 3, 4));
    }
  EXPECT_EQ(pairs, 140);
}

TEST(Witnesses, DegreeCompatibleSandwich) {
  const auto g = monomials_up_to_degree(3, 4);
  std::vector<TermOrder> sample{TermOrder::deglex(), TermOrder::degrevlex()};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (ordinal_sum_leq(g[i], g[j], 3) || ordinal_sum_leq(g[j], g[i], 3)) continue;
      const auto w = separating_witnesses(g[i], g[j], 3, true);
      sample.push_back(w.greater);
      sample.push_back(w.less);
    }
  for (const auto& a : g)
    for (const auto& b : g) {
      const bool all = std::all_of(sample.begin(), sample.end(), [&](const TermOrder& o) { return compare(o, a, b) != Cmp::Greater; });
      EXPECT_EQ(all, ordinal_sum_leq(a, b, 3)) << a.to_string() << " " << b.to_string();
    }
}
