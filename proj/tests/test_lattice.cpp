#include <gtest/gtest.h>

#include "borel/oracles.hpp"
#include "support.hpp"

using namespace borel;
using borel::testing::M;
using borel::testing::P;

TEST(StrongLattice, Examples) {
  const auto p = P("A[n=3,d=3]");
  EXPECT_EQ(meet_A(M("x1^2*x3"), M("x1*x2^2"), p), M("x1*x2*x3"));
  EXPECT_EQ(join_A(M("x1*x2*x3"), M("x2^3"), p), M("x1*x2^2"));
  for (const auto& m : monomials_of_degree(3, 3)) {
    EXPECT_EQ(meet_A(m, m, p), m);
    EXPECT_EQ(join_A(m, m, p), m);
    EXPECT_EQ(meet_A(M("x1^3"), m, p), m);
    EXPECT_EQ(join_A(M("x3^3"), m, p), m);
  }
  EXPECT_THROW(meet_A(M("x1^2"), M("x1"), p), ground_set_error);
}

TEST(StrongLattice, MatchesBruteForce) {
  std::vector<std::pair<PosetId, std::vector<Monomial>>> cases;
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 4; ++d) cases.push_back({make_poset(Family::A, n, d), monomials_of_degree(n, d)});
  cases.push_back({P("A[n=3]"), monomials_up_to_degree(3, 4)});
  for (const auto& [p, g] : cases) {
    const oracle::Relation r(p, g);
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = 0; b < r.size(); ++b) {
        ASSERT_EQ(oracle::infimum(r, a, b), meet_A(g[a], g[b], p)) << p.to_string();
        ASSERT_EQ(oracle::supremum(r, a, b), join_A(g[a], g[b], p)) << p.to_string();
      }
  }
}

TEST(StableLattice, Examples) {
  // Lower bounds of x1*x3 are {x1*x3, x3^2}; of x2^2 they are {x2^2, x2*x3, x3^2}.
  EXPECT_EQ(meet_B(M("x1*x3"), M("x2^2"), 3, 2), M("x3^2"));
  EXPECT_EQ(meet_B(M("x1^2"), M("x2*x3"), 3, 2), M("x2*x3"));
  EXPECT_EQ(join_B(M("x2*x3"), M("x3^2"), 3, 2), M("x2*x3"));
  EXPECT_EQ(join_B(M("x1*x3"), M("x2*x3"), 3, 2), M("x1*x2"));
  for (const auto& m : monomials_of_degree(3, 3)) {
    EXPECT_EQ(meet_B(m, m, 3, 3), m);
    EXPECT_EQ(join_B(M("x1^3"), m, 3, 3), M("x1^3"));
    EXPECT_EQ(meet_B(M("x3^3"), m, 3, 3), M("x3^3"));
  }
}

TEST(StableLattice, MatchesBruteForce) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      const auto g = monomials_of_degree(n, d);
      const oracle::Relation r(make_poset(Family::B, n, d), g);
      for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b) {
          ASSERT_EQ(oracle::infimum(r, a, b), meet_B(g[a], g[b], n, d)) << g[a].to_string() << " " << g[b].to_string();
          ASSERT_EQ(oracle::supremum(r, a, b), join_B(g[a], g[b], n, d)) << g[a].to_string() << " " << g[b].to_string();
        }
    }
}

TEST(LatticeTables, AgreeWithClosedForms) {
  const HasseDiagram h(P("B[n=4,d=3]"));
  LatticeTables t(h);
  ASSERT_TRUE(t.is_lattice());
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      EXPECT_EQ(h.vertex(t.meet(a, b)), meet_B(h.vertex(a), h.vertex(b), 4, 3));
      EXPECT_EQ(h.vertex(t.join(a, b)), join_B(h.vertex(a), h.vertex(b), 4, 3));
    }
}

TEST(LatticeTables, DivisibilityOnBoundedDegreeIsNotALattice) {
  // x1^2 and x2^2 have no upper bound of degree <= 2.
  EXPECT_FALSE(LatticeTables(HasseDiagram(P("D[n=2,d=2]"))).is_lattice());
  EXPECT_THROW(check_distributive(HasseDiagram(P("D[n=2,d=2]"))), structure_error);
}

TEST(Distributivity, StrongIsDistributiveStableIsNot) {
  EXPECT_TRUE(check_distributive(HasseDiagram(P("A[n=3,d=3]"))).distributive);
  EXPECT_TRUE(check_distributive(HasseDiagram(P("A[n=2,d=5]"))).distributive);
  const auto r = check_distributive(HasseDiagram(P("B[n=3,d=2]")));
  EXPECT_FALSE(r.distributive);
  ASSERT_TRUE(r.witness);
  const auto& [a, b, c] = *r.witness;
  EXPECT_NE(meet_B(a, join_B(b, c, 3, 2), 3, 2), join_B(meet_B(a, b, 3, 2), meet_B(a, c, 3, 2), 3, 2));
}

TEST(Pentagon, Examples) {
  const auto n5 = find_N5(HasseDiagram(P("B[n=3,d=2]")));
  ASSERT_TRUE(n5);
  const auto& [bot, a, b, c, top] = *n5;
  EXPECT_EQ(bot, M("x3^2"));
  EXPECT_EQ(top, M("x1*x2"));
  EXPECT_EQ(meet_B(a, b, 3, 2), bot);
  EXPECT_EQ(meet_B(a, c, 3, 2), bot);
  EXPECT_EQ(join_B(a, b, 3, 2), top);
  EXPECT_EQ(join_B(a, c, 3, 2), top);
  EXPECT_FALSE(find_N5(HasseDiagram(P("A[n=3,d=4]"))));
  EXPECT_FALSE(find_N5(HasseDiagram(P("A[n=2,d=1]"))));
}

TEST(Pentagon, StableIsNonModularFromThreeVariablesAndDegreeTwo) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(find_N5(HasseDiagram(make_poset(Family::B, n, d))).has_value(), n >= 3 && d >= 2) << n << "," << d;
}

TEST(Ranks, Examples) {
  EXPECT_EQ(rank_sizes(HasseDiagram(P("A[n=2,d=3]"))), (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_EQ(rank_sizes(HasseDiagram(P("A[n=3,d=2]"))), (std::vector<std::size_t>{1, 1, 2, 1, 1}));
  EXPECT_EQ(rank_sizes(HasseDiagram(P("A[n=3,d=1]"))), (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_THROW(rank_sizes(HasseDiagram(P("B[n=3,d=2]"))), structure_error);
}

TEST(Gaussian, Examples) {
  auto coeffs = [](int a, int b) {
    std::vector<int> out;
    for (const auto& c : gaussian(a, b).coefficients) out.push_back(static_cast<int>(c));
    return out;
  };
  EXPECT_EQ(coeffs(1, 1), (std::vector<int>{1, 1}));
  EXPECT_EQ(coeffs(2, 2), (std::vector<int>{1, 1, 2, 1, 1}));
  EXPECT_EQ(coeffs(4, 0), (std::vector<int>{1}));
  EXPECT_EQ(coeffs(3, 3), (std::vector<int>{1, 1, 2, 3, 3, 3, 3, 2, 1, 1}));
  EXPECT_THROW(gaussian(-1, 2), precondition_error);
}

TEST(Gaussian, MatchesProductFormula) {
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b) {
      const auto g = gaussian(a, b);
      EXPECT_EQ(g.coefficients, oracle::gaussian_by_product(a, b)) << a << "," << b;
      EXPECT_EQ(g.coefficients, gaussian(b, a).coefficients);
    }
}

TEST(Gaussian, RankSizesOfStrongPosets) {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d) {
      const auto rs = rank_sizes(HasseDiagram(make_poset(Family::A, n, d)));
      const auto g = gaussian(n - 1, d).coefficients;
      ASSERT_EQ(rs.size(), g.size());
      for (std::size_t k = 0; k < rs.size(); ++k) EXPECT_EQ(bigint(rs[k]), g[k]);
    }
}

TEST(HeightWidth, Examples) {
  const auto a32 = height_width(HasseDiagram(P("A[n=3,d=2]")));
  EXPECT_EQ(a32.height, 4);
  EXPECT_EQ(a32.width, 2);
  for (int d = 1; d <= 6; ++d) {
    const auto c = height_width(HasseDiagram(make_poset(Family::A, 2, d)));
    EXPECT_EQ(c.height, d);
    EXPECT_EQ(c.width, 1);
  }
  const auto a43 = height_width(HasseDiagram(P("A[n=4,d=3]")));
  EXPECT_EQ(a43.height, 9);
  EXPECT_EQ(a43.width, 3);
}

TEST(HeightWidth, WidthMatchesAntichainScan) {
  for (const char* id : {"A[n=3,d=4]", "B[n=3,d=4]", "D[n=2,d=4]", "A[n=4,d=2]", "C[n=3,d=3]", "B[n=4,d=2]"}) {
    const auto p = P(id);
    const HasseDiagram h(p);
    EXPECT_EQ(height_width(h).width, oracle::max_antichain(oracle::Relation(p, h.vertices()))) << id;
  }
}
