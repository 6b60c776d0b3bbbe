#include <gtest/gtest.h>

#include "borel/oracles.hpp"
#include "support.hpp"

using namespace borel;
using borel::testing::M;
using borel::testing::P;

TEST(Young, Examples) {
  EXPECT_TRUE(monomial_to_young(M("1")).empty());
  EXPECT_EQ(monomial_to_young(M("x1^2*x3")).rows(), (std::vector<int>{3, 1, 1}));
  EXPECT_EQ(monomial_to_young(M("x2^2")).rows(), (std::vector<int>{2, 2}));
  EXPECT_EQ(young_to_monomial(FerrersDiagram({3, 1, 1})), M("x1^2*x3"));
  EXPECT_THROW(FerrersDiagram({1, 2}), precondition_error);
}

TEST(Young, RoundTripAndIsotone) {
  const auto g = monomials_up_to_degree(4, 5);
  const auto c4 = P("C[n=4]");
  for (const auto& m : g) {
    EXPECT_EQ(young_to_monomial(monomial_to_young(m)), m);
    EXPECT_EQ(monomial_to_young(m).size(), f_potential(m));
    for (const auto& mp : g) EXPECT_EQ(leq(c4, m, mp), monomial_to_young(m).contained_in(monomial_to_young(mp)));
  }
}

TEST(Young, RemoveFirstColumn) {
  EXPECT_TRUE(remove_first_column(FerrersDiagram({1, 1}), 2).empty());
  EXPECT_EQ(remove_first_column(FerrersDiagram({3, 1, 1}), 3).rows(), (std::vector<int>{2}));
  EXPECT_EQ(remove_first_column(FerrersDiagram({4, 4, 2}), 3).rows(), (std::vector<int>{3, 3, 1}));
  EXPECT_THROW(remove_first_column(FerrersDiagram({2, 1}), 3), precondition_error);
}

TEST(DistinctPartitions, Enumeration) {
  for (int bound = 0; bound <= 8; ++bound)
    for (int v = 0; v <= bound * (bound + 1) / 2 + 1; ++v) {
      const auto ps = distinct_partitions(v, bound);
      EXPECT_EQ(bigint(ps.size()), oracle::distinct_partition_count(v, bound));
      for (const auto& p : ps) EXPECT_EQ(p.size(), v);
    }
}

TEST(DistinctPartitions, FilterExamples) {
  EXPECT_TRUE(filter3_to_distinct_partition({}, 3).parts().empty());
  const auto g = monomials_of_degree(3, 4);
  EXPECT_EQ(filter3_to_distinct_partition(MonomialSet(g.begin(), g.end()), 4).parts(), (std::vector<int>{5, 4, 3, 2, 1}));
  const auto F = distinct_partition_to_filter3(DistinctPartition({6, 5, 3, 1}, 8), 7);
  EXPECT_EQ(F.size(), 15u);
  EXPECT_TRUE(is_filter(F, P("A[n=3,d=7]")));
  EXPECT_EQ(filter3_to_distinct_partition(F, 7).parts(), (std::vector<int>{6, 5, 3, 1}));
}

TEST(DistinctPartitions, SquareFreeExamples) {
  EXPECT_EQ(distinct_partition_to_squarefree(DistinctPartition({}, 3), 2), M("1"));
  EXPECT_EQ(distinct_partition_to_squarefree(DistinctPartition({3}, 3), 2), M("x1"));
  EXPECT_EQ(distinct_partition_to_squarefree(DistinctPartition({6, 5, 3, 1}, 8), 7), M("x3*x4*x6*x8"));
  EXPECT_EQ(squarefree_weight(M("x3*x4*x6*x8"), 7), 15);
  EXPECT_THROW(squarefree_to_distinct_partition(M("x1^2"), 3), precondition_error);
}

TEST(DistinctPartitions, RoundTripsAndIsotone) {
  for (int d = 1; d <= 6; ++d) {
    const auto filters = enumerate_filters(HasseDiagram(make_poset(Family::A, 3, d)));
    std::vector<DistinctPartition> parts;
    for (const auto& F : filters) {
      const auto p = filter3_to_distinct_partition(F, d);
      ASSERT_EQ(distinct_partition_to_filter3(p, d), F);
      EXPECT_EQ(p.size(), static_cast<int>(F.size()));
      const auto m = distinct_partition_to_squarefree(p, d);
      EXPECT_EQ(squarefree_to_distinct_partition(m, d), p);
      EXPECT_EQ(squarefree_weight(m, d), p.size());
      parts.push_back(p);
    }
    for (std::size_t i = 0; i < filters.size(); ++i)
      for (std::size_t j = 0; j < filters.size(); ++j) {
        const bool sub = std::includes(filters[j].begin(), filters[j].end(), filters[i].begin(), filters[i].end());
        EXPECT_EQ(sub, parts[i].contained_in(parts[j]));
      }
  }
}

TEST(DistinctPartitions, ThreeWayCardinality) {
  for (int d = 1; d <= 6; ++d) {
    const auto dist = filter_distribution(HasseDiagram(make_poset(Family::A, 3, d)));
    for (std::size_t v = 0; v < dist.size(); ++v) {
      EXPECT_EQ(dist[v], oracle::distinct_partition_count(static_cast<long>(v), d + 1));
      EXPECT_EQ(dist[v], oracle::squarefree_count(static_cast<long>(v), d));
    }
  }
}

namespace {
// The walk and filter drawn for d = 6.
const char* kFigureWalk = "D4 R3 D1 R2 D1 R1 D2 R2";
}

TEST(Walks, FigureExample) {
  const auto w = parse_walk(kFigureWalk, 8);
  const auto F = walk_to_stable_filter(w, 6);
  MonomialSet want;
  for (auto [a, b] : {std::pair{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 4}, {3, 3}, {6, 0}}) want.insert(Monomial{a, b});
  EXPECT_EQ(F, want);
  EXPECT_EQ(walk_weight(w, 6), 8);
  EXPECT_EQ(stable_filter_to_walk(F, 6), w);
  EXPECT_EQ(w.to_string(), kFigureWalk);
}

TEST(Walks, EmptyAndFullFilters) {
  for (int d = 0; d <= 6; ++d) {
    const auto empty = stable_filter_to_walk({}, d);
    std::string stair;
    for (int k = 0; k < d + 2; ++k) stair += std::string(k ? " " : "") + "D1 R1";
    EXPECT_EQ(empty.to_string(), stair);
    EXPECT_EQ(walk_weight(empty, d), 0);
    const auto g = ground_set(make_poset(Family::D, 2, d));
    const auto full = stable_filter_to_walk(MonomialSet(g.begin(), g.end()), d);
    EXPECT_EQ(full.to_string(), "D" + std::to_string(d + 2) + " R" + std::to_string(d + 2));
    EXPECT_EQ(walk_weight(full, d), (d + 1) * (d + 2) / 2);
  }
}

TEST(Walks, ParseErrors) {
  EXPECT_THROW(parse_walk("R1 D1", 1), precondition_error);
  EXPECT_THROW(parse_walk("D2 R1", 2), precondition_error);
  EXPECT_THROW(parse_walk("X1", 1), parse_error);
}

TEST(Walks, RoundTripsForAllWalks) {
  for (int d = 0; d <= 6; ++d) {
    const auto walks = enumerate_walks(d + 2);
    EXPECT_EQ(bigint(walks.size()), count_walks(d + 2));
    EXPECT_EQ(bigint(walks.size()), count_filters(HasseDiagram(make_poset(Family::D, 2, d))));
    for (const auto& w : walks) {
      const auto F = walk_to_stable_filter(w, d);
      EXPECT_EQ(stable_filter_to_walk(F, d), w);
      EXPECT_EQ(walk_weight(w, d), static_cast<long>(F.size()));
    }
  }
}

TEST(Walks, CountsAreCatalan) {
  // Walks in E_{2,k} from (0,k) to (k,0) number catalan(k).
  for (int k = 0; k <= 11; ++k) {
    EXPECT_EQ(count_walks(k), catalan(k));
    EXPECT_EQ(count_walks(k), oracle::walk_count(k));
  }
}

TEST(Walks, StableTotalIsCatalanPrefixSum) {
  for (int d = 0; d <= 6; ++d) {
    bigint sum = 0;
    for (int i = 0; i <= d + 1; ++i) sum += catalan(i);
    EXPECT_EQ(stable_filter_counts(d).total, sum);
  }
}

TEST(Fountains, Examples) {
  EXPECT_EQ(count_fountains(0), 1);
  EXPECT_EQ(count_fountains(1), 1);
  EXPECT_EQ(count_fountains(3), 2);
  for (const auto& f : enumerate_fountains(5)) EXPECT_EQ(f.coins(), 5);
  EXPECT_THROW(Fountain({{0, 1}, {1}}), precondition_error);  // rests on 1 and 2, but 2 is missing
}

TEST(Fountains, GeneratingFunction) {
  const auto gf = fountain_gf_coefficients(12);
  const std::vector<int> want{1, 1, 1, 2, 3, 5, 9, 15, 26, 45, 78, 135, 234};
  ASSERT_EQ(gf.size(), want.size());
  for (std::size_t w = 0; w < want.size(); ++w) {
    EXPECT_EQ(gf[w], want[w]);
    EXPECT_EQ(count_fountains(static_cast<int>(w)), gf[w]);
  }
}

TEST(Fountains, StableFiltersInTheLimit) {
  for (int w = 0; w <= 8; ++w) {
    EXPECT_EQ(limit_filter_count(w), count_fountains(w));
    EXPECT_EQ(stable_filter_counts(w + 1).by_cardinality[static_cast<std::size_t>(w)], count_fountains(w));
  }
  // Larger d does not change the count once d > w.
  EXPECT_EQ(count_filters(HasseDiagram(P("B[n=3,d=7]")), 5), count_fountains(5));
}

TEST(PlanarPartitions, Interior) {
  EXPECT_TRUE(diagram_interior(FerrersDiagram({1})).empty());
  EXPECT_EQ(diagram_interior(FerrersDiagram({3, 2, 1})).rows(), (std::vector<int>{2, 1}));
  EXPECT_EQ(diagram_interior(FerrersDiagram({3, 3})).rows(), (std::vector<int>{2}));
}

TEST(PlanarPartitions, Levels) {
  const PlanarPartition p({{2, 1}, {1}});
  EXPECT_EQ(p.level(0).rows(), (std::vector<int>{2, 1}));
  EXPECT_EQ(p.level(1).rows(), (std::vector<int>{1}));
  EXPECT_TRUE(p.fits(1));
  EXPECT_FALSE(PlanarPartition({{1}, {1}}).fits(3));  // repeated row length
  EXPECT_THROW(PlanarPartition({{1, 2}}), precondition_error);
}

TEST(PlanarPartitions, CountStrongFiltersInFourVariables) {
  const std::vector<int> want{2, 5, 16, 66};
  for (int d = 0; d <= 3; ++d) {
    EXPECT_EQ(planar_partition_filter_count(d), want[static_cast<std::size_t>(d)]);
    EXPECT_EQ(planar_partition_filter_count(d), count_filters(HasseDiagram(make_poset(Family::A, 4, d))));
  }
  EXPECT_THROW(planar_partition_filter_count(9), cap_exceeded);
}
