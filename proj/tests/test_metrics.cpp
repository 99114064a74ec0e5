#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rankfuse/errors.hpp"
#include "rankfuse/metrics.hpp"
#include "test_util.hpp"

using namespace rankfuse;
using rankfuse::testing::R;

namespace {
const Ranking kR1 = R({1, 2, 4, 3, 5});
const Ranking kR2 = R({2, 1, 3, 4, 5});
}  // namespace

TEST(Footrule, Examples) {
  EXPECT_EQ(footrule_distance(kR1, kR2), 4);
  EXPECT_EQ(footrule_distance(kR1, kR1), 0);
  EXPECT_EQ(footrule_distance(R({1, 2, 3}), R({3, 2, 1})), 4);
  EXPECT_THROW(footrule_distance(R({1, 2}), R({1, 3})), Error);
}

TEST(Kendall, Examples) {
  EXPECT_EQ(kendall_distance(kR1, kR2), 2);
  EXPECT_EQ(kendall_distance(kR2, kR2), 0);
  EXPECT_EQ(kendall_distance(R({1, 2, 3}), R({3, 2, 1})), 3);
  EXPECT_THROW(kendall_distance(R({1, 2}), R({2, 3})), Error);
}

TEST(Distances, MatchBruteForceAndMaxima) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto perms = rankfuse::testing::all_permutations(m);
    std::int64_t max_foot = 0;
    std::int64_t max_kendall = 0;
    for (const auto& a : perms) {
      for (const auto& b : perms) {
        const auto f = footrule_distance(a, b);
        const auto k = kendall_distance(a, b);
        ASSERT_EQ(f, rankfuse::testing::brute_footrule(a, b));
        ASSERT_EQ(k, rankfuse::testing::brute_kendall(a, b));
        ASSERT_EQ(f % 2, 0);
        max_foot = std::max(max_foot, f);
        max_kendall = std::max(max_kendall, k);
      }
    }
    EXPECT_EQ(max_foot, max_distance(m, DistanceKind::SpearmanFootrule)) << m;
    EXPECT_EQ(max_kendall, max_distance(m, DistanceKind::KendallTau)) << m;
  }
}

TEST(Distances, MetricAxiomsOnRandomPermutations) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t m = 1 + rng() % 20;
    const Ranking a = rankfuse::testing::random_permutation(m, rng);
    const Ranking b = rankfuse::testing::random_permutation(m, rng);
    const Ranking c = rankfuse::testing::random_permutation(m, rng);
    for (auto kind : {DistanceKind::SpearmanFootrule, DistanceKind::KendallTau}) {
      EXPECT_EQ(distance(a, b, kind), distance(b, a, kind));
      EXPECT_EQ(distance(a, b, kind) == 0, a == b);
      EXPECT_LE(distance(a, c, kind), distance(a, b, kind) + distance(b, c, kind));
    }
    EXPECT_EQ(footrule_distance(a, b) % 2, 0);
  }
}

TEST(Kendall, LargeRankingsMatchBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Ranking a = rankfuse::testing::random_permutation(150, rng);
    const Ranking b = rankfuse::testing::random_permutation(150, rng);
    EXPECT_EQ(kendall_distance(a, b), rankfuse::testing::brute_kendall(a, b));
  }
}

TEST(NormalizedSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(normalized_similarity(kR1, kR2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(normalized_similarity(kR1, kR1), 1.0);
  EXPECT_DOUBLE_EQ(normalized_similarity(R({1, 2}), R({2, 1})), 0.0);
  EXPECT_DOUBLE_EQ(normalized_similarity(R({7}), R({7})), 1.0);
  EXPECT_DOUBLE_EQ(normalized_similarity(kR1, kR2, DistanceKind::KendallTau), 1.0 - 2.0 / 10.0);
}

TEST(WeightedTotalDistance, Examples) {
  const RankingList pair = RankingList::uniform({kR1, kR2});
  EXPECT_DOUBLE_EQ(weighted_total_distance(kR1, pair), 4.0);
  const RankingList halves({{kR1, 0.5}, {kR2, 0.5}});
  EXPECT_DOUBLE_EQ(weighted_total_distance(kR1, halves), 2.0);
  EXPECT_DOUBLE_EQ(weighted_total_distance(kR2, RankingList::uniform({kR2})), 0.0);
  EXPECT_THROW(weighted_total_distance(R({1, 2}), pair), Error);
}

TEST(WeightedTotalDistance, LinearInWeights) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 10;
    std::vector<WeightedRanking> items, doubled;
    for (int i = 0; i < 4; ++i) {
      const Ranking r = rankfuse::testing::random_permutation(m, rng);
      const double wi = w(rng);
      items.push_back({r, wi});
      doubled.push_back({r, 2.0 * wi});
    }
    const Ranking cand = rankfuse::testing::random_permutation(m, rng);
    EXPECT_NEAR(2.0 * weighted_total_distance(cand, RankingList(items)),
                weighted_total_distance(cand, RankingList(doubled)), 1e-9);
  }
}

TEST(WeightedMeanSimilarity, Examples) {
  EXPECT_DOUBLE_EQ(weighted_mean_similarity(kR1, RankingList::uniform({kR1, kR2})), 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(weighted_mean_similarity(kR2, RankingList::uniform({kR2, kR2, kR2})), 1.0);
  EXPECT_DOUBLE_EQ(
      weighted_mean_similarity(R({1, 2}), RankingList::uniform({R({1, 2}), R({2, 1})})), 0.5);
}

TEST(SimilarityMatrix, Examples) {
  const auto s = similarity_matrix(RankingList::uniform({kR1, kR2}));
  EXPECT_DOUBLE_EQ(s(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(s(0, 1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s(1, 0), 2.0 / 3.0);

  const auto same = similarity_matrix(RankingList::uniform({kR1, kR1, kR1}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(same(i, j), 1.0);
  }
  const auto anti = similarity_matrix(RankingList::uniform({R({1, 2}), R({2, 1})}));
  EXPECT_DOUBLE_EQ(anti(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(anti(1, 1), 1.0);
}

TEST(SimilarityMatrix, SymmetricUnitDiagonal) {
  std::mt19937_64 rng(2);
  const auto list = rankfuse::testing::random_list(7, 12, rng);
  const auto s = similarity_matrix(list, DistanceKind::KendallTau);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(s(i, i), 1.0);
    for (std::size_t j = 0; j < 7; ++j) {
      EXPECT_EQ(s(i, j), s(j, i));
      EXPECT_GE(s(i, j), 0.0);
      EXPECT_LE(s(i, j), 1.0);
    }
  }
}

TEST(DistanceKind, Parse) {
  EXPECT_EQ(parse_distance_kind("footrule"), DistanceKind::SpearmanFootrule);
  EXPECT_EQ(parse_distance_kind("kendall"), DistanceKind::KendallTau);
  EXPECT_THROW(parse_distance_kind("cosine"), Error);
}

TEST(SpearmanCorrelation, Basics) {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{10, 20, 30, 40};
  const std::vector<double> z{4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman_correlation(x, y), 1.0);
  EXPECT_DOUBLE_EQ(spearman_correlation(x, z), -1.0);
  // Ties get average ranks: y' ranks = 1.5, 1.5, 3, 4.
  const std::vector<double> tied{5, 5, 6, 7};
  const double expected = (-1.5 * -1.0 + -0.5 * -1.0 + 0.5 * 0.5 + 1.5 * 1.5) /
                          std::sqrt(5.0 * 4.5);
  EXPECT_NEAR(spearman_correlation(x, tied), expected, 1e-12);
}
