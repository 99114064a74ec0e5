#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rankfuse/ranking.hpp"

namespace rankfuse {

enum class DistanceKind { SpearmanFootrule, KendallTau };

std::string_view to_string(DistanceKind kind) noexcept;
/// Accepts "footrule" / "kendall" (case-sensitive). Throws InvalidConfig.
DistanceKind parse_distance_kind(std::string_view name);

/// Sum over objects of |pos_a(o) - pos_b(o)|.
std::int64_t footrule_distance(const Ranking& a, const Ranking& b);

/// Number of discordant object pairs, O(m log m).
std::int64_t kendall_distance(const Ranking& a, const Ranking& b);

std::int64_t distance(const Ranking& a, const Ranking& b, DistanceKind kind);

/// Largest possible distance between two permutations of m objects:
/// floor(m^2/2) for footrule, m(m-1)/2 for Kendall.
std::int64_t max_distance(std::size_t m, DistanceKind kind) noexcept;

/// 1 - distance / max_distance, in [0, 1]. Defined as 1 when m == 1.
double normalized_similarity(const Ranking& a, const Ranking& b,
                             DistanceKind kind = DistanceKind::SpearmanFootrule);

/// Objective of the consensus problem for a fixed candidate:
/// sum_i w_i * c(R_i, candidate).
double weighted_total_distance(const Ranking& candidate, const RankingList& inputs,
                               DistanceKind kind = DistanceKind::SpearmanFootrule);

/// Weight-normalized mean similarity of `candidate` to every input.
double weighted_mean_similarity(const Ranking& candidate, const RankingList& inputs,
                                DistanceKind kind = DistanceKind::SpearmanFootrule);

/// Symmetric n x n similarity grid with unit diagonal.
class SimilarityMatrix {
 public:
  explicit SimilarityMatrix(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v);

 private:
  std::size_t n_;
  std::vector<double> values_;
};

/// Pairwise unweighted normalized similarities.
SimilarityMatrix similarity_matrix(std::span<const Ranking> rankings,
                                   DistanceKind kind = DistanceKind::SpearmanFootrule);
SimilarityMatrix similarity_matrix(const RankingList& inputs,
                                   DistanceKind kind = DistanceKind::SpearmanFootrule);

/// Spearman rank correlation of two equal-length samples (average ranks for
/// ties). Returns 0 when either sample is constant.
double spearman_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace rankfuse
