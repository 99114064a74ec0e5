#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "rankfuse/metrics.hpp"
#include "rankfuse/ranking.hpp"

namespace rankfuse {

enum class InitialWeightPolicy { Uniform, Provided };

struct MergeConfig {
  DistanceKind distance = DistanceKind::SpearmanFootrule;
  /// Share of the merged weight taken from the parents' mean weight; the
  /// remainder comes from the merged ranking's fit to the original inputs.
  double alpha = 0.5;
  /// Largest number of tie-break orderings searched per merge. Above it, tied
  /// objects are laid out by ascending id.
  std::uint64_t tie_enum_cap = 720;
  InitialWeightPolicy initial_weight_policy = InitialWeightPolicy::Uniform;

  /// Throws InvalidConfig.
  void validate() const;
};

struct MergeOutcome {
  WeightedRanking merged;
  /// Sizes of the groups of objects with equal merged score (only groups of
  /// two or more objects), in ranking order.
  std::vector<std::size_t> tie_group_sizes;
  /// Orderings considered: the product of the tie groups' factorials when it
  /// fits under the cap, otherwise 1.
  std::uint64_t candidates = 1;
  /// How many of those candidates reached the minimal objective.
  std::uint64_t optimal_candidates = 1;
  bool capped = false;
  /// Weighted total distance of the merged ranking to the original inputs.
  double objective = 0.0;
};

/// Merges two weighted rankings through their blended position scores.
/// Ties among blended scores are resolved by searching every ordering of the
/// tied objects for the one closest to `originals` (smallest id sequence
/// wins among equals). The result's weight comes from update_weight().
MergeOutcome merge_pair(const WeightedRanking& a, const WeightedRanking& b,
                        const RankingList& originals, const MergeConfig& cfg = {});

/// alpha * mean(parent weights) + (1 - alpha) * fit of `merged` to originals.
double update_weight(double parent_w1, double parent_w2, const Ranking& merged,
                     const RankingList& originals, const MergeConfig& cfg = {});

struct MergeStep {
  /// Pool indices merged; the result takes slot `left`, `right` is removed.
  std::size_t left = 0;
  std::size_t right = 0;
  double similarity = 0.0;
  /// Number of pool pairs that shared the maximal similarity.
  std::size_t tied_pairs = 1;
  std::vector<std::size_t> tie_group_sizes;
  std::uint64_t candidates = 1;
  std::uint64_t optimal_candidates = 1;
  double weight = 0.0;
};

struct AggregationResult {
  Ranking consensus;
  double weight = 0.0;
  /// Weighted total distance of the consensus to the original inputs.
  double objective = 0.0;
  std::vector<MergeStep> merge_trace;
};

/// Repeatedly merges the most similar pair of the working pool until one
/// ranking is left. Exactly inputs.size() - 1 merges are performed.
AggregationResult aggregate(const RankingList& inputs, const MergeConfig& cfg = {});

}  // namespace rankfuse
