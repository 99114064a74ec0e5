#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "rankfuse/position_scores.hpp"
#include "rankfuse/ranking.hpp"

// Classical rank-aggregation baselines, each reconstructed from its usual
// literature definition. Every method breaks exact ties by ascending object
// id.

namespace rankfuse {

enum class BaselineKind { Borda, MeanRank, GeometricRank, SimpleVoting, MC4, Stuart, RobustRA };

std::string_view to_string(BaselineKind kind) noexcept;
/// Accepts the CLI names: borda, mean, geometric, voting, mc4, stuart, rra.
BaselineKind parse_baseline_kind(std::string_view name);
const std::vector<BaselineKind>& all_baselines();

struct Mc4Config {
  double damping = 0.85;
  std::size_t max_iters = 10000;
  double tolerance = 1e-10;

  void validate() const;
};

/// Scores sum_i w_i * (m - pos_i(o)), highest first.
Ranking borda(const RankingList& inputs);

/// Weighted arithmetic mean position, lowest first.
Ranking mean_rank(const RankingList& inputs);

/// Weighted geometric mean position, lowest first.
Ranking geometric_rank(const RankingList& inputs);

/// Iterated weighted plurality: each round every list votes (with its weight)
/// for its best not-yet-placed object, and the top vote-getter is placed next.
Ranking simple_voting(const RankingList& inputs);

/// Stationary distribution of the damped MC4 chain: from u, propose v
/// uniformly and move iff a strict weighted majority ranks v above u.
/// Throws NoConvergence when power iteration exceeds cfg.max_iters.
std::vector<double> mc4_stationary(const RankingList& inputs, const Mc4Config& cfg = {});
Ranking mc4(const RankingList& inputs, const Mc4Config& cfg = {});

enum class OrderStatisticKind { Stuart, RobustRA };

/// Per-object significance under the null of uniformly random ranks; smaller
/// is better. Weights are ignored (a warning is emitted if they differ).
ScoreVector order_statistic_scores(const RankingList& inputs, OrderStatisticKind kind);
Ranking order_statistic_rank(const RankingList& inputs, OrderStatisticKind kind);

/// Stuart's joint order-statistic probability n! * V_n for one object's
/// normalized ranks (any order; sorted internally). Clamped to [0, 1].
double stuart_score(std::vector<double> normalized_ranks);

/// min_k BetaCDF(r_(k); k, n-k+1), before any multiple-testing correction.
double robust_rank_rho(std::vector<double> normalized_ranks);
/// robust_rank_rho times n, capped at 1. When ranking, objects tied at the
/// cap are ordered by their raw rho before falling back to ids.
double robust_rank_score(std::vector<double> normalized_ranks);

Ranking run_baseline(BaselineKind kind, const RankingList& inputs, const Mc4Config& mc4_cfg = {});

}  // namespace rankfuse
