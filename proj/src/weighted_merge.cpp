#include "rankfuse/weighted_merge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rankfuse/errors.hpp"
#include "rankfuse/position_scores.hpp"

namespace rankfuse {

void MergeConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    fail(ErrorCode::InvalidConfig, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (tie_enum_cap < 1) fail(ErrorCode::InvalidConfig, "tie_enum_cap must be >= 1");
}

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// g! with saturation just above `cap`.
std::uint64_t capped_factorial_product(const std::vector<std::size_t>& sizes,
                                       std::uint64_t cap) {
  std::uint64_t product = 1;
  for (std::size_t g : sizes) {
    for (std::size_t f = 2; f <= g; ++f) {
      product *= f;
      if (product > cap) return cap + 1;
    }
  }
  return product;
}

// Cost of placing `members` (in that order) at consecutive positions starting
// at `first`, summed over the weighted originals. The objective separates
// over tie groups: pairs in different groups keep the same relative order in
// every candidate, and footrule terms are per object.
class GroupCost {
 public:
  GroupCost(const std::vector<ObjectId>& members, const RankingList& originals,
            DistanceKind kind)
      : kind_(kind), g_(members.size()) {
    for (const auto& item : originals) {
      weights_.push_back(item.weight);
      for (ObjectId id : members) positions_.push_back(item.ranking.position(id));
    }
  }

  // `order` holds indices into the original member list.
  double operator()(const std::vector<std::size_t>& order, Position first) const {
    double total = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      const Position* pos = positions_.data() + i * g_;
      std::int64_t d = 0;
      if (kind_ == DistanceKind::SpearmanFootrule) {
        for (std::size_t j = 0; j < g_; ++j) {
          d += std::llabs(pos[order[j]] - (first + static_cast<Position>(j)));
        }
      } else {
        for (std::size_t j = 0; j < g_; ++j) {
          for (std::size_t l = j + 1; l < g_; ++l) {
            d += pos[order[j]] > pos[order[l]] ? 1 : 0;
          }
        }
      }
      total += weights_[i] * static_cast<double>(d);
    }
    return total;
  }

 private:
  DistanceKind kind_;
  std::size_t g_;
  std::vector<double> weights_;
  std::vector<Position> positions_;
};

}  // namespace

MergeOutcome merge_pair(const WeightedRanking& a, const WeightedRanking& b,
                        const RankingList& originals, const MergeConfig& cfg) {
  cfg.validate();
  require_same_universe(a.ranking, b.ranking);
  require_same_universe(a.ranking, originals[0].ranking);

  const ScoreVector merged_scores =
      merge_scores(score_vector(a.ranking), a.weight, score_vector(b.ranking), b.weight);

  auto entries = merged_scores.entries();
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second > y.second;
    return x.first < y.first;
  });

  // Groups of consecutive objects sharing a merged score; ids ascend inside.
  std::vector<std::vector<ObjectId>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i == 0 || !nearly_equal(entries[i - 1].second, entries[i].second)) {
      groups.emplace_back();
    }
    groups.back().push_back(entries[i].first);
  }
  for (auto& group : groups) std::sort(group.begin(), group.end());

  std::vector<std::size_t> tie_sizes;
  for (const auto& group : groups) {
    if (group.size() > 1) tie_sizes.push_back(group.size());
  }
  const std::uint64_t product = capped_factorial_product(tie_sizes, cfg.tie_enum_cap);
  const bool capped = product > cfg.tie_enum_cap;
  std::uint64_t optimal = 1;

  std::vector<ObjectId> order;
  order.reserve(entries.size());
  Position first = 1;
  for (const auto& group : groups) {
    if (group.size() == 1 || capped) {
      order.insert(order.end(), group.begin(), group.end());
      first += static_cast<Position>(group.size());
      continue;
    }
    // Permutations are visited in lexicographic id order, so the first
    // minimum found is also the lexicographically smallest one.
    const GroupCost cost(group, originals, cfg.distance);
    std::vector<std::size_t> perm(group.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    std::uint64_t n_best = 0;
    do {
      const double c = cost(perm, first);
      if (n_best > 0 && nearly_equal(c, best_cost)) {
        ++n_best;
      } else if (c < best_cost) {
        best_cost = c;
        best = perm;
        n_best = 1;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    optimal *= n_best;
    for (std::size_t idx : best) order.push_back(group[idx]);
    first += static_cast<Position>(group.size());
  }

  Ranking merged(std::move(order));
  const double weight = update_weight(a.weight, b.weight, merged, originals, cfg);
  const double objective = weighted_total_distance(merged, originals, cfg.distance);
  return MergeOutcome{WeightedRanking{std::move(merged), weight},
                      std::move(tie_sizes),
                      capped ? 1 : product,
                      optimal,
                      capped,
                      objective};
}

double update_weight(double parent_w1, double parent_w2, const Ranking& merged,
                     const RankingList& originals, const MergeConfig& cfg) {
  cfg.validate();
  const double past = (parent_w1 + parent_w2) / 2.0;
  if (cfg.alpha == 1.0) return past;
  const double fitness = weighted_mean_similarity(merged, originals, cfg.distance);
  return cfg.alpha * past + (1.0 - cfg.alpha) * fitness;
}

AggregationResult aggregate(const RankingList& inputs, const MergeConfig& cfg) {
  cfg.validate();
  const RankingList originals = cfg.initial_weight_policy == InitialWeightPolicy::Uniform
                                    ? inputs.with_uniform_weights()
                                    : inputs;
  for (std::size_t i = 0; i < originals.size(); ++i) {
    if (originals[i].weight == 0.0) {
      warn("ranking " + std::to_string(i) + " has weight 0 and cannot pull the consensus");
    }
  }

  // Pool weights share a scale with fitness (which lies in [0, 1]): provided
  // weights are rescaled to mean 1. The objective keeps the caller's weights.
  std::vector<WeightedRanking> pool = originals.items();
  const double mean_weight = originals.total_weight() / static_cast<double>(originals.size());
  for (auto& item : pool) item.weight /= mean_weight;
  AggregationResult result{pool.front().ranking, pool.front().weight, 0.0, {}};

  while (pool.size() > 1) {
    std::vector<Ranking> current;
    current.reserve(pool.size());
    for (const auto& item : pool) current.push_back(item.ranking);
    const SimilarityMatrix sim = similarity_matrix(current, cfg.distance);

    MergeStep step;
    step.similarity = -1.0;
    step.tied_pairs = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        const double s = sim(i, j);
        if (s > step.similarity) {
          step.similarity = s;
          step.left = i;
          step.right = j;
          step.tied_pairs = 1;
        } else if (s == step.similarity) {
          ++step.tied_pairs;
        }
      }
    }

    const WeightedRanking& lhs = pool[step.left];
    const WeightedRanking& rhs = pool[step.right];
    const bool weightless = !(lhs.weight + rhs.weight > 0.0);
    // Two weightless rankings are blended evenly; the weight update still
    // sees their zero weights.
    MergeOutcome outcome =
        weightless ? merge_pair({lhs.ranking, 1.0}, {rhs.ranking, 1.0}, originals, cfg)
                   : merge_pair(lhs, rhs, originals, cfg);
    if (weightless) {
      outcome.merged.weight = update_weight(0.0, 0.0, outcome.merged.ranking, originals, cfg);
    }
    step.tie_group_sizes = outcome.tie_group_sizes;
    step.candidates = outcome.candidates;
    step.optimal_candidates = outcome.optimal_candidates;
    step.weight = outcome.merged.weight;
    result.merge_trace.push_back(step);

    pool[step.left] = std::move(outcome.merged);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(step.right));
  }

  result.consensus = pool.front().ranking;
  result.weight = pool.front().weight;
  result.objective = weighted_total_distance(result.consensus, originals, cfg.distance);
  return result;
}

}  // namespace rankfuse
