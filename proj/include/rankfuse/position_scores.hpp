#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rankfuse/ranking.hpp"

namespace rankfuse {

// Quadratic position scores for an object at 1-based position k among m.
// All three throw PositionOutOfRange unless 1 <= k <= m.

/// (m-k)(m-k-1)/2
std::int64_t gain_score(std::int64_t m, Position k);
/// k(k+1)/2
std::int64_t penalty_score(std::int64_t m, Position k);
/// gain - penalty = (m^2 - 2mk - m)/2; strictly decreasing in k.
double overall_score(std::int64_t m, Position k);

/// Real-valued score per object, stored sorted by object id.
class ScoreVector {
 public:
  ScoreVector() = default;
  /// `entries` must be sorted by id with no repeats.
  explicit ScoreVector(std::vector<std::pair<ObjectId, double>> entries);

  std::size_t universe_size() const noexcept { return entries_.size(); }
  const std::vector<std::pair<ObjectId, double>>& entries() const& noexcept {
    return entries_;
  }
  // By value on temporaries so range-for over a returned ScoreVector is safe.
  std::vector<std::pair<ObjectId, double>> entries() && noexcept { return std::move(entries_); }
  /// Throws UniverseMismatch if id is absent.
  double at(ObjectId id) const;
  bool same_universe(const ScoreVector& other) const noexcept;

 private:
  std::vector<std::pair<ObjectId, double>> entries_;
};

/// overall_score of every object at its position in r.
ScoreVector score_vector(const Ranking& r);

/// Weight-proportional blend (w1*a + w2*b)/(w1 + w2) per object.
/// Throws UniverseMismatch, ZeroTotalWeight, or InvalidWeight.
ScoreVector merge_scores(const ScoreVector& s1, double w1, const ScoreVector& s2,
                         double w2);

}  // namespace rankfuse
