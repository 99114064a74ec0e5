#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rankfuse {

using ObjectId = std::int64_t;
/// 1-based rank position; position 1 is the top of a ranking.
using Position = std::int64_t;

/// A total order over a set of positive object ids.
///
/// Immutable after construction. Besides the order itself the ranking keeps
/// an id-sorted position table, so two rankings over the same universe can
/// be compared object by object with a single linear pass.
class Ranking {
 public:
  /// Validates `order` (nonempty, ids > 0, no repeats). Throws Error with
  /// EmptyRanking, InvalidObjectId or DuplicateObject.
  explicit Ranking(std::vector<ObjectId> order);

  std::size_t size() const noexcept { return order_.size(); }
  const std::vector<ObjectId>& order() const noexcept { return order_; }

  /// Object at 1-based position k.
  ObjectId at(Position k) const;

  /// 1-based position of `id`; throws UniverseMismatch if absent.
  Position position(ObjectId id) const;
  bool contains(ObjectId id) const noexcept;

  /// (id, position) pairs sorted by id.
  const std::vector<std::pair<ObjectId, Position>>& by_id() const noexcept {
    return by_id_;
  }

  bool same_universe(const Ranking& other) const noexcept;

  friend bool operator==(const Ranking& a, const Ranking& b) noexcept {
    return a.order_ == b.order_;
  }

 private:
  std::vector<ObjectId> order_;
  std::vector<std::pair<ObjectId, Position>> by_id_;
};

Ranking validate_ranking(std::vector<ObjectId> order);

/// Association id -> 1-based position.
std::map<ObjectId, Position> positions_of(const Ranking& r);

/// Rebuilds a ranking from an id -> position association.
Ranking from_positions(const std::map<ObjectId, Position>& positions);

/// Throws UniverseMismatch unless a and b rank the same objects.
void require_same_universe(const Ranking& a, const Ranking& b);

struct WeightedRanking {
  Ranking ranking;
  double weight = 1.0;
};

/// Nonempty list of weighted rankings over one common object universe.
/// Weights are finite and non-negative, and at least one is positive.
class RankingList {
 public:
  explicit RankingList(std::vector<WeightedRanking> items);
  /// All weights 1.0.
  static RankingList uniform(std::vector<Ranking> rankings);

  std::size_t size() const noexcept { return items_.size(); }
  /// Number of objects ranked by every item.
  std::size_t universe_size() const noexcept {
    return items_.front().ranking.size();
  }
  const WeightedRanking& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<WeightedRanking>& items() const noexcept { return items_; }
  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  double total_weight() const noexcept;
  bool has_uniform_weights() const noexcept;
  /// Same rankings, every weight replaced by 1.0.
  RankingList with_uniform_weights() const;
  std::vector<Ranking> rankings() const;

 private:
  std::vector<WeightedRanking> items_;
};

}  // namespace rankfuse
