#include "rankfuse/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankfuse/errors.hpp"

namespace rankfuse {

Ranking::Ranking(std::vector<ObjectId> order) : order_(std::move(order)) {
  if (order_.empty()) fail(ErrorCode::EmptyRanking, "ranking has no objects");
  by_id_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] <= 0) {
      fail(ErrorCode::InvalidObjectId,
           "object id " + std::to_string(order_[i]) + " is not positive");
    }
    by_id_.emplace_back(order_[i], static_cast<Position>(i + 1));
  }
  std::sort(by_id_.begin(), by_id_.end());
  auto dup = std::adjacent_find(
      by_id_.begin(), by_id_.end(),
      [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != by_id_.end()) {
    fail(ErrorCode::DuplicateObject,
         "object id " + std::to_string(dup->first) + " appears more than once");
  }
}

ObjectId Ranking::at(Position k) const {
  if (k < 1 || k > static_cast<Position>(order_.size())) {
    fail(ErrorCode::PositionOutOfRange,
         "position " + std::to_string(k) + " outside 1.." +
             std::to_string(order_.size()));
  }
  return order_[static_cast<std::size_t>(k - 1)];
}

Position Ranking::position(ObjectId id) const {
  auto it = std::lower_bound(
      by_id_.begin(), by_id_.end(), id,
      [](const auto& entry, ObjectId key) { return entry.first < key; });
  if (it == by_id_.end() || it->first != id) {
    fail(ErrorCode::UniverseMismatch,
         "object " + std::to_string(id) + " is not ranked");
  }
  return it->second;
}

bool Ranking::contains(ObjectId id) const noexcept {
  return std::binary_search(
      by_id_.begin(), by_id_.end(), std::pair<ObjectId, Position>{id, 0},
      [](const auto& a, const auto& b) { return a.first < b.first; });
}

bool Ranking::same_universe(const Ranking& other) const noexcept {
  if (by_id_.size() != other.by_id_.size()) return false;
  for (std::size_t i = 0; i < by_id_.size(); ++i) {
    if (by_id_[i].first != other.by_id_[i].first) return false;
  }
  return true;
}

Ranking validate_ranking(std::vector<ObjectId> order) {
  return Ranking(std::move(order));
}

std::map<ObjectId, Position> positions_of(const Ranking& r) {
  return {r.by_id().begin(), r.by_id().end()};
}

Ranking from_positions(const std::map<ObjectId, Position>& positions) {
  const auto m = static_cast<Position>(positions.size());
  std::vector<ObjectId> order(positions.size(), 0);
  for (const auto& [id, k] : positions) {
    if (k < 1 || k > m) {
      fail(ErrorCode::PositionOutOfRange,
           "position " + std::to_string(k) + " outside 1.." + std::to_string(m));
    }
    auto& slot = order[static_cast<std::size_t>(k - 1)];
    if (slot != 0) {
      fail(ErrorCode::DuplicateObject,
           "position " + std::to_string(k) + " assigned twice");
    }
    slot = id;
  }
  return Ranking(std::move(order));
}

void require_same_universe(const Ranking& a, const Ranking& b) {
  if (!a.same_universe(b)) {
    fail(ErrorCode::UniverseMismatch,
         "rankings of sizes " + std::to_string(a.size()) + " and " +
             std::to_string(b.size()) + " do not share an object set");
  }
}

RankingList::RankingList(std::vector<WeightedRanking> items)
    : items_(std::move(items)) {
  if (items_.empty()) fail(ErrorCode::EmptyInput, "no rankings supplied");
  bool any_positive = false;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const double w = items_[i].weight;
    if (!std::isfinite(w) || w < 0.0) {
      fail(ErrorCode::InvalidWeight, "ranking " + std::to_string(i) +
                                         " has invalid weight " +
                                         std::to_string(w));
    }
    any_positive = any_positive || w > 0.0;
    require_same_universe(items_.front().ranking, items_[i].ranking);
  }
  if (!any_positive) {
    fail(ErrorCode::ZeroTotalWeight, "every ranking has weight 0");
  }
}

RankingList RankingList::uniform(std::vector<Ranking> rankings) {
  std::vector<WeightedRanking> items;
  items.reserve(rankings.size());
  for (auto& r : rankings) items.push_back({std::move(r), 1.0});
  return RankingList(std::move(items));
}

double RankingList::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& item : items_) total += item.weight;
  return total;
}

bool RankingList::has_uniform_weights() const noexcept {
  return std::all_of(items_.begin(), items_.end(), [&](const auto& item) {
    return item.weight == items_.front().weight;
  });
}

RankingList RankingList::with_uniform_weights() const {
  return uniform(rankings());
}

std::vector<Ranking> RankingList::rankings() const {
  std::vector<Ranking> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.ranking);
  return out;
}

}  // namespace rankfuse
