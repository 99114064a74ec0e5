#include "rankfuse/position_scores.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankfuse/errors.hpp"

namespace rankfuse {
namespace {

void check_position(std::int64_t m, Position k) {
  if (m < 1 || k < 1 || k > m) {
    fail(ErrorCode::PositionOutOfRange,
         "position " + std::to_string(k) + " outside 1.." + std::to_string(m));
  }
}

}  // namespace

std::int64_t gain_score(std::int64_t m, Position k) {
  check_position(m, k);
  return (m - k) * (m - k - 1) / 2;
}

std::int64_t penalty_score(std::int64_t m, Position k) {
  check_position(m, k);
  return k * (k + 1) / 2;
}

double overall_score(std::int64_t m, Position k) {
  check_position(m, k);
  // m^2 - 2mk - m = m(m - 2k - 1) is always even.
  return static_cast<double>(m * (m - 2 * k - 1) / 2);
}

ScoreVector::ScoreVector(std::vector<std::pair<ObjectId, double>> entries)
    : entries_(std::move(entries)) {}

double ScoreVector::at(ObjectId id) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const auto& e, ObjectId key) { return e.first < key; });
  if (it == entries_.end() || it->first != id) {
    fail(ErrorCode::UniverseMismatch, "object " + std::to_string(id) + " has no score");
  }
  return it->second;
}

bool ScoreVector::same_universe(const ScoreVector& other) const noexcept {
  return std::equal(entries_.begin(), entries_.end(), other.entries_.begin(),
                    other.entries_.end(),
                    [](const auto& a, const auto& b) { return a.first == b.first; });
}

ScoreVector score_vector(const Ranking& r) {
  const auto m = static_cast<std::int64_t>(r.size());
  std::vector<std::pair<ObjectId, double>> entries;
  entries.reserve(r.size());
  for (const auto& [id, k] : r.by_id()) entries.emplace_back(id, overall_score(m, k));
  return ScoreVector(std::move(entries));
}

ScoreVector merge_scores(const ScoreVector& s1, double w1, const ScoreVector& s2,
                         double w2) {
  if (!s1.same_universe(s2)) {
    fail(ErrorCode::UniverseMismatch, "score vectors cover different objects");
  }
  if (!std::isfinite(w1) || !std::isfinite(w2) || w1 < 0.0 || w2 < 0.0) {
    fail(ErrorCode::InvalidWeight, "merge weights must be finite and non-negative");
  }
  const double total = w1 + w2;
  if (!(total > 0.0)) fail(ErrorCode::ZeroTotalWeight, "merge weights sum to 0");
  if (w2 == 0.0) return s1;
  if (w1 == 0.0) return s2;
  std::vector<std::pair<ObjectId, double>> entries;
  entries.reserve(s1.universe_size());
  const auto& e1 = s1.entries();
  const auto& e2 = s2.entries();
  for (std::size_t i = 0; i < e1.size(); ++i) {
    double v = (w1 * e1[i].second + w2 * e2[i].second) / total;
    // Keep the convex-combination bounds exact under rounding.
    v = std::clamp(v, std::min(e1[i].second, e2[i].second),
                   std::max(e1[i].second, e2[i].second));
    entries.emplace_back(e1[i].first, v);
  }
  return ScoreVector(std::move(entries));
}

}  // namespace rankfuse
