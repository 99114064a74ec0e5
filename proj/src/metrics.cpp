#include "rankfuse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "rankfuse/errors.hpp"

namespace rankfuse {

std::string_view to_string(DistanceKind kind) noexcept {
  return kind == DistanceKind::KendallTau ? "kendall" : "footrule";
}

DistanceKind parse_distance_kind(std::string_view name) {
  if (name == "footrule") return DistanceKind::SpearmanFootrule;
  if (name == "kendall") return DistanceKind::KendallTau;
  fail(ErrorCode::InvalidConfig, "unknown distance '" + std::string(name) + "'");
}

std::int64_t footrule_distance(const Ranking& a, const Ranking& b) {
  require_same_universe(a, b);
  std::int64_t total = 0;
  const auto& pa = a.by_id();
  const auto& pb = b.by_id();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    total += std::llabs(pa[i].second - pb[i].second);
  }
  return total;
}

namespace {

// Inversion count of `seq` by bottom-up merge sort; `seq` is consumed.
std::int64_t count_inversions(std::vector<Position>& seq) {
  std::int64_t inversions = 0;
  std::vector<Position> buffer(seq.size());
  for (std::size_t width = 1; width < seq.size(); width *= 2) {
    for (std::size_t lo = 0; lo < seq.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, seq.size());
      const std::size_t hi = std::min(lo + 2 * width, seq.size());
      std::size_t i = lo, j = mid, out = lo;
      while (i < mid && j < hi) {
        if (seq[j] < seq[i]) {
          inversions += static_cast<std::int64_t>(mid - i);
          buffer[out++] = seq[j++];
        } else {
          buffer[out++] = seq[i++];
        }
      }
      while (i < mid) buffer[out++] = seq[i++];
      while (j < hi) buffer[out++] = seq[j++];
    }
    seq.swap(buffer);
  }
  return inversions;
}

}  // namespace

std::int64_t kendall_distance(const Ranking& a, const Ranking& b) {
  require_same_universe(a, b);
  // Positions in b, listed in a's order; discordant pairs are inversions.
  std::vector<Position> seq(a.size());
  const auto& pa = a.by_id();
  const auto& pb = b.by_id();
  for (std::size_t i = 0; i < pa.size(); ++i) {
    seq[static_cast<std::size_t>(pa[i].second - 1)] = pb[i].second;
  }
  return count_inversions(seq);
}

std::int64_t distance(const Ranking& a, const Ranking& b, DistanceKind kind) {
  return kind == DistanceKind::KendallTau ? kendall_distance(a, b)
                                          : footrule_distance(a, b);
}

std::int64_t max_distance(std::size_t m, DistanceKind kind) noexcept {
  const auto mm = static_cast<std::int64_t>(m);
  return kind == DistanceKind::KendallTau ? mm * (mm - 1) / 2 : mm * mm / 2;
}

double normalized_similarity(const Ranking& a, const Ranking& b, DistanceKind kind) {
  const std::int64_t d = distance(a, b, kind);
  const std::int64_t dmax = max_distance(a.size(), kind);
  if (dmax == 0) return 1.0;
  return 1.0 - static_cast<double>(d) / static_cast<double>(dmax);
}

double weighted_total_distance(const Ranking& candidate, const RankingList& inputs,
                               DistanceKind kind) {
  double total = 0.0;
  for (const auto& item : inputs) {
    total += item.weight * static_cast<double>(distance(item.ranking, candidate, kind));
  }
  return total;
}

double weighted_mean_similarity(const Ranking& candidate, const RankingList& inputs,
                                DistanceKind kind) {
  const double total_weight = inputs.total_weight();
  if (!(total_weight > 0.0)) fail(ErrorCode::ZeroTotalWeight, "inputs carry no weight");
  double acc = 0.0;
  for (const auto& item : inputs) {
    acc += item.weight * normalized_similarity(candidate, item.ranking, kind);
  }
  return acc / total_weight;
}

SimilarityMatrix::SimilarityMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {
  for (std::size_t i = 0; i < n; ++i) values_[i * n + i] = 1.0;
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double v) {
  values_[i * n_ + j] = v;
  values_[j * n_ + i] = v;
}

SimilarityMatrix similarity_matrix(std::span<const Ranking> rankings, DistanceKind kind) {
  SimilarityMatrix sim(rankings.size());
  for (std::size_t i = 0; i < rankings.size(); ++i) {
    for (std::size_t j = i + 1; j < rankings.size(); ++j) {
      sim.set(i, j, normalized_similarity(rankings[i], rankings[j], kind));
    }
  }
  return sim;
}

SimilarityMatrix similarity_matrix(const RankingList& inputs, DistanceKind kind) {
  const auto rankings = inputs.rankings();
  return similarity_matrix(std::span<const Ranking>(rankings), kind);
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    fail(ErrorCode::LengthMismatch, "spearman correlation needs two equal samples of size >= 2");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mean = (n + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mean) * (ry[i] - mean);
    sxx += (rx[i] - mean) * (rx[i] - mean);
    syy += (ry[i] - mean) * (ry[i] - mean);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace rankfuse
