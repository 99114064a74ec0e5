#include "rankfuse/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankfuse/beta.hpp"
#include "rankfuse/errors.hpp"

namespace rankfuse {

std::string_view to_string(BaselineKind kind) noexcept {
  switch (kind) {
    case BaselineKind::Borda: return "borda";
    case BaselineKind::MeanRank: return "mean";
    case BaselineKind::GeometricRank: return "geometric";
    case BaselineKind::SimpleVoting: return "voting";
    case BaselineKind::MC4: return "mc4";
    case BaselineKind::Stuart: return "stuart";
    case BaselineKind::RobustRA: return "rra";
  }
  return "unknown";
}

BaselineKind parse_baseline_kind(std::string_view name) {
  for (BaselineKind kind : all_baselines()) {
    if (to_string(kind) == name) return kind;
  }
  fail(ErrorCode::InvalidConfig, "unknown baseline '" + std::string(name) + "'");
}

const std::vector<BaselineKind>& all_baselines() {
  static const std::vector<BaselineKind> kinds = {
      BaselineKind::MC4,   BaselineKind::RobustRA,     BaselineKind::MeanRank,
      BaselineKind::GeometricRank, BaselineKind::Stuart, BaselineKind::SimpleVoting,
      BaselineKind::Borda};
  return kinds;
}

void Mc4Config::validate() const {
  if (!(damping > 0.0 && damping <= 1.0)) {
    fail(ErrorCode::InvalidConfig, "mc4 damping must lie in (0, 1]");
  }
  if (max_iters < 1) fail(ErrorCode::InvalidConfig, "mc4 max_iters must be positive");
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidConfig, "mc4 tolerance must be positive");
}

namespace {

// Universe ids in ascending order, with positions[i][j] = pos of id j in list i.
struct PositionTable {
  std::vector<ObjectId> ids;
  std::vector<std::vector<Position>> positions;
  std::vector<double> weights;

  explicit PositionTable(const RankingList& inputs) {
    for (const auto& [id, k] : inputs[0].ranking.by_id()) ids.push_back(id);
    for (const auto& item : inputs) {
      std::vector<Position> row;
      row.reserve(ids.size());
      for (const auto& [id, k] : item.ranking.by_id()) row.push_back(k);
      positions.push_back(std::move(row));
      weights.push_back(item.weight);
    }
  }
  std::size_t m() const { return ids.size(); }
  std::size_t n() const { return positions.size(); }
};

// Orders ids by key (ascending, or descending when `higher_first`), ties by id.
// `secondary`, when given, orders equal keys ascending before ids do.
Ranking rank_by_key(const std::vector<ObjectId>& ids, const std::vector<double>& key,
                    bool higher_first, const std::vector<double>* secondary = nullptr) {
  std::vector<std::size_t> idx(ids.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return higher_first ? key[a] > key[b] : key[a] < key[b];
    if (secondary && (*secondary)[a] != (*secondary)[b]) return (*secondary)[a] < (*secondary)[b];
    return ids[a] < ids[b];
  });
  std::vector<ObjectId> order;
  order.reserve(ids.size());
  for (std::size_t i : idx) order.push_back(ids[i]);
  return Ranking(std::move(order));
}

}  // namespace

Ranking borda(const RankingList& inputs) {
  const PositionTable t(inputs);
  const auto m = static_cast<double>(t.m());
  std::vector<double> score(t.m(), 0.0);
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.m(); ++j) {
      score[j] += t.weights[i] * (m - static_cast<double>(t.positions[i][j]));
    }
  }
  return rank_by_key(t.ids, score, true);
}

Ranking mean_rank(const RankingList& inputs) {
  const PositionTable t(inputs);
  const double total = inputs.total_weight();
  std::vector<double> key(t.m(), 0.0);
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.m(); ++j) {
      key[j] += t.weights[i] * static_cast<double>(t.positions[i][j]);
    }
  }
  for (double& k : key) k /= total;
  return rank_by_key(t.ids, key, false);
}

Ranking geometric_rank(const RankingList& inputs) {
  const PositionTable t(inputs);
  const double total = inputs.total_weight();
  // exp is monotone, so ranking by the mean log position is equivalent.
  std::vector<double> key(t.m(), 0.0);
  for (std::size_t i = 0; i < t.n(); ++i) {
    for (std::size_t j = 0; j < t.m(); ++j) {
      key[j] += t.weights[i] * std::log(static_cast<double>(t.positions[i][j]));
    }
  }
  for (double& k : key) k = std::exp(k / total);
  return rank_by_key(t.ids, key, false);
}

Ranking simple_voting(const RankingList& inputs) {
  const std::size_t m = inputs.universe_size();
  const PositionTable t(inputs);
  std::vector<bool> placed(m, false);
  // Cursor into each list's order, skipping placed objects lazily.
  std::vector<std::size_t> cursor(t.n(), 0);
  std::vector<std::size_t> slot_of(m);
  auto slot = [&](ObjectId id) {
    return static_cast<std::size_t>(
        std::lower_bound(t.ids.begin(), t.ids.end(), id) - t.ids.begin());
  };

  std::vector<ObjectId> order;
  order.reserve(m);
  std::vector<double> votes(m);
  while (order.size() < m) {
    std::fill(votes.begin(), votes.end(), 0.0);
    for (std::size_t i = 0; i < t.n(); ++i) {
      const auto& list = inputs[i].ranking.order();
      while (placed[slot(list[cursor[i]])]) ++cursor[i];
      votes[slot(list[cursor[i]])] += t.weights[i];
    }
    std::size_t winner = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (placed[j]) continue;
      if (winner == m || votes[j] > votes[winner]) winner = j;
    }
    placed[winner] = true;
    order.push_back(t.ids[winner]);
  }
  return Ranking(std::move(order));
}

std::vector<double> mc4_stationary(const RankingList& inputs, const Mc4Config& cfg) {
  cfg.validate();
  const PositionTable t(inputs);
  const std::size_t m = t.m();
  const double total = inputs.total_weight();

  // Row-stochastic transition matrix before damping.
  std::vector<double> p(m * m, 0.0);
  const double propose = 1.0 / static_cast<double>(m);
  for (std::size_t u = 0; u < m; ++u) {
    double stay = 1.0;
    for (std::size_t v = 0; v < m; ++v) {
      if (v == u) continue;
      double prefer_v = 0.0;
      for (std::size_t i = 0; i < t.n(); ++i) {
        if (t.positions[i][v] < t.positions[i][u]) prefer_v += t.weights[i];
      }
      if (prefer_v > total / 2.0) {
        p[u * m + v] = propose;
        stay -= propose;
      }
    }
    p[u * m + u] = stay;
  }

  const double teleport = (1.0 - cfg.damping) / static_cast<double>(m);
  std::vector<double> pi(m, 1.0 / static_cast<double>(m));
  std::vector<double> next(m);
  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < m; ++u) {
      const double mass = pi[u];
      for (std::size_t v = 0; v < m; ++v) next[v] += mass * p[u * m + v];
    }
    double sum = 0.0;
    for (double& x : next) {
      x = cfg.damping * x + teleport;
      sum += x;
    }
    double change = 0.0;
    for (std::size_t v = 0; v < m; ++v) {
      next[v] /= sum;
      change += std::abs(next[v] - pi[v]);
    }
    pi.swap(next);
    if (change < cfg.tolerance) return pi;
  }
  fail(ErrorCode::NoConvergence,
       "mc4 power iteration exceeded " + std::to_string(cfg.max_iters) + " iterations");
}

Ranking mc4(const RankingList& inputs, const Mc4Config& cfg) {
  const auto pi = mc4_stationary(inputs, cfg);
  std::vector<ObjectId> ids;
  for (const auto& [id, k] : inputs[0].ranking.by_id()) ids.push_back(id);
  return rank_by_key(ids, pi, true);
}

double stuart_score(std::vector<double> r) {
  const std::size_t n = r.size();
  if (n == 0) fail(ErrorCode::EmptyInput, "no ranks to score");
  std::sort(r.begin(), r.end());
  // V_k = sum_{i=1..k} (-1)^{i-1} V_{k-i} r_{n-k+1}^i / i!  (1-based r).
  std::vector<double> v(n + 1, 0.0);
  v[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double x = r[n - k];
    double term_power = 1.0;
    double factorial = 1.0;
    double acc = 0.0;
    for (std::size_t i = 1; i <= k; ++i) {
      term_power *= x;
      factorial *= static_cast<double>(i);
      const double term = v[k - i] * term_power / factorial;
      acc += (i % 2 == 1) ? term : -term;
    }
    v[k] = acc;
  }
  double n_factorial = 1.0;
  for (std::size_t i = 2; i <= n; ++i) n_factorial *= static_cast<double>(i);
  return std::clamp(n_factorial * v[n], 0.0, 1.0);
}

double robust_rank_rho(std::vector<double> r) {
  const std::size_t n = r.size();
  if (n == 0) fail(ErrorCode::EmptyInput, "no ranks to score");
  std::sort(r.begin(), r.end());
  double rho = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    rho = std::min(rho, beta_cdf(r[k - 1], static_cast<double>(k),
                                 static_cast<double>(n - k + 1)));
  }
  return rho;
}

double robust_rank_score(std::vector<double> r) {
  const double n = static_cast<double>(r.size());
  return std::min(1.0, robust_rank_rho(std::move(r)) * n);
}

ScoreVector order_statistic_scores(const RankingList& inputs, OrderStatisticKind kind) {
  if (!inputs.has_uniform_weights()) {
    warn(std::string(kind == OrderStatisticKind::Stuart ? "stuart" : "rra") +
         " ignores ranking weights; non-uniform weights were supplied");
  }
  const PositionTable t(inputs);
  const auto m = static_cast<double>(t.m());
  std::vector<std::pair<ObjectId, double>> entries;
  entries.reserve(t.m());
  std::vector<double> ranks(t.n());
  for (std::size_t j = 0; j < t.m(); ++j) {
    for (std::size_t i = 0; i < t.n(); ++i) {
      ranks[i] = static_cast<double>(t.positions[i][j]) / m;
    }
    const double s = kind == OrderStatisticKind::Stuart ? stuart_score(ranks)
                                                        : robust_rank_score(ranks);
    entries.emplace_back(t.ids[j], s);
  }
  return ScoreVector(std::move(entries));
}

Ranking order_statistic_rank(const RankingList& inputs, OrderStatisticKind kind) {
  const ScoreVector scores = order_statistic_scores(inputs, kind);
  std::vector<ObjectId> ids;
  std::vector<double> key;
  for (const auto& [id, s] : scores.entries()) {
    ids.push_back(id);
    key.push_back(s);
  }
  if (kind == OrderStatisticKind::Stuart) return rank_by_key(ids, key, false);
  // Objects saturated at the Bonferroni cap of 1 are separated by the raw rho.
  const PositionTable t(inputs);
  const auto m = static_cast<double>(t.m());
  std::vector<double> rho(t.m());
  std::vector<double> ranks(t.n());
  for (std::size_t j = 0; j < t.m(); ++j) {
    for (std::size_t i = 0; i < t.n(); ++i) ranks[i] = static_cast<double>(t.positions[i][j]) / m;
    rho[j] = robust_rank_rho(ranks);
  }
  return rank_by_key(ids, key, false, &rho);
}

Ranking run_baseline(BaselineKind kind, const RankingList& inputs, const Mc4Config& mc4_cfg) {
  switch (kind) {
    case BaselineKind::Borda: return borda(inputs);
    case BaselineKind::MeanRank: return mean_rank(inputs);
    case BaselineKind::GeometricRank: return geometric_rank(inputs);
    case BaselineKind::SimpleVoting: return simple_voting(inputs);
    case BaselineKind::MC4: return mc4(inputs, mc4_cfg);
    case BaselineKind::Stuart: return order_statistic_rank(inputs, OrderStatisticKind::Stuart);
    case BaselineKind::RobustRA:
      return order_statistic_rank(inputs, OrderStatisticKind::RobustRA);
  }
  fail(ErrorCode::InvalidConfig, "unhandled baseline");
}

}  // namespace rankfuse
