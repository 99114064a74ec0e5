#include "rankfuse/noise_bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "rankfuse/errors.hpp"
#include "rankfuse/metrics.hpp"

namespace rankfuse {

NoiseRng noise_stream(std::uint64_t seed, std::uint64_t level, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(level >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return NoiseRng(seq);
}

Ranking perturb_ranking(const Ranking& base, double sigma, NoiseRng& rng) {
  if (!(sigma >= 0.0)) fail(ErrorCode::InvalidConfig, "noise sigma must be non-negative");
  if (sigma == 0.0) return base;
  const std::size_t m = base.size();
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<std::pair<double, ObjectId>> keyed;
  keyed.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double key = static_cast<double>(k + 1) / static_cast<double>(m) + noise(rng);
    keyed.emplace_back(key, base.order()[k]);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ObjectId> order;
  order.reserve(m);
  for (const auto& [key, id] : keyed) order.push_back(id);
  return Ranking(std::move(order));
}

double auc_trapezoid(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) fail(ErrorCode::TooFewPoints, "need at least two points");
  double area = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const auto [x0, y0] = points[i - 1];
    const auto [x1, y1] = points[i];
    if (!(x1 > x0)) {
      fail(ErrorCode::UnsortedPoints, "x values must be strictly increasing at index " +
                                          std::to_string(i));
    }
    area += (x1 - x0) * (y0 + y1) / 2.0;
  }
  return area;
}

void SweepConfig::validate() const {
  if (n_rankings < 1) fail(ErrorCode::InvalidConfig, "n_rankings must be positive");
  if (m_objects < 1) fail(ErrorCode::InvalidConfig, "m_objects must be positive");
  if (iterations < 2) fail(ErrorCode::InvalidConfig, "iterations must be at least 2");
  if (!(sigma_step > 0.0) || !std::isfinite(sigma_step)) {
    fail(ErrorCode::InvalidConfig, "sigma_step must be positive");
  }
  if (algorithms.empty()) fail(ErrorCode::InvalidConfig, "no algorithms selected");
  merge.validate();
  mc4.validate();
}

const SweepCurve& SweepResult::curve(Algorithm algorithm) const {
  for (const auto& c : curves) {
    if (c.algorithm == algorithm) return c;
  }
  fail(ErrorCode::InvalidConfig,
       "algorithm '" + std::string(to_string(algorithm)) + "' was not run");
}

RankingList noisy_inputs(const SweepConfig& cfg, std::size_t level) {
  std::vector<ObjectId> identity(cfg.m_objects);
  std::iota(identity.begin(), identity.end(), ObjectId{1});
  const Ranking truth(std::move(identity));
  const double sigma = static_cast<double>(level) * cfg.sigma_step;
  std::vector<Ranking> lists;
  lists.reserve(cfg.n_rankings);
  for (std::size_t i = 0; i < cfg.n_rankings; ++i) {
    NoiseRng rng = noise_stream(cfg.seed, level, i);
    lists.push_back(perturb_ranking(truth, sigma, rng));
  }
  return RankingList::uniform(std::move(lists));
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("RANKFUSE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t levels = cfg.iterations;
  const std::size_t n_alg = cfg.algorithms.size();
  // similarity[level * n_alg + a]; each slot is written by exactly one task.
  std::vector<double> similarity(levels * n_alg, 0.0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t t = next++; t < levels; t = next++) {
      try {
        const RankingList inputs = noisy_inputs(cfg, t + 1);
        for (std::size_t a = 0; a < n_alg; ++a) {
          const Ranking out = run_algorithm(cfg.algorithms[a], inputs, cfg.merge, cfg.mc4);
          similarity[t * n_alg + a] =
              weighted_mean_similarity(out, inputs, DistanceKind::SpearmanFootrule);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t n_threads =
      std::min(levels, cfg.threads > 0 ? cfg.threads : default_thread_count());
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  SweepResult result;
  for (std::size_t a = 0; a < n_alg; ++a) {
    SweepCurve curve;
    curve.algorithm = cfg.algorithms[a];
    for (std::size_t t = 0; t < levels; ++t) {
      curve.points.emplace_back(static_cast<double>(t + 1) * cfg.sigma_step,
                                similarity[t * n_alg + a]);
    }
    curve.auc = auc_trapezoid(curve.points);
    result.curves.push_back(std::move(curve));
  }
  return result;
}

}  // namespace rankfuse
