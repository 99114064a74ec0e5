#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "rankfuse/algorithms.hpp"
#include "rankfuse/ranking.hpp"

namespace rankfuse {

/// Generator used for every noise draw. std::mt19937_64 seeded through
/// std::seed_seq; results are bit-reproducible for a given toolchain.
using NoiseRng = std::mt19937_64;

/// Independent stream for draw `index` at noise level `level` under `seed`.
NoiseRng noise_stream(std::uint64_t seed, std::uint64_t level, std::uint64_t index);

/// Sorts objects by pos(o)/m + Normal(0, sigma); equal keys keep the base
/// order. sigma == 0 returns `base` unchanged.
Ranking perturb_ranking(const Ranking& base, double sigma, NoiseRng& rng);

/// Trapezoidal area under (x, y) points. x must be strictly increasing and
/// there must be at least two points (UnsortedPoints / TooFewPoints).
double auc_trapezoid(std::span<const std::pair<double, double>> points);

struct SweepConfig {
  std::size_t n_rankings = 20;
  std::size_t m_objects = 30;
  std::size_t iterations = 50;
  double sigma_step = 0.02;
  std::uint64_t seed = 1;
  std::vector<Algorithm> algorithms = all_algorithms();
  MergeConfig merge;
  Mc4Config mc4;
  /// Worker threads; 0 means RANKFUSE_THREADS or the hardware default.
  std::size_t threads = 0;

  void validate() const;
};

struct SweepCurve {
  Algorithm algorithm = Algorithm::Proposed;
  /// (sigma, mean normalized footrule similarity to that level's inputs)
  std::vector<std::pair<double, double>> points;
  double auc = 0.0;
};

struct SweepResult {
  std::vector<SweepCurve> curves;

  const SweepCurve& curve(Algorithm algorithm) const;
};

/// The noisy lists drawn at 1-based noise level `level`.
RankingList noisy_inputs(const SweepConfig& cfg, std::size_t level);

SweepResult run_sweep(const SweepConfig& cfg);

/// Worker count from RANKFUSE_THREADS, else std::thread::hardware_concurrency.
std::size_t default_thread_count();

}  // namespace rankfuse
