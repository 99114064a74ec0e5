#include "rankfuse/algorithms.hpp"

#include <string>

#include "rankfuse/errors.hpp"

namespace rankfuse {
namespace {

BaselineKind as_baseline(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::MC4: return BaselineKind::MC4;
    case Algorithm::RobustRA: return BaselineKind::RobustRA;
    case Algorithm::MeanRank: return BaselineKind::MeanRank;
    case Algorithm::GeometricRank: return BaselineKind::GeometricRank;
    case Algorithm::Stuart: return BaselineKind::Stuart;
    case Algorithm::SimpleVoting: return BaselineKind::SimpleVoting;
    case Algorithm::Borda: return BaselineKind::Borda;
    case Algorithm::Proposed: break;
  }
  fail(ErrorCode::InvalidConfig, "the proposed aggregator is not a baseline");
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  if (algorithm == Algorithm::Proposed) return "proposed";
  return to_string(as_baseline(algorithm));
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  fail(ErrorCode::InvalidConfig, "unknown algorithm '" + std::string(name) + "'");
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> algorithms = {
      Algorithm::MC4,    Algorithm::RobustRA,     Algorithm::MeanRank, Algorithm::GeometricRank,
      Algorithm::Stuart, Algorithm::SimpleVoting, Algorithm::Borda,    Algorithm::Proposed};
  return algorithms;
}

Ranking run_algorithm(Algorithm algorithm, const RankingList& inputs,
                      const MergeConfig& merge_cfg, const Mc4Config& mc4_cfg) {
  if (algorithm == Algorithm::Proposed) return aggregate(inputs, merge_cfg).consensus;
  return run_baseline(as_baseline(algorithm), inputs, mc4_cfg);
}

}  // namespace rankfuse
