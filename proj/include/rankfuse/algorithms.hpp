#pragma once

#include <string_view>
#include <vector>

#include "rankfuse/baselines.hpp"
#include "rankfuse/weighted_merge.hpp"

namespace rankfuse {

/// Every aggregation method the CLI and the benchmark can run.
enum class Algorithm { Proposed, MC4, RobustRA, MeanRank, GeometricRank, Stuart, SimpleVoting, Borda };

std::string_view to_string(Algorithm algorithm) noexcept;
/// "proposed" or any baseline name accepted by parse_baseline_kind().
Algorithm parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

Ranking run_algorithm(Algorithm algorithm, const RankingList& inputs,
                      const MergeConfig& merge_cfg = {}, const Mc4Config& mc4_cfg = {});

}  // namespace rankfuse
