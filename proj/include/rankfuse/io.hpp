#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankfuse/crowd.hpp"
#include "rankfuse/noise_bench.hpp"
#include "rankfuse/ranking.hpp"

// Plain-text file formats. All readers skip blank lines and lines starting
// with '#', and report malformed input as ParseError with a 1-based line.

namespace rankfuse::io {

/// One ranking per line, comma-separated object ids, best first.
std::vector<Ranking> parse_rankings(std::string_view text);
/// One non-negative real per line.
std::vector<double> parse_weights(std::string_view text);

/// Rankings file plus optional weights sidecar (absent -> uniform 1.0).
/// Throws EmptyInput, ParseError, LengthMismatch, IoError.
RankingList parse_rankings_file(const std::filesystem::path& rankings,
                                const std::optional<std::filesystem::path>& weights = {});

std::string format_rankings(const RankingList& list);
std::string format_weights(const RankingList& list);

/// Maps the worker or item tokens of a label file to integer ids. When every
/// token is an integer (positive, for workers) the integers are kept;
/// otherwise tokens are numbered 1..N in lexicographic order.
class IdTable {
 public:
  IdTable() = default;
  IdTable(const std::vector<std::string>& tokens, bool require_positive);

  bool numeric() const noexcept { return numeric_; }
  std::optional<std::int64_t> find(const std::string& token) const;
  std::string name(std::int64_t id) const;

 private:
  bool numeric_ = true;
  std::map<std::string, std::int64_t> ids_;
  std::map<std::int64_t, std::string> names_;
};

struct LabelData {
  LabelMatrix labels;
  IdTable workers;
  IdTable items;
};

/// Header `worker,item,label`; tab-delimited when the extension is .tsv.
LabelData parse_labels(std::string_view text, char delimiter);
LabelData read_label_file(const std::filesystem::path& path);

/// Header `item,label`; items must appear in `items`.
GoldLabels parse_gold(std::string_view text, char delimiter, const IdTable& items);
GoldLabels read_gold_file(const std::filesystem::path& path, const IdTable& items);

char delimiter_for(const std::filesystem::path& path);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

/// `algorithm,sigma,mean_similarity` rows after a `#` configuration line.
std::string format_sweep_curves(const SweepResult& result, std::string_view config_line);
/// `algorithm,auc` rows after a `#` configuration line.
std::string format_sweep_auc(const SweepResult& result, std::string_view config_line);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace rankfuse::io
