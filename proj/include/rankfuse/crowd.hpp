#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankfuse/ranking.hpp"
#include "rankfuse/weighted_merge.hpp"

namespace rankfuse {

using WorkerId = ObjectId;
using ItemId = std::int64_t;
using CategoryId = int;

using LabelAssignment = std::map<ItemId, CategoryId>;
using GoldLabels = std::map<ItemId, CategoryId>;
using WorkerWeights = std::map<WorkerId, double>;

struct LabelRecord {
  WorkerId worker = 0;
  ItemId item = 0;
  CategoryId label = 0;
};

/// Sparse worker x item label table. At most one label per (worker, item);
/// worker ids are positive, labels non-negative.
class LabelMatrix {
 public:
  explicit LabelMatrix(std::vector<LabelRecord> records);

  /// Records sorted by (item, worker).
  const std::vector<LabelRecord>& records() const noexcept { return records_; }
  const std::vector<WorkerId>& workers() const noexcept { return workers_; }
  const std::vector<ItemId>& items() const noexcept { return items_; }
  /// Records for one item; empty if the item is unknown.
  std::span<const LabelRecord> item_labels(ItemId item) const;
  bool has_item(ItemId item) const;

 private:
  std::vector<LabelRecord> records_;
  std::vector<WorkerId> workers_;
  std::vector<ItemId> items_;
  std::vector<std::size_t> item_offsets_;
};

/// Per-item plurality label; exact ties go to `tie_label` (or to the
/// smallest tied label when `tie_label` is not among them).
LabelAssignment majority_vote(const LabelMatrix& labels, CategoryId tie_label = 1);

enum class Feature { Accuracy, Specificity, Sensitivity, Precision };

std::string_view to_string(Feature feature) noexcept;
Feature parse_feature(std::string_view name);
/// accuracy, specificity, sensitivity, precision
std::vector<Feature> default_features();
/// accuracy, specificity, sensitivity, sensitivity (recall is sensitivity)
std::vector<Feature> literal_features();

struct ConfusionCounts {
  std::int64_t tp = 0, tn = 0, fp = 0, fn = 0;
  std::int64_t total() const noexcept { return tp + tn + fp + fn; }
};

struct WorkerFeatures {
  WorkerId worker = 0;
  ConfusionCounts counts;
  std::optional<double> accuracy, specificity, sensitivity, precision;

  std::optional<double> get(Feature feature) const noexcept;
};

/// Sorted by worker id.
using AnnotatorFeatures = std::vector<WorkerFeatures>;

/// Confusion-matrix features of every worker against `reference`, positive
/// class 1. Requires binary labels (InvalidLabel) and a reference label for
/// every labeled item (UnknownItem).
AnnotatorFeatures annotator_features(const LabelMatrix& labels, const LabelAssignment& reference);

/// One ranking per selected feature: workers by descending value, ties by
/// ascending id; undefined values count as `undefined_value`. Uniform weights.
RankingList feature_rankings(const AnnotatorFeatures& features, std::span<const Feature> selected,
                             double undefined_value = 0.0);

/// Linear map: the worker at position k of m gets (m - k + 1) / m.
WorkerWeights rank_to_weight(const Ranking& consensus);

/// Per-item label with the largest summed worker weight; ties as in
/// majority_vote(). Throws MissingWeight for unweighted workers.
LabelAssignment weighted_label_aggregate(const LabelMatrix& labels, const WorkerWeights& weights,
                                         CategoryId tie_label = 1);

/// Fraction of gold items predicted correctly.
double evaluate_accuracy(const LabelAssignment& predicted, const GoldLabels& gold);

struct PipelineConfig {
  std::vector<Feature> features = default_features();
  CategoryId tie_label = 1;
  MergeConfig merge;
  double undefined_feature_value = 0.0;
  /// Skip the annotator ranking and vote with weight 1.0 per worker.
  bool uniform_weights = false;

  void validate() const;
};

struct CrowdReport {
  LabelAssignment majority;
  AnnotatorFeatures features;
  std::vector<Ranking> feature_rankings;
  AggregationResult consensus;
  WorkerWeights weights;
  LabelAssignment predictions;
  double majority_accuracy = 0.0;
  double proposed_accuracy = 0.0;
};

CrowdReport run_pipeline(const LabelMatrix& labels, const GoldLabels& gold,
                         const PipelineConfig& cfg = {});

/// Synthetic crowd in which worker j labels every item correctly with
/// probability abilities[j-1] (drawn uniformly from [p_low, p_high]).
struct PlantedCrowd {
  LabelMatrix labels;
  GoldLabels gold;
  std::vector<double> abilities;
};

PlantedCrowd make_planted_crowd(std::size_t workers, std::size_t items, std::uint64_t seed,
                                double p_low = 0.55, double p_high = 0.95);

}  // namespace rankfuse
