#include "rankfuse/crowd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "rankfuse/errors.hpp"

namespace rankfuse {

LabelMatrix::LabelMatrix(std::vector<LabelRecord> records) : records_(std::move(records)) {
  if (records_.empty()) fail(ErrorCode::EmptyInput, "label matrix has no records");
  std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    return a.item != b.item ? a.item < b.item : a.worker < b.worker;
  });
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (r.worker <= 0) {
      fail(ErrorCode::InvalidObjectId, "worker id " + std::to_string(r.worker) + " is not positive");
    }
    if (r.label < 0) {
      fail(ErrorCode::InvalidLabel, "label " + std::to_string(r.label) + " is negative");
    }
    if (i > 0 && records_[i - 1].item == r.item && records_[i - 1].worker == r.worker) {
      fail(ErrorCode::DuplicateLabel, "worker " + std::to_string(r.worker) +
                                          " labeled item " + std::to_string(r.item) + " twice");
    }
    if (i == 0 || records_[i - 1].item != r.item) {
      items_.push_back(r.item);
      item_offsets_.push_back(i);
    }
    workers_.push_back(r.worker);
  }
  item_offsets_.push_back(records_.size());
  std::sort(workers_.begin(), workers_.end());
  workers_.erase(std::unique(workers_.begin(), workers_.end()), workers_.end());
}

std::span<const LabelRecord> LabelMatrix::item_labels(ItemId item) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), item);
  if (it == items_.end() || *it != item) return {};
  const auto idx = static_cast<std::size_t>(it - items_.begin());
  return std::span<const LabelRecord>(records_).subspan(
      item_offsets_[idx], item_offsets_[idx + 1] - item_offsets_[idx]);
}

bool LabelMatrix::has_item(ItemId item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

namespace {

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Picks the label with the largest tally; near-equal maxima are ties.
CategoryId pick_label(const std::map<CategoryId, double>& tally, CategoryId tie_label) {
  double best = -1.0;
  for (const auto& [label, v] : tally) best = std::max(best, v);
  std::vector<CategoryId> tied;
  for (const auto& [label, v] : tally) {
    if (nearly_equal(v, best)) tied.push_back(label);
  }
  if (tied.size() == 1) return tied.front();
  if (std::find(tied.begin(), tied.end(), tie_label) != tied.end()) return tie_label;
  return tied.front();
}

}  // namespace

LabelAssignment majority_vote(const LabelMatrix& labels, CategoryId tie_label) {
  LabelAssignment out;
  for (ItemId item : labels.items()) {
    const auto records = labels.item_labels(item);
    if (records.empty()) fail(ErrorCode::EmptyItem, "item " + std::to_string(item) + " has no labels");
    std::map<CategoryId, double> tally;
    for (const auto& r : records) tally[r.label] += 1.0;
    out.emplace(item, pick_label(tally, tie_label));
  }
  return out;
}

std::string_view to_string(Feature feature) noexcept {
  switch (feature) {
    case Feature::Accuracy: return "accuracy";
    case Feature::Specificity: return "specificity";
    case Feature::Sensitivity: return "sensitivity";
    case Feature::Precision: return "precision";
  }
  return "unknown";
}

Feature parse_feature(std::string_view name) {
  for (Feature f : default_features()) {
    if (to_string(f) == name) return f;
  }
  if (name == "recall") return Feature::Sensitivity;
  fail(ErrorCode::InvalidConfig, "unknown feature '" + std::string(name) + "'");
}

std::vector<Feature> default_features() {
  return {Feature::Accuracy, Feature::Specificity, Feature::Sensitivity, Feature::Precision};
}

std::vector<Feature> literal_features() {
  return {Feature::Accuracy, Feature::Specificity, Feature::Sensitivity, Feature::Sensitivity};
}

std::optional<double> WorkerFeatures::get(Feature feature) const noexcept {
  switch (feature) {
    case Feature::Accuracy: return accuracy;
    case Feature::Specificity: return specificity;
    case Feature::Sensitivity: return sensitivity;
    case Feature::Precision: return precision;
  }
  return std::nullopt;
}

namespace {

std::optional<double> ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

AnnotatorFeatures annotator_features(const LabelMatrix& labels, const LabelAssignment& reference) {
  std::map<WorkerId, ConfusionCounts> counts;
  for (const auto& r : labels.records()) {
    auto ref = reference.find(r.item);
    if (ref == reference.end()) {
      fail(ErrorCode::UnknownItem, "item " + std::to_string(r.item) + " has no reference label");
    }
    if (r.label > 1 || ref->second < 0 || ref->second > 1) {
      fail(ErrorCode::InvalidLabel, "annotator features need binary labels (item " +
                                        std::to_string(r.item) + ")");
    }
    auto& c = counts[r.worker];
    const bool said_positive = r.label == 1;
    const bool is_positive = ref->second == 1;
    if (said_positive && is_positive) ++c.tp;
    else if (!said_positive && !is_positive) ++c.tn;
    else if (said_positive) ++c.fp;
    else ++c.fn;
  }

  AnnotatorFeatures out;
  out.reserve(counts.size());
  for (const auto& [worker, c] : counts) {
    WorkerFeatures f;
    f.worker = worker;
    f.counts = c;
    f.accuracy = ratio(c.tp + c.tn, c.total());
    f.sensitivity = ratio(c.tp, c.tp + c.fn);
    f.specificity = ratio(c.tn, c.tn + c.fp);
    f.precision = ratio(c.tp, c.tp + c.fp);
    out.push_back(f);
  }
  return out;
}

RankingList feature_rankings(const AnnotatorFeatures& features, std::span<const Feature> selected,
                             double undefined_value) {
  if (features.empty()) fail(ErrorCode::EmptyInput, "no workers to rank");
  if (selected.empty()) fail(ErrorCode::InvalidConfig, "no features selected");
  std::vector<Ranking> rankings;
  for (Feature feature : selected) {
    std::vector<std::pair<double, WorkerId>> keyed;
    keyed.reserve(features.size());
    for (const auto& f : features) {
      keyed.emplace_back(f.get(feature).value_or(undefined_value), f.worker);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<ObjectId> order;
    order.reserve(keyed.size());
    for (const auto& [v, w] : keyed) order.push_back(w);
    rankings.emplace_back(std::move(order));
  }
  return RankingList::uniform(std::move(rankings));
}

WorkerWeights rank_to_weight(const Ranking& consensus) {
  const auto m = static_cast<double>(consensus.size());
  WorkerWeights out;
  for (const auto& [worker, k] : consensus.by_id()) {
    out.emplace(worker, (m - static_cast<double>(k) + 1.0) / m);
  }
  return out;
}

LabelAssignment weighted_label_aggregate(const LabelMatrix& labels, const WorkerWeights& weights,
                                         CategoryId tie_label) {
  LabelAssignment out;
  for (ItemId item : labels.items()) {
    std::map<CategoryId, double> tally;
    for (const auto& r : labels.item_labels(item)) {
      auto w = weights.find(r.worker);
      if (w == weights.end()) {
        fail(ErrorCode::MissingWeight, "worker " + std::to_string(r.worker) + " has no weight");
      }
      tally[r.label] += w->second;
    }
    out.emplace(item, pick_label(tally, tie_label));
  }
  return out;
}

double evaluate_accuracy(const LabelAssignment& predicted, const GoldLabels& gold) {
  if (gold.empty()) fail(ErrorCode::EmptyInput, "no gold labels to evaluate against");
  std::size_t correct = 0;
  for (const auto& [item, label] : gold) {
    auto p = predicted.find(item);
    if (p == predicted.end()) {
      fail(ErrorCode::MissingPrediction, "no prediction for gold item " + std::to_string(item));
    }
    if (p->second == label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(gold.size());
}

void PipelineConfig::validate() const {
  if (features.empty()) fail(ErrorCode::InvalidConfig, "no features selected");
  if (!std::isfinite(undefined_feature_value)) {
    fail(ErrorCode::InvalidConfig, "undefined_feature_value must be finite");
  }
  merge.validate();
}

CrowdReport run_pipeline(const LabelMatrix& labels, const GoldLabels& gold,
                         const PipelineConfig& cfg) {
  cfg.validate();
  for (const auto& [item, label] : gold) {
    if (!labels.has_item(item)) {
      fail(ErrorCode::UnknownItem, "gold item " + std::to_string(item) + " has no crowd labels");
    }
  }

  LabelAssignment majority = majority_vote(labels, cfg.tie_label);
  const double majority_accuracy = evaluate_accuracy(majority, gold);
  AnnotatorFeatures features = annotator_features(labels, majority);
  const RankingList rankings =
      feature_rankings(features, cfg.features, cfg.undefined_feature_value);
  AggregationResult consensus = aggregate(rankings, cfg.merge);

  WorkerWeights weights;
  if (cfg.uniform_weights) {
    for (WorkerId w : labels.workers()) weights.emplace(w, 1.0);
  } else {
    weights = rank_to_weight(consensus.consensus);
  }
  LabelAssignment predictions = weighted_label_aggregate(labels, weights, cfg.tie_label);
  const double proposed_accuracy = evaluate_accuracy(predictions, gold);
  CrowdReport report{std::move(majority),  std::move(features),    rankings.rankings(),
                     std::move(consensus), std::move(weights),     std::move(predictions),
                     majority_accuracy,    proposed_accuracy};
  return report;
}

PlantedCrowd make_planted_crowd(std::size_t workers, std::size_t items, std::uint64_t seed,
                                double p_low, double p_high) {
  if (workers < 1 || items < 1) fail(ErrorCode::InvalidConfig, "planted crowd needs workers and items");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ability(p_low, p_high);
  std::bernoulli_distribution coin(0.5);

  std::vector<double> abilities(workers);
  for (double& p : abilities) p = ability(rng);
  GoldLabels gold;
  for (std::size_t i = 1; i <= items; ++i) gold.emplace(static_cast<ItemId>(i), coin(rng) ? 1 : 0);

  std::vector<LabelRecord> records;
  records.reserve(workers * items);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t j = 0; j < workers; ++j) {
    for (const auto& [item, truth] : gold) {
      const bool correct = unit(rng) < abilities[j];
      records.push_back({static_cast<WorkerId>(j + 1), item, correct ? truth : 1 - truth});
    }
  }
  return {LabelMatrix(std::move(records)), std::move(gold), std::move(abilities)};
}

}  // namespace rankfuse
