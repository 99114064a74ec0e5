// rankfuse command-line driver: aggregate, bench, crowd, metrics.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rankfuse/algorithms.hpp"
#include "rankfuse/crowd.hpp"
#include "rankfuse/errors.hpp"
#include "rankfuse/io.hpp"
#include "rankfuse/metrics.hpp"
#include "rankfuse/noise_bench.hpp"

namespace fs = std::filesystem;
using namespace rankfuse;

namespace {

std::string join_order(const Ranking& r) {
  std::string out;
  for (ObjectId id : r.order()) out += (out.empty() ? "" : ",") + std::to_string(id);
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const std::optional<fs::path>& path, const std::string& text) {
  if (path) {
    io::write_text(*path, text);
  } else {
    std::cout << text;
  }
}

struct AggregateArgs {
  fs::path rankings;
  std::optional<fs::path> weights;
  std::string algorithm = "proposed";
  std::string distance = "footrule";
  double alpha = 0.5;
  std::uint64_t tie_cap = 720;
  std::string initial_weights;
  std::optional<fs::path> output;
};

int run_aggregate(const AggregateArgs& args) {
  const RankingList inputs = io::parse_rankings_file(args.rankings, args.weights);
  const Algorithm algorithm = parse_algorithm(args.algorithm);
  MergeConfig cfg;
  cfg.distance = parse_distance_kind(args.distance);
  cfg.alpha = args.alpha;
  cfg.tie_enum_cap = args.tie_cap;
  const std::string policy =
      args.initial_weights.empty() ? (args.weights ? "provided" : "uniform") : args.initial_weights;
  if (policy == "uniform") {
    cfg.initial_weight_policy = InitialWeightPolicy::Uniform;
  } else if (policy == "provided") {
    cfg.initial_weight_policy = InitialWeightPolicy::Provided;
  } else {
    fail(ErrorCode::InvalidConfig, "initial weights must be 'uniform' or 'provided'");
  }
  cfg.validate();

  std::ostringstream out;
  out << "# rankfuse aggregate rankings=" << args.rankings.string()
      << " weights=" << (args.weights ? args.weights->string() : "-")
      << " algorithm=" << to_string(algorithm) << " distance=" << to_string(cfg.distance)
      << " alpha=" << io::format_double(cfg.alpha) << " tie_enum_cap=" << cfg.tie_enum_cap
      << " initial_weights=" << policy << '\n';
  out << "algorithm=" << to_string(algorithm) << '\n';

  if (algorithm == Algorithm::Proposed) {
    const AggregationResult result = aggregate(inputs, cfg);
    out << "consensus=" << join_order(result.consensus) << '\n';
    out << "objective=" << io::format_double(result.objective) << '\n';
    out << "weight=" << io::format_double(result.weight) << '\n';
    for (std::size_t i = 0; i < result.merge_trace.size(); ++i) {
      const MergeStep& s = result.merge_trace[i];
      std::string ties;
      for (std::size_t g : s.tie_group_sizes) ties += (ties.empty() ? "" : "x") + std::to_string(g);
      out << "merge." << (i + 1) << "=pair:" << s.left << '+' << s.right
          << " similarity:" << io::format_double(s.similarity)
          << " ties:" << (ties.empty() ? "-" : ties) << " candidates:" << s.candidates
          << " optimal:" << s.optimal_candidates << " weight:" << io::format_double(s.weight)
          << '\n';
    }
  } else {
    const RankingList& effective =
        cfg.initial_weight_policy == InitialWeightPolicy::Uniform ? inputs.with_uniform_weights()
                                                                  : inputs;
    const Ranking consensus = run_algorithm(algorithm, effective, cfg);
    out << "consensus=" << join_order(consensus) << '\n';
    out << "objective=" << io::format_double(weighted_total_distance(consensus, effective, cfg.distance))
        << '\n';
  }
  emit(args.output, out.str());
  return 0;
}

struct BenchArgs {
  SweepConfig cfg;
  std::string algorithms = "all";
  fs::path output_dir = ".";
};

int run_bench(BenchArgs args) {
  if (args.algorithms != "all") {
    args.cfg.algorithms.clear();
    for (const auto& name : split_list(args.algorithms)) {
      args.cfg.algorithms.push_back(parse_algorithm(name));
    }
  }
  args.cfg.validate();
  const SweepResult result = run_sweep(args.cfg);

  std::string names;
  for (Algorithm a : args.cfg.algorithms) names += (names.empty() ? "" : ",") + std::string(to_string(a));
  std::ostringstream config;
  config << "rankfuse bench n_rankings=" << args.cfg.n_rankings
         << " m_objects=" << args.cfg.m_objects << " iterations=" << args.cfg.iterations
         << " sigma_step=" << io::format_double(args.cfg.sigma_step) << " seed=" << args.cfg.seed
         << " alpha=" << io::format_double(args.cfg.merge.alpha)
         << " tie_enum_cap=" << args.cfg.merge.tie_enum_cap << " algorithms=" << names
         << " rng=mt19937_64/seed_seq(seed,level,index)";

  io::write_text(args.output_dir / "curves.csv", io::format_sweep_curves(result, config.str()));
  io::write_text(args.output_dir / "auc.csv", io::format_sweep_auc(result, config.str()));
  std::cout << io::format_sweep_auc(result, config.str());
  return 0;
}

struct CrowdArgs {
  fs::path labels;
  fs::path gold;
  std::string features = "default";
  int tie_label = 1;
  double alpha = 0.5;
  double undefined_value = 0.0;
  bool uniform_weights = false;
  std::optional<fs::path> output_dir;
};

std::string feature_cell(const std::optional<double>& v) {
  return v ? io::format_double(*v) : "undefined";
}

int run_crowd(const CrowdArgs& args) {
  const io::LabelData data = io::read_label_file(args.labels);
  const GoldLabels gold = io::read_gold_file(args.gold, data.items);

  PipelineConfig cfg;
  if (args.features == "default") {
    cfg.features = default_features();
  } else if (args.features == "literal") {
    cfg.features = literal_features();
  } else {
    cfg.features.clear();
    for (const auto& name : split_list(args.features)) cfg.features.push_back(parse_feature(name));
  }
  cfg.tie_label = args.tie_label;
  cfg.merge.alpha = args.alpha;
  cfg.undefined_feature_value = args.undefined_value;
  cfg.uniform_weights = args.uniform_weights;
  const CrowdReport report = run_pipeline(data.labels, gold, cfg);

  std::string feature_names;
  for (Feature f : cfg.features) feature_names += (feature_names.empty() ? "" : ",") + std::string(to_string(f));
  std::ostringstream out;
  out << "# rankfuse crowd labels=" << args.labels.string() << " gold=" << args.gold.string()
      << " features=" << feature_names << " tie_label=" << cfg.tie_label
      << " alpha=" << io::format_double(cfg.merge.alpha)
      << " undefined_value=" << io::format_double(cfg.undefined_feature_value)
      << " uniform_weights=" << (cfg.uniform_weights ? "true" : "false") << '\n';
  out << "workers=" << data.labels.workers().size() << '\n';
  out << "items=" << data.labels.items().size() << '\n';
  out << "gold_items=" << gold.size() << '\n';
  out << "majority_accuracy=" << io::format_double(report.majority_accuracy) << '\n';
  out << "proposed_accuracy=" << io::format_double(report.proposed_accuracy) << '\n';
  out << "consensus_objective=" << io::format_double(report.consensus.objective) << '\n';
  std::string ranking;
  for (ObjectId w : report.consensus.consensus.order()) {
    ranking += (ranking.empty() ? "" : ",") + data.workers.name(w);
  }
  out << "consensus_annotators=" << ranking << '\n';

  if (args.output_dir) {
    io::write_text(*args.output_dir / "report.txt", out.str());
    std::ostringstream csv;
    csv << "# rankfuse crowd annotators; see report.txt for configuration\n"
        << "worker,rank,weight,accuracy,specificity,sensitivity,precision\n";
    const Ranking& consensus = report.consensus.consensus;
    for (Position k = 1; k <= static_cast<Position>(consensus.size()); ++k) {
      const WorkerId w = consensus.at(k);
      const auto& f = *std::find_if(report.features.begin(), report.features.end(),
                                    [&](const WorkerFeatures& x) { return x.worker == w; });
      csv << data.workers.name(w) << ',' << k << ',' << io::format_double(report.weights.at(w))
          << ',' << feature_cell(f.accuracy) << ',' << feature_cell(f.specificity) << ','
          << feature_cell(f.sensitivity) << ',' << feature_cell(f.precision) << '\n';
    }
    io::write_text(*args.output_dir / "annotators.csv", csv.str());
  }
  std::cout << out.str();
  return 0;
}

struct MetricsArgs {
  fs::path rankings;
  std::vector<std::size_t> pair;
  std::string distance = "footrule";
};

int run_metrics(const MetricsArgs& args) {
  const RankingList inputs = io::parse_rankings_file(args.rankings);
  const DistanceKind kind = parse_distance_kind(args.distance);
  std::cout << "# rankfuse metrics rankings=" << args.rankings.string()
            << " distance=" << to_string(kind) << '\n';
  if (!args.pair.empty()) {
    const std::size_t i = args.pair[0];
    const std::size_t j = args.pair[1];
    if (i >= inputs.size() || j >= inputs.size()) {
      fail(ErrorCode::InvalidConfig, "pair index out of range (0.." +
                                         std::to_string(inputs.size() - 1) + ")");
    }
    const Ranking& a = inputs[i].ranking;
    const Ranking& b = inputs[j].ranking;
    std::cout << "footrule=" << footrule_distance(a, b) << '\n'
              << "kendall=" << kendall_distance(a, b) << '\n'
              << "similarity=" << io::format_double(normalized_similarity(a, b, kind)) << '\n';
    return 0;
  }
  const SimilarityMatrix sim = similarity_matrix(inputs, kind);
  for (std::size_t i = 0; i < sim.size(); ++i) {
    for (std::size_t j = 0; j < sim.size(); ++j) {
      std::cout << (j ? "," : "") << io::format_double(sim(i, j));
    }
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rankfuse: weighted rank aggregation and crowd label fusion"};
  app.require_subcommand(1);

  AggregateArgs agg;
  auto* agg_cmd = app.add_subcommand("aggregate", "Aggregate a file of rankings");
  agg_cmd->add_option("--rankings", agg.rankings, "One comma-separated ranking per line")
      ->required()
      ->check(CLI::ExistingFile);
  agg_cmd->add_option("--weights", agg.weights, "One weight per ranking")->check(CLI::ExistingFile);
  agg_cmd->add_option("--algorithm", agg.algorithm,
                      "proposed, borda, mean, geometric, voting, mc4, stuart, rra");
  agg_cmd->add_option("--distance", agg.distance, "footrule or kendall");
  agg_cmd->add_option("--alpha", agg.alpha, "Parent-weight share of merged weights");
  agg_cmd->add_option("--tie-cap", agg.tie_cap, "Max tie-break orderings per merge");
  agg_cmd->add_option("--initial-weights", agg.initial_weights,
                      "uniform or provided (default: provided iff --weights)");
  agg_cmd->add_option("--output", agg.output, "Write the result here instead of stdout");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Gaussian-noise sweep with AUC summary");
  bench_cmd->add_option("--n-rankings", bench.cfg.n_rankings);
  bench_cmd->add_option("--m-objects", bench.cfg.m_objects);
  bench_cmd->add_option("--iterations", bench.cfg.iterations);
  bench_cmd->add_option("--sigma-step", bench.cfg.sigma_step);
  bench_cmd->add_option("--seed", bench.cfg.seed);
  bench_cmd->add_option("--alpha", bench.cfg.merge.alpha);
  bench_cmd->add_option("--algorithms", bench.algorithms, "Comma list or 'all'");
  bench_cmd->add_option("--threads", bench.cfg.threads, "0 = RANKFUSE_THREADS or all cores");
  bench_cmd->add_option("--output-dir", bench.output_dir);

  CrowdArgs crowd;
  auto* crowd_cmd = app.add_subcommand("crowd", "Annotator ranking and weighted label fusion");
  crowd_cmd->add_option("--labels", crowd.labels, "worker,item,label (.csv or .tsv)")
      ->required()
      ->check(CLI::ExistingFile);
  crowd_cmd->add_option("--gold", crowd.gold, "item,label")->required()->check(CLI::ExistingFile);
  crowd_cmd->add_option("--features", crowd.features, "default, literal, or a comma list");
  crowd_cmd->add_option("--tie-label", crowd.tie_label);
  crowd_cmd->add_option("--alpha", crowd.alpha);
  crowd_cmd->add_option("--undefined-value", crowd.undefined_value);
  crowd_cmd->add_flag("--uniform-weights", crowd.uniform_weights,
                      "Vote with weight 1 per worker (majority voting)");
  crowd_cmd->add_option("--output-dir", crowd.output_dir);

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Distances between rankings");
  metrics_cmd->add_option("--rankings", metrics.rankings)->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--pair", metrics.pair, "Two 0-based ranking indices")->expected(2);
  metrics_cmd->add_option("--distance", metrics.distance, "footrule or kendall");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*agg_cmd) return run_aggregate(agg);
    if (*bench_cmd) return run_bench(bench);
    if (*crowd_cmd) return run_crowd(crowd);
    if (*metrics_cmd) return run_metrics(metrics);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
