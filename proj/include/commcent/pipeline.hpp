#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commcent/centrality.hpp"
#include "commcent/classical.hpp"
#include "commcent/community.hpp"
#include "commcent/graph.hpp"
#include "commcent/partition.hpp"
#include "commcent/stats.hpp"
#include "commcent/topology.hpp"

namespace commcent {

inline constexpr const char* kToolVersion = "0.1.0";

/// Extension expected for files in a partitions directory: <network id>.partition
inline constexpr const char* kPartitionExtension = ".partition";

struct RunConfig {
  std::filesystem::path corpus_dir;
  /// When set, partitions are read from here instead of running Louvain.
  std::optional<std::filesystem::path> partitions_dir;
  std::uint64_t seed = 0;
  ClassicalConfig classical;
  CommunityConfig community;
  CommunityAveraging averaging = CommunityAveraging::unweighted;
  std::filesystem::path output_dir = "out";
  std::vector<ClassicalMeasure> classical_measures{kClassicalMeasures.begin(),
                                                   kClassicalMeasures.end()};
  std::vector<CommunityMeasure> community_measures{kCommunityMeasures.begin(),
                                                   kCommunityMeasures.end()};
  std::size_t jobs = 1;
};

/// Splits a comma-separated list of measure names between the two catalogs.
/// A catalog with no names in the list keeps all of its measures. Throws
/// std::invalid_argument on an unknown name.
void apply_measure_list(RunConfig& cfg, std::string_view list);

/// (definition, version) pairs describing the formulas a run uses.
std::vector<std::pair<std::string, std::string>> definition_versions(const RunConfig& cfg);

struct BetaTauSummary {
  std::string community_aware;
  /// Mean tau against the classical measures; the regression response.
  double mean_tau = kMissing;
  std::optional<stats::DistributionSummary> distribution;
};

struct NetworkReport {
  std::string id;

  // Input as read, before the component reduction.
  std::size_t input_nodes = 0;
  std::size_t input_edges = 0;
  std::size_t records = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t ignored_extra_columns = 0;
  bool reduced_to_lcc = false;

  std::vector<std::string> labels;
  std::size_t num_edges = 0;
  Partition partition;
  std::string partition_source;
  std::vector<double> louvain_level_modularity;
  bool single_community = false;

  double lambda_max = kMissing;
  double katz_s = kMissing;

  std::vector<CentralityVector> classical;
  std::vector<CentralityVector> community;
  std::vector<stats::CorrelationRecord> correlations;
  std::optional<stats::DistributionSummary> tau_distribution;
  std::vector<BetaTauSummary> per_beta;

  MacroscopicSummary macro;
  MesoscopicSummary meso;

  std::size_t num_nodes() const noexcept { return labels.size(); }
};

/// Runs the whole per-network analysis on `g`: reduction to the largest
/// component, partition (Louvain unless `partition` is given; a given
/// partition is over `g` and is projected by label), the selected measures,
/// every (classical, community-aware) tau, and the topology summaries.
NetworkReport analyze_network(const std::string& id, const Graph& g, const RunConfig& cfg,
                              const std::optional<Partition>& partition = std::nullopt);

/// Loads an edge list (and optional partition file) and analyses it. Errors
/// are rethrown as std::runtime_error prefixed with the network id.
NetworkReport analyze_file(const std::string& id, const std::filesystem::path& edgelist,
                           const RunConfig& cfg,
                           const std::optional<std::filesystem::path>& partition_file = std::nullopt);

struct PairSummary {
  std::string classical;
  std::string community_aware;
  double mean_tau = kMissing;
  double std_tau = kMissing;
  std::size_t n_networks = 0;
};

struct SkippedNetwork {
  std::string id;
  std::string reason;
};

struct CorpusSummary {
  std::vector<PairSummary> pairs;
  stats::ConsistencyMatrix consistency;
  /// Over the finite off-diagonal entries (each unordered pair once).
  std::optional<stats::DistributionSummary> consistency_summary;
  /// One record per (community-aware measure, feature); slope etc. are NaN
  /// when fewer than three networks have both values.
  std::vector<stats::RegressionRecord> regressions;
};

CorpusSummary summarize_corpus(const std::vector<NetworkReport>& reports);

struct BatchResult {
  std::vector<NetworkReport> reports;  // sorted by id
  std::vector<SkippedNetwork> skipped;
  CorpusSummary summary;
};

/// Edge-list files a batch run picks up: *.edges, *.edgelist, *.el, *.txt,
/// sorted by file name. The network id is the file stem.
std::vector<std::filesystem::path> corpus_files(const std::filesystem::path& dir);

/// Analyses every corpus file on `cfg.jobs` workers. Failing networks are
/// listed in `skipped`. Throws if the corpus is empty.
BatchResult batch(const RunConfig& cfg);

/// "P*" for p <= 0.01, "P" for p <= 0.05, otherwise empty.
std::string significance_flag(double p_value);

/// Writes the CSV reports and manifest.json into cfg.output_dir.
void emit_reports(const BatchResult& result, const RunConfig& cfg);

}  // namespace commcent
