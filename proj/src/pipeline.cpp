#include "commcent/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace commcent {

namespace fs = std::filesystem;

void apply_measure_list(RunConfig& cfg, std::string_view list) {
  std::vector<ClassicalMeasure> classical;
  std::vector<CommunityMeasure> community;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view token = list.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      if (auto c = parse_classical(token)) {
        if (std::find(classical.begin(), classical.end(), *c) == classical.end())
          classical.push_back(*c);
      } else if (auto b = parse_community(token)) {
        if (std::find(community.begin(), community.end(), *b) == community.end())
          community.push_back(*b);
      } else {
        throw std::invalid_argument("unknown measure '" + std::string(token) + "'");
      }
    }
    start = end + 1;
  }
  // Keep catalog order regardless of the order given.
  auto by_catalog = [](auto& chosen, const auto& catalog) {
    std::sort(chosen.begin(), chosen.end(), [&](auto a, auto b) {
      return std::find(catalog.begin(), catalog.end(), a) <
             std::find(catalog.begin(), catalog.end(), b);
    });
  };
  if (!classical.empty()) {
    by_catalog(classical, kClassicalMeasures);
    cfg.classical_measures = std::move(classical);
  }
  if (!community.empty()) {
    by_catalog(community, kCommunityMeasures);
    cfg.community_measures = std::move(community);
  }
}

std::vector<std::pair<std::string, std::string>> definition_versions(const RunConfig& cfg) {
  const bool weighted = cfg.averaging == CommunityAveraging::size_weighted;
  return {
      {"preprocessing", "largest-connected-component/1"},
      {"betweenness", "brandes-unordered-pairs-unnormalised/1"},
      {"closeness", "inverse-mean-distance/1"},
      {"katz", "walk-sum-from-length-1/1"},
      {"pagerank", "uniform-dangling-redistribution/1"},
      {"subgraph", "exp-diagonal-eigendecomposition/1"},
      {"cbm", "two-term-entropy-times-k-over-2m/1"},
      {"comm", "zero-term-when-community-max-is-zero/1"},
      {"mv", cfg.community.mv_absolute ? "absolute/1" : "signed/1"},
      {"ksc", "delta-mix-intra-inter-core/1"},
      {"tau", "kendall-tau-b/1"},
      {"degree_exponent", "discrete-mle-ks-xmin-min-tail-10/1"},
      {"community_means", weighted ? "size-weighted/1" : "unweighted/1"},
      {"odf", "k-inter-over-k/1"},
      {"embeddedness", "node-mean-k-intra-over-k/1"},
      {"hub_dominance", "max-k-intra-over-nc-minus-1/1"},
      {"internal_distance", "connected-pairs-mean-geodesic/1"},
  };
}

namespace {

double finite_mean(const std::vector<double>& v) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double x : v) {
    if (!std::isfinite(x)) continue;
    sum += x;
    ++n;
  }
  return n > 0 ? sum / static_cast<double>(n) : kMissing;
}

std::optional<stats::DistributionSummary> finite_summary(const std::vector<double>& v) {
  std::vector<double> kept;
  for (double x : v)
    if (std::isfinite(x)) kept.push_back(x);
  if (kept.empty()) return std::nullopt;
  return stats::summarize(kept);
}

}  // namespace

NetworkReport analyze_network(const std::string& id, const Graph& g, const RunConfig& cfg,
                              const std::optional<Partition>& partition) {
  if (g.num_nodes() == 0) throw std::invalid_argument("network is empty");
  NetworkReport r;
  r.id = id;
  r.input_nodes = g.num_nodes();
  r.input_edges = g.num_edges();

  const Graph lcc = largest_connected_component(g);
  r.reduced_to_lcc = lcc.num_nodes() != g.num_nodes();
  r.labels = lcc.labels();
  r.num_edges = lcc.num_edges();
  if (lcc.num_edges() == 0) throw std::invalid_argument("largest component has no edges");

  if (partition) {
    if (partition->num_nodes() != g.num_nodes())
      throw std::invalid_argument("partition does not cover the network");
    r.partition = project_partition(g, *partition, lcc);
    r.partition_source = "file";
  } else {
    LouvainResult lr = louvain_levels(lcc, cfg.seed);
    r.partition = std::move(lr.partition);
    r.louvain_level_modularity = std::move(lr.level_modularity);
    r.partition_source = "louvain";
  }
  r.single_community = r.partition.num_communities() == 1;

  r.lambda_max = spectral_radius(lcc);
  r.katz_s = cfg.classical.katz_s.value_or(cfg.classical.katz_fraction / r.lambda_max);
  ClassicalConfig classical_cfg = cfg.classical;
  classical_cfg.katz_s = r.katz_s;

  for (ClassicalMeasure m : cfg.classical_measures)
    r.classical.push_back(compute(m, lcc, classical_cfg));
  const CommunityContext ctx(lcc, r.partition);
  for (CommunityMeasure m : cfg.community_measures)
    r.community.push_back(compute(m, ctx, cfg.community));

  // tau[j][i]: community-aware j against classical i.
  std::vector<std::vector<double>> tau(r.community.size(),
                                       std::vector<double>(r.classical.size(), kMissing));
  for (std::size_t j = 0; j < r.community.size(); ++j) {
    for (std::size_t i = 0; i < r.classical.size(); ++i) {
      try {
        tau[j][i] = stats::kendall_tau(r.classical[i].scores, r.community[j].scores);
      } catch (const std::invalid_argument&) {
        // constant score vector: tau undefined, kept as a missing value
      }
    }
    r.per_beta.push_back({r.community[j].measure, finite_mean(tau[j]), finite_summary(tau[j])});
  }
  std::vector<double> all_taus;
  for (std::size_t i = 0; i < r.classical.size(); ++i) {
    for (std::size_t j = 0; j < r.community.size(); ++j) {
      r.correlations.push_back({id, r.classical[i].measure, r.community[j].measure, tau[j][i]});
      all_taus.push_back(tau[j][i]);
    }
  }
  r.tau_distribution = finite_summary(all_taus);

  r.macro = macroscopic(lcc);
  r.meso = mesoscopic(lcc, r.partition, cfg.averaging);
  return r;
}

NetworkReport analyze_file(const std::string& id, const fs::path& edgelist, const RunConfig& cfg,
                           const std::optional<fs::path>& partition_file) {
  try {
    EdgeListLoad load = load_edgelist(edgelist);
    std::optional<Partition> p;
    if (partition_file) p = load_partition(*partition_file, load.graph);
    NetworkReport r = analyze_network(id, load.graph, cfg, p);
    r.records = load.records;
    r.dropped_self_loops = load.dropped_self_loops;
    r.dropped_duplicates = load.dropped_duplicates;
    r.ignored_extra_columns = load.ignored_extra_columns;
    if (partition_file) r.partition_source = partition_file->filename().string();
    return r;
  } catch (const ParseError& e) {
    throw std::runtime_error(id + ": line " + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(id + ": " + e.what());
  }
}

CorpusSummary summarize_corpus(const std::vector<NetworkReport>& reports) {
  CorpusSummary s;
  if (reports.empty()) return s;

  // Pairs are keyed by position; every report of one run has the same layout.
  const std::vector<stats::CorrelationRecord>& layout = reports.front().correlations;
  std::map<std::string, std::vector<double>> per_network;
  for (const NetworkReport& r : reports) {
    if (r.correlations.size() != layout.size())
      throw std::invalid_argument("reports were computed with different measure sets");
    std::vector<double> taus;
    for (const auto& c : r.correlations) taus.push_back(c.tau);
    per_network[r.id] = std::move(taus);
  }
  for (std::size_t i = 0; i < layout.size(); ++i) {
    std::vector<double> column;
    for (const NetworkReport& r : reports) column.push_back(r.correlations[i].tau);
    PairSummary p{layout[i].classical, layout[i].community_aware, kMissing, kMissing, 0};
    if (auto d = finite_summary(column)) {
      p.mean_tau = d->mean;
      p.std_tau = d->std;
      p.n_networks = d->n;
    }
    s.pairs.push_back(std::move(p));
  }

  s.consistency = stats::pairwise_network_consistency(per_network);
  std::vector<double> off_diagonal;
  for (std::size_t a = 0; a < s.consistency.ids.size(); ++a)
    for (std::size_t b = a + 1; b < s.consistency.ids.size(); ++b)
      off_diagonal.push_back(s.consistency.at(a, b));
  s.consistency_summary = finite_summary(off_diagonal);

  const std::size_t n_beta = reports.front().per_beta.size();
  for (std::size_t j = 0; j < n_beta; ++j) {
    for (std::size_t f = 0; f < kFeatureNames.size(); ++f) {
      std::vector<double> x;
      std::vector<double> y;
      for (const NetworkReport& r : reports) {
        const double xv = feature_values(r.macro, r.meso)[f];
        const double yv = r.per_beta[j].mean_tau;
        if (std::isfinite(xv) && std::isfinite(yv)) {
          x.push_back(xv);
          y.push_back(yv);
        }
      }
      stats::RegressionRecord rec;
      try {
        rec = stats::ols_fit(x, y);
      } catch (const std::invalid_argument&) {
        rec.slope = rec.intercept = rec.r_squared = rec.p_value = kMissing;
      }
      rec.community_aware = reports.front().per_beta[j].community_aware;
      rec.feature = std::string(kFeatureNames[f]);
      rec.n = x.size();
      s.regressions.push_back(std::move(rec));
    }
  }
  return s;
}

std::vector<fs::path> corpus_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::invalid_argument("not a directory: " + dir.string());
  static const std::set<std::string> kExtensions{".edges", ".edgelist", ".el", ".txt"};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.filename().string().starts_with(".")) continue;
    if (kExtensions.count(p.extension().string()) != 0) files.push_back(p);
  }
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

BatchResult batch(const RunConfig& cfg) {
  const std::vector<fs::path> files = corpus_files(cfg.corpus_dir);
  if (files.empty()) throw std::invalid_argument("no edge-list files in " + cfg.corpus_dir.string());

  struct Slot {
    std::optional<NetworkReport> report;
    std::string error;
  };
  std::vector<Slot> slots(files.size());
  std::set<std::string> seen;
  std::vector<bool> duplicate(files.size(), false);
  for (std::size_t i = 0; i < files.size(); ++i)
    duplicate[i] = !seen.insert(files[i].stem().string()).second;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string id = files[i].stem().string();
      if (duplicate[i]) {
        slots[i].error = "another file already provides network id '" + id + "'";
        continue;
      }
      try {
        std::optional<fs::path> part;
        if (cfg.partitions_dir) {
          part = *cfg.partitions_dir / (id + kPartitionExtension);
          if (!fs::exists(*part)) throw std::runtime_error(id + ": missing " + part->string());
        }
        slots[i].report = analyze_file(id, files[i], cfg, part);
      } catch (const std::exception& e) {
        slots[i].error = e.what();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs, 1, files.size());
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  BatchResult out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (slots[i].report)
      out.reports.push_back(std::move(*slots[i].report));
    else
      out.skipped.push_back({files[i].filename().string(), slots[i].error});
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const NetworkReport& a, const NetworkReport& b) { return a.id < b.id; });
  out.summary = summarize_corpus(out.reports);
  return out;
}

std::string significance_flag(double p_value) {
  if (!(p_value == p_value)) return "";
  if (p_value <= 0.01) return "P*";
  if (p_value <= 0.05) return "P";
  return "";
}

}  // namespace commcent
