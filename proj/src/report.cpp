#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "commcent/pipeline.hpp"

namespace commcent {

namespace fs = std::filesystem;

namespace {

std::string fmt(double x) {
  if (std::isnan(x)) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

class CsvFile {
 public:
  CsvFile(const fs::path& path, const char* header) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("cannot write " + path.string());
    out_ << header << '\n';
  }
  ~CsvFile() noexcept(false) {
    out_.flush();
    if (!out_ && std::uncaught_exceptions() == 0)
      throw std::runtime_error("error writing " + path_.string());
  }
  std::ofstream& out() { return out_; }

 private:
  fs::path path_;
  std::ofstream out_;
};

nlohmann::ordered_json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

nlohmann::ordered_json summary_json(const std::optional<stats::DistributionSummary>& d) {
  if (!d) return nullptr;
  return {{"n", d->n},        {"mean", number(d->mean)}, {"median", number(d->median)},
          {"std", number(d->std)}, {"iqr", number(d->iqr)},   {"min", number(d->min)},
          {"max", number(d->max)}};
}

void write_summary_row(std::ofstream& out, const std::string& network, const std::string& beta,
                       const std::optional<stats::DistributionSummary>& d) {
  out << field(network) << ',' << beta << ',';
  if (!d) {
    out << "0,NA,NA,NA,NA,NA,NA\n";
    return;
  }
  out << d->n << ',' << fmt(d->mean) << ',' << fmt(d->median) << ',' << fmt(d->std) << ','
      << fmt(d->iqr) << ',' << fmt(d->min) << ',' << fmt(d->max) << '\n';
}

}  // namespace

void emit_reports(const BatchResult& result, const RunConfig& cfg) {
  const fs::path dir = cfg.output_dir;
  std::error_code ec;
  fs::create_directories(dir / "partitions", ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  {
    CsvFile f(dir / "centrality.csv", "network,node,measure,score");
    for (const NetworkReport& r : result.reports) {
      for (const auto* group : {&r.classical, &r.community})
        for (const CentralityVector& cv : *group)
          for (std::size_t v = 0; v < cv.scores.size(); ++v)
            f.out() << field(r.id) << ',' << field(r.labels[v]) << ',' << cv.measure << ','
                    << fmt(cv.scores[v]) << '\n';
    }
  }
  {
    CsvFile f(dir / "correlations.csv", "network,classical,community_aware,tau");
    for (const NetworkReport& r : result.reports)
      for (const auto& c : r.correlations)
        f.out() << field(r.id) << ',' << c.classical << ',' << c.community_aware << ','
                << fmt(c.tau) << '\n';
  }
  {
    CsvFile f(dir / "topology.csv", "network,feature,value");
    for (const NetworkReport& r : result.reports) {
      const auto values = feature_values(r.macro, r.meso);
      for (std::size_t i = 0; i < values.size(); ++i)
        f.out() << field(r.id) << ',' << kFeatureNames[i] << ',' << fmt(values[i]) << '\n';
    }
  }
  {
    CsvFile f(dir / "tau_distribution.csv",
              "network,community_aware,n,mean,median,std,iqr,min,max");
    for (const NetworkReport& r : result.reports) {
      write_summary_row(f.out(), r.id, "all", r.tau_distribution);
      for (const BetaTauSummary& b : r.per_beta)
        write_summary_row(f.out(), r.id, b.community_aware, b.distribution);
    }
  }
  {
    CsvFile f(dir / "pair_summary.csv", "classical,community_aware,mean_tau,std_tau,n_networks");
    for (const PairSummary& p : result.summary.pairs)
      f.out() << p.classical << ',' << p.community_aware << ',' << fmt(p.mean_tau) << ','
              << fmt(p.std_tau) << ',' << p.n_networks << '\n';
  }
  {
    CsvFile f(dir / "consistency.csv", "network_a,network_b,pearson");
    const auto& m = result.summary.consistency;
    for (std::size_t a = 0; a < m.ids.size(); ++a)
      for (std::size_t b = 0; b < m.ids.size(); ++b)
        f.out() << field(m.ids[a]) << ',' << field(m.ids[b]) << ',' << fmt(m.at(a, b)) << '\n';
  }
  {
    CsvFile f(dir / "regression.csv",
              "community_aware,feature,slope,intercept,r_squared,p_value,n,significance");
    for (const auto& r : result.summary.regressions)
      f.out() << r.community_aware << ',' << r.feature << ',' << fmt(r.slope) << ','
              << fmt(r.intercept) << ',' << fmt(r.r_squared) << ',' << fmt(r.p_value) << ','
              << r.n << ',' << significance_flag(r.p_value) << '\n';
  }
  for (const NetworkReport& r : result.reports) {
    const fs::path path = dir / "partitions" / (r.id + kPartitionExtension);
    std::vector<Edge> none;
    // write_partition only reads labels, so a node-only graph is enough.
    save_partition(path, Graph::from_edges(r.labels, none), r.partition);
  }

  nlohmann::ordered_json manifest;
  manifest["tool"] = "commcent";
  manifest["version"] = kToolVersion;
  manifest["seed"] = cfg.seed;
  manifest["partition_source"] = cfg.partitions_dir ? "files" : "louvain";
  nlohmann::ordered_json versions = nlohmann::ordered_json::object();
  for (const auto& [name, version] : definition_versions(cfg)) versions[name] = version;
  manifest["definition_versions"] = versions;
  manifest["config"] = {
      {"katz_s", cfg.classical.katz_s ? number(*cfg.classical.katz_s) : nullptr},
      {"katz_fraction", cfg.classical.katz_fraction},
      {"pagerank_damping", cfg.classical.pagerank_d},
      {"diffusion_varpi", cfg.classical.diffusion_varpi},
      {"kshell_delta", cfg.community.kshell_delta},
      {"comm_R", cfg.community.comm_R},
      {"mv_absolute", cfg.community.mv_absolute},
  };
  nlohmann::ordered_json classical = nlohmann::ordered_json::array();
  for (ClassicalMeasure m : cfg.classical_measures) classical.push_back(std::string(name(m)));
  nlohmann::ordered_json community = nlohmann::ordered_json::array();
  for (CommunityMeasure m : cfg.community_measures) community.push_back(std::string(name(m)));
  manifest["measures"] = {{"classical", classical}, {"community_aware", community}};
  // The original study reports 35 pair values per network for 10 x 7 measures.
  manifest["correlation_pairs"] = {
      {"computed_per_network", cfg.classical_measures.size() * cfg.community_measures.size()},
      {"originally_reported", 35},
  };

  nlohmann::ordered_json networks = nlohmann::ordered_json::array();
  for (const NetworkReport& r : result.reports) {
    nlohmann::ordered_json level = nlohmann::ordered_json::array();
    for (double q : r.louvain_level_modularity) level.push_back(number(q));
    networks.push_back({
        {"id", r.id},
        {"records", r.records},
        {"dropped_self_loops", r.dropped_self_loops},
        {"dropped_duplicates", r.dropped_duplicates},
        {"ignored_extra_columns", r.ignored_extra_columns},
        {"input_nodes", r.input_nodes},
        {"input_edges", r.input_edges},
        {"reduced_to_lcc", r.reduced_to_lcc},
        {"nodes", r.num_nodes()},
        {"edges", r.num_edges},
        {"communities", r.partition.num_communities()},
        {"single_community", r.single_community},
        {"partition_source", r.partition_source},
        {"louvain_level_modularity", level},
        {"lambda_max", number(r.lambda_max)},
        {"katz_s", number(r.katz_s)},
        {"tau_summary", summary_json(r.tau_distribution)},
    });
  }
  manifest["networks"] = networks;
  nlohmann::ordered_json skipped = nlohmann::ordered_json::array();
  for (const SkippedNetwork& s : result.skipped)
    skipped.push_back({{"file", s.id}, {"reason", s.reason}});
  manifest["skipped"] = skipped;
  manifest["consistency_summary"] = summary_json(result.summary.consistency_summary);

  std::ofstream out(dir / "manifest.json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / "manifest.json").string());
  out << manifest.dump(2) << '\n';
}

}  // namespace commcent
