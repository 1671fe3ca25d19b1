#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commcent/kernels.hpp"
#include "commcent/pipeline.hpp"

namespace {

void add_common(CLI::App& cmd, commcent::RunConfig& cfg, std::string& measures) {
  cmd.add_option("--seed", cfg.seed, "Louvain shuffle seed")->capture_default_str();
  cmd.add_option("--out", cfg.output_dir, "Output directory")->capture_default_str();
  cmd.add_option("--katz-s", cfg.classical.katz_s, "Katz attenuation (default 0.9 / lambda_max)");
  cmd.add_option("--measures", measures, "Comma-separated measure names");
  cmd.add_option("--comm-r", cfg.community.comm_R, "Comm centrality scale R")
      ->capture_default_str();
  cmd.add_option("--kshell-delta", cfg.community.kshell_delta, "k-shell intra/inter weight")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_flag("--abs-mv", cfg.community.mv_absolute, "Report absolute modularity vitality");
  cmd.add_flag_callback(
      "--size-weighted",
      [&cfg] { cfg.averaging = commcent::CommunityAveraging::size_weighted; },
      "Weight community-level topology means by community size");
}

void print_versions() {
  std::cout << "commcent " << commcent::kToolVersion << '\n';
  for (const auto& [name, version] : commcent::definition_versions(commcent::RunConfig{}))
    std::cout << name << ' ' << version << '\n';
}

void report_skipped(const commcent::BatchResult& result) {
  for (const auto& s : result.skipped) std::cerr << "skipped " << s.id << ": " << s.reason << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical and community-aware centrality analysis"};
  app.require_subcommand(0, 1);
  app.add_flag_callback(
      "--version",
      [] {
        print_versions();
        throw CLI::Success();
      },
      "Print tool and definition versions");
  std::string isa;
  app.add_option("--isa", isa, "Force a kernel set (scalar, avx2)");

  commcent::RunConfig cfg;
  std::string measures;
  std::string edgelist;
  std::string partition_file;
  std::string partitions_dir;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyse one edge list");
  analyze->add_option("edgelist", edgelist, "Edge-list file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--partition", partition_file, "Partition file (node community)")
      ->check(CLI::ExistingFile);
  add_common(*analyze, cfg, measures);

  CLI::App* batch = app.add_subcommand("batch", "Analyse every edge list in a directory");
  batch->add_option("corpus-dir", cfg.corpus_dir, "Corpus directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  batch->add_option("--partitions", partitions_dir, "Directory of <id>.partition files")
      ->check(CLI::ExistingDirectory);
  batch->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str()->check(
      CLI::PositiveNumber);
  add_common(*batch, cfg, measures);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!isa.empty()) {
      if (isa == "scalar")
        commcent::kernels::select(commcent::kernels::Isa::scalar);
      else if (isa == "avx2")
        commcent::kernels::select(commcent::kernels::Isa::avx2);
      else
        throw std::invalid_argument("unknown kernel set '" + isa + "'");
    }
    if (!measures.empty()) commcent::apply_measure_list(cfg, measures);

    if (analyze->parsed()) {
      commcent::BatchResult result;
      std::optional<std::filesystem::path> part;
      if (!partition_file.empty()) part = partition_file;
      const std::filesystem::path path(edgelist);
      result.reports.push_back(commcent::analyze_file(path.stem().string(), path, cfg, part));
      result.summary = commcent::summarize_corpus(result.reports);
      commcent::emit_reports(result, cfg);
      std::cout << "wrote " << cfg.output_dir.string() << '\n';
      return EXIT_SUCCESS;
    }
    if (batch->parsed()) {
      if (!partitions_dir.empty()) cfg.partitions_dir = partitions_dir;
      const commcent::BatchResult result = commcent::batch(cfg);
      report_skipped(result);
      commcent::emit_reports(result, cfg);
      std::cout << "wrote " << cfg.output_dir.string() << " (" << result.reports.size()
                << " networks, " << result.skipped.size() << " skipped)\n";
      return result.reports.empty() ? EXIT_FAILURE : EXIT_SUCCESS;
    }
    std::cout << app.help();
    return EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_FAILURE;
  }
}
