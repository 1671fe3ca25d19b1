#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "commcent/graph.hpp"

namespace commcent {

using CommunityId = std::uint32_t;

/// Hard node -> community assignment. Community ids are canonical: they are
/// numbered 0..N_c-1 in order of each community's smallest node index, so two
/// partitions describing the same grouping compare equal.
class Partition {
 public:
  Partition() = default;

  /// Accepts arbitrary integer labels and canonicalises them.
  explicit Partition(std::span<const std::uint32_t> labels);

  static Partition single_community(std::size_t num_nodes);
  static Partition singletons(std::size_t num_nodes);

  std::size_t num_nodes() const noexcept { return community_of_.size(); }
  std::size_t num_communities() const noexcept { return members_.size(); }

  CommunityId community_of(NodeId v) const { return community_of_[v]; }
  std::span<const CommunityId> assignment() const noexcept { return community_of_; }
  std::span<const NodeId> members(CommunityId c) const { return members_[c]; }
  std::size_t size_of(CommunityId c) const { return members_[c].size(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.community_of_ == b.community_of_;
  }

 private:
  std::vector<CommunityId> community_of_;
  std::vector<std::vector<NodeId>> members_;
};

/// Per-node split of the degree into intra- and inter-community links.
struct DegreeSplit {
  std::vector<std::uint32_t> k_intra;
  std::vector<std::uint32_t> k_inter;
  /// Per node: (community, link count) pairs sorted by community, zero counts omitted.
  std::vector<std::vector<std::pair<CommunityId, std::uint32_t>>> k_ic;
};

DegreeSplit degree_split(const Graph& g, const Partition& p);

/// Newman-Girvan modularity, resolution 1: sum_c [l_c/m - (d_c/2m)^2].
double modularity(const Graph& g, const Partition& p);

struct FilteredGraphs {
  Graph intra;
  Graph inter;
};

/// Splits the edge set by whether endpoints share a community. Both graphs keep all nodes.
FilteredGraphs edge_filtered_graphs(const Graph& g, const Partition& p);

/// Reads "node_label community_label" lines ('#' comments allowed). The file
/// must cover exactly the nodes of `g`.
Partition parse_partition(std::istream& in, const Graph& g);
Partition load_partition(const std::filesystem::path& path, const Graph& g);

/// Writes one "node_label community_id" line per node, sorted by node label.
void write_partition(std::ostream& out, const Graph& g, const Partition& p);
void save_partition(const std::filesystem::path& path, const Graph& g, const Partition& p);

/// Maps a partition of `from` onto `to` by node label (e.g. onto an LCC).
/// Every node of `to` must exist in `from`.
Partition project_partition(const Graph& from, const Partition& p, const Graph& to);

struct LouvainResult {
  Partition partition;
  /// Modularity of the original graph after each aggregation level.
  std::vector<double> level_modularity;
};

/// Louvain local moving + aggregation. Node visit order at each level is a
/// Fisher-Yates shuffle driven by `seed`, so results are reproducible.
LouvainResult louvain_levels(const Graph& g, std::uint64_t seed = 0);
Partition louvain(const Graph& g, std::uint64_t seed = 0);

}  // namespace commcent
