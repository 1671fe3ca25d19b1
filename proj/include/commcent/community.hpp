#pragma once

#include <numbers>
#include <vector>

#include "commcent/centrality.hpp"
#include "commcent/graph.hpp"
#include "commcent/partition.hpp"

namespace commcent {

struct CommunityConfig {
  double kshell_delta = 0.5;
  /// Scale applied to both terms of Comm centrality.
  double comm_R = 1.0;
  /// Entropy base for the community-based mediator; e gives nats.
  double log_base = std::numbers::e;
  /// Report |M(G_i) - M(G)| instead of the signed vitality.
  bool mv_absolute = false;
};

/// Everything the community-aware measures read: the graph, its partition,
/// the degree split, per-community inter-link proportion mu_c, and the number
/// of distinct foreign communities adjacent to each node. Holds a reference
/// to the graph, which must outlive the context.
class CommunityContext {
 public:
  CommunityContext(const Graph& g, Partition p);
  CommunityContext(Graph&&, Partition) = delete;

  const Graph& graph() const noexcept { return *graph_; }
  const Partition& partition() const noexcept { return partition_; }
  const DegreeSplit& split() const noexcept { return split_; }

  /// Inter-community endpoints of c over the total degree of c (0 when c has no links).
  double community_mu(CommunityId c) const { return community_mu_[c]; }
  std::uint32_t nnc(NodeId v) const { return nnc_[v]; }

  /// Sum of degrees, 2m.
  double total_degree() const noexcept { return total_degree_; }

 private:
  const Graph* graph_;
  Partition partition_;
  DegreeSplit split_;
  std::vector<double> community_mu_;
  std::vector<std::uint32_t> nnc_;
  double total_degree_ = 0.0;
};

/// |c_i| k_intra + |NNC_i| k_inter
CentralityVector community_hub_bridge(const CommunityContext& ctx);

/// 1 - sum_c (k_ic / k_i)^2
CentralityVector participation_coefficient(const CommunityContext& ctx);

/// H_i k_i / 2m with H_i the two-term entropy of the intra/inter link proportions.
CentralityVector community_based_mediator(const CommunityContext& ctx,
                                          const CommunityConfig& cfg = {});

/// (1 + mu_c) chi + (1 - mu_c) phi^2
CentralityVector comm_centrality(const CommunityContext& ctx, const CommunityConfig& cfg = {});

/// M(G without i) - M(G), partition otherwise unchanged.
CentralityVector modularity_vitality(const CommunityContext& ctx,
                                     const CommunityConfig& cfg = {});

/// sum_c k_ic n_c / N
CentralityVector community_based_centrality(const CommunityContext& ctx);

/// delta core_intra + (1 - delta) core_inter
CentralityVector kshell_with_community(const CommunityContext& ctx,
                                       const CommunityConfig& cfg = {});

CentralityVector compute(CommunityMeasure m, const CommunityContext& ctx,
                         const CommunityConfig& cfg = {});

}  // namespace commcent
