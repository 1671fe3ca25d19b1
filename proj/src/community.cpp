#include "commcent/community.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace commcent {

namespace {

CentralityVector named(CommunityMeasure m, std::vector<double> scores) {
  return {std::string(name(m)), std::move(scores)};
}

double require_degree(const Graph& g, NodeId v, const char* measure) {
  const double k = static_cast<double>(g.degree(v));
  if (k == 0.0)
    throw std::domain_error(std::string(measure) + " is undefined for isolated node '" +
                            g.label(v) + "'");
  return k;
}

}  // namespace

CommunityContext::CommunityContext(const Graph& g, Partition p)
    : graph_(&g), partition_(std::move(p)), split_(degree_split(g, partition_)) {
  const std::size_t nc = partition_.num_communities();
  std::vector<double> inter(nc, 0.0);
  std::vector<double> total(nc, 0.0);
  nnc_.assign(g.num_nodes(), 0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const CommunityId c = partition_.community_of(v);
    inter[c] += split_.k_inter[v];
    total[c] += static_cast<double>(g.degree(v));
    // k_ic lists every adjacent community once, including the node's own.
    std::uint32_t foreign = 0;
    for (auto [comm, count] : split_.k_ic[v])
      if (comm != c) ++foreign;
    nnc_[v] = foreign;
  }
  community_mu_.assign(nc, 0.0);
  for (std::size_t c = 0; c < nc; ++c)
    if (total[c] > 0.0) community_mu_[c] = inter[c] / total[c];
  total_degree_ = 2.0 * static_cast<double>(g.num_edges());
}

CentralityVector community_hub_bridge(const CommunityContext& ctx) {
  const Graph& g = ctx.graph();
  const Partition& p = ctx.partition();
  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double size = static_cast<double>(p.size_of(p.community_of(v)));
    s[v] = size * ctx.split().k_intra[v] + static_cast<double>(ctx.nnc(v)) * ctx.split().k_inter[v];
  }
  return named(CommunityMeasure::chb, std::move(s));
}

CentralityVector participation_coefficient(const CommunityContext& ctx) {
  const Graph& g = ctx.graph();
  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double k = require_degree(g, v, "participation coefficient");
    double acc = 0.0;
    for (auto [c, count] : ctx.split().k_ic[v]) {
      const double frac = count / k;
      acc += frac * frac;
    }
    s[v] = 1.0 - acc;
  }
  return named(CommunityMeasure::pc, std::move(s));
}

CentralityVector community_based_mediator(const CommunityContext& ctx,
                                          const CommunityConfig& cfg) {
  const Graph& g = ctx.graph();
  if (!(cfg.log_base > 0.0 && cfg.log_base != 1.0))
    throw std::invalid_argument("entropy log base must be positive and not 1");
  const double log_scale = 1.0 / std::log(cfg.log_base);
  auto plogp = [&](double x) { return x > 0.0 ? x * std::log(x) * log_scale : 0.0; };
  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double k = require_degree(g, v, "community-based mediator");
    const double entropy = -plogp(ctx.split().k_intra[v] / k) - plogp(ctx.split().k_inter[v] / k);
    s[v] = entropy * k / ctx.total_degree();
  }
  return named(CommunityMeasure::cbm, std::move(s));
}

CentralityVector comm_centrality(const CommunityContext& ctx, const CommunityConfig& cfg) {
  const Graph& g = ctx.graph();
  const Partition& p = ctx.partition();
  const DegreeSplit& sp = ctx.split();
  std::vector<double> max_intra(p.num_communities(), 0.0);
  std::vector<double> max_inter(p.num_communities(), 0.0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const CommunityId c = p.community_of(v);
    max_intra[c] = std::max<double>(max_intra[c], sp.k_intra[v]);
    max_inter[c] = std::max<double>(max_inter[c], sp.k_inter[v]);
  }
  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const CommunityId c = p.community_of(v);
    // A community with no intra (or inter) links contributes nothing on that side.
    const double chi = max_intra[c] > 0.0 ? sp.k_intra[v] / max_intra[c] * cfg.comm_R : 0.0;
    const double phi = max_inter[c] > 0.0 ? sp.k_inter[v] / max_inter[c] * cfg.comm_R : 0.0;
    const double mu = ctx.community_mu(c);
    s[v] = (1.0 + mu) * chi + (1.0 - mu) * phi * phi;
  }
  return named(CommunityMeasure::comm, std::move(s));
}

CentralityVector modularity_vitality(const CommunityContext& ctx, const CommunityConfig& cfg) {
  const Graph& g = ctx.graph();
  const Partition& p = ctx.partition();
  const DegreeSplit& sp = ctx.split();
  const double m = static_cast<double>(g.num_edges());
  if (m == 0.0) throw std::domain_error("modularity vitality needs at least one edge");

  const std::size_t nc = p.num_communities();
  std::vector<double> internal(nc, 0.0);
  std::vector<double> total(nc, 0.0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const CommunityId c = p.community_of(v);
    internal[c] += sp.k_intra[v] / 2.0;
    total[c] += static_cast<double>(g.degree(v));
  }
  double internal_sum = 0.0;
  double square_sum = 0.0;
  for (std::size_t c = 0; c < nc; ++c) {
    internal_sum += internal[c];
    square_sum += total[c] * total[c];
  }
  const double base = internal_sum / m - square_sum / (4.0 * m * m);

  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const double k = static_cast<double>(g.degree(v));
    const double m_after = m - k;
    if (m_after == 0.0)
      throw std::domain_error("removing node '" + g.label(v) + "' leaves no edges");
    const CommunityId own = p.community_of(v);
    const double own_links = sp.k_intra[v];
    // Only communities adjacent to v (and v's own) change their degree totals.
    double squares = square_sum;
    bool own_seen = false;
    for (auto [c, count] : sp.k_ic[v]) {
      double after = total[c] - count;
      if (c == own) {
        after -= k;
        own_seen = true;
      }
      squares += after * after - total[c] * total[c];
    }
    if (!own_seen) {
      const double after = total[own] - k;
      squares += after * after - total[own] * total[own];
    }
    const double q_after =
        (internal_sum - own_links) / m_after - squares / (4.0 * m_after * m_after);
    const double mv = q_after - base;
    s[v] = cfg.mv_absolute ? std::fabs(mv) : mv;
  }
  return named(CommunityMeasure::mv, std::move(s));
}

CentralityVector community_based_centrality(const CommunityContext& ctx) {
  const Graph& g = ctx.graph();
  const Partition& p = ctx.partition();
  const double n = static_cast<double>(g.num_nodes());
  std::vector<double> s(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    double acc = 0.0;
    for (auto [c, count] : ctx.split().k_ic[v])
      acc += count * (static_cast<double>(p.size_of(c)) / n);
    s[v] = acc;
  }
  return named(CommunityMeasure::cbc, std::move(s));
}

CentralityVector kshell_with_community(const CommunityContext& ctx, const CommunityConfig& cfg) {
  const double delta = cfg.kshell_delta;
  if (!(delta >= 0.0 && delta <= 1.0))
    throw std::invalid_argument("k-shell mixing weight must lie in [0, 1]");
  const FilteredGraphs parts = edge_filtered_graphs(ctx.graph(), ctx.partition());
  const CoreDecomposition intra = core_decomposition(parts.intra);
  const CoreDecomposition inter = core_decomposition(parts.inter);
  std::vector<double> s(ctx.graph().num_nodes());
  for (NodeId v = 0; v < s.size(); ++v)
    s[v] = delta * intra.core_number[v] + (1.0 - delta) * inter.core_number[v];
  return named(CommunityMeasure::ksc, std::move(s));
}

CentralityVector compute(CommunityMeasure m, const CommunityContext& ctx,
                         const CommunityConfig& cfg) {
  switch (m) {
    case CommunityMeasure::chb:
      return community_hub_bridge(ctx);
    case CommunityMeasure::pc:
      return participation_coefficient(ctx);
    case CommunityMeasure::cbm:
      return community_based_mediator(ctx, cfg);
    case CommunityMeasure::comm:
      return comm_centrality(ctx, cfg);
    case CommunityMeasure::mv:
      return modularity_vitality(ctx, cfg);
    case CommunityMeasure::cbc:
      return community_based_centrality(ctx);
    case CommunityMeasure::ksc:
      return kshell_with_community(ctx, cfg);
  }
  throw std::invalid_argument("unknown community-aware measure");
}

}  // namespace commcent
