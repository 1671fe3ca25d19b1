#include "commcent/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace commcent {

std::array<double, 16> feature_values(const MacroscopicSummary& macro,
                                      const MesoscopicSummary& meso) {
  return {macro.density,          macro.transitivity,     macro.assortativity,
          macro.avg_distance,     macro.diameter,         macro.efficiency,
          macro.degree_exponent,  meso.modularity,        meso.mixing_parameter,
          meso.internal_distance, meso.internal_density,  meso.max_odf,
          meso.avg_odf,           meso.flake_odf,         meso.embeddedness,
          meso.hub_dominance};
}

double transitivity(const Graph& g) {
  // Each triangle is found once per edge (u < v) and common neighbour w > v.
  std::uint64_t triangles = 0;
  std::uint64_t triples = 0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto k = static_cast<std::uint64_t>(g.degree(u));
    triples += k * (k - (k > 0 ? 1 : 0)) / 2;
    const auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++triangles;
          ++a;
          ++b;
        }
      }
    }
  }
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

double degree_assortativity(const Graph& g) {
  // Each edge contributes both orientations, so the two marginals coincide.
  double s1 = 0.0;
  double s2 = 0.0;
  double cross = 0.0;
  double stubs = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const double ku = static_cast<double>(g.degree(u));
    for (NodeId v : g.neighbors(u)) {
      const double kv = static_cast<double>(g.degree(v));
      s1 += ku;
      s2 += ku * ku;
      cross += ku * kv;
      stubs += 1.0;
    }
  }
  if (stubs == 0.0) return kMissing;
  const double mean = s1 / stubs;
  const double var = s2 / stubs - mean * mean;
  if (!(var > 1e-12 * std::max(1.0, mean * mean))) return kMissing;
  return std::clamp((cross / stubs - mean * mean) / var, -1.0, 1.0);
}

MacroscopicSummary macroscopic(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 3) throw std::invalid_argument("macroscopic summary needs at least 3 nodes");
  if (!is_connected(g)) throw std::invalid_argument("macroscopic summary needs a connected graph");

  MacroscopicSummary s;
  const double nd = static_cast<double>(n);
  s.density = 2.0 * static_cast<double>(g.num_edges()) / (nd * (nd - 1.0));
  s.transitivity = transitivity(g);
  s.assortativity = degree_assortativity(g);

  double dist_sum = 0.0;
  double inv_sum = 0.0;
  std::uint32_t diameter = 0;
  for (NodeId v = 0; v < n; ++v) {
    const Distances d = bfs_distances(g, v);
    for (NodeId w = 0; w < n; ++w) {
      if (w == v) continue;
      dist_sum += d.hops[w];
      inv_sum += 1.0 / d.hops[w];
      diameter = std::max(diameter, d.hops[w]);
    }
  }
  const double ordered_pairs = nd * (nd - 1.0);
  s.avg_distance = dist_sum / ordered_pairs;
  s.diameter = diameter;
  s.efficiency = inv_sum / ordered_pairs;

  std::vector<std::uint32_t> degrees(n);
  for (NodeId v = 0; v < n; ++v) degrees[v] = static_cast<std::uint32_t>(g.degree(v));
  s.degree_exponent = fit_discrete_power_law(degrees).alpha;
  return s;
}

namespace {

// Mean geodesic over connected pairs inside the subgraph induced by `members`;
// NaN when no pair is connected.
double mean_internal_distance(const Graph& g, std::span<const NodeId> members) {
  const Graph sub = induced_subgraph(g, members);
  double total = 0.0;
  double pairs = 0.0;
  for (NodeId v = 0; v < sub.num_nodes(); ++v) {
    const Distances d = bfs_distances(sub, v);
    for (NodeId w = v + 1; w < sub.num_nodes(); ++w) {
      if (!d.reachable(w)) continue;
      total += d.hops[w];
      pairs += 1.0;
    }
  }
  return pairs > 0.0 ? total / pairs : kMissing;
}

class CommunityMean {
 public:
  void add(double value, double weight) {
    if (std::isnan(value)) return;
    sum_ += value * weight;
    weight_ += weight;
  }
  double value() const { return weight_ > 0.0 ? sum_ / weight_ : kMissing; }

 private:
  double sum_ = 0.0;
  double weight_ = 0.0;
};

}  // namespace

MesoscopicSummary mesoscopic(const Graph& g, const Partition& p, CommunityAveraging averaging) {
  if (p.num_nodes() != g.num_nodes())
    throw std::invalid_argument("partition does not cover the graph");
  if (g.num_edges() == 0) throw std::domain_error("mesoscopic summary needs at least one edge");

  const DegreeSplit sp = degree_split(g, p);
  MesoscopicSummary s;
  s.modularity = modularity(g, p);

  double inter_sum = 0.0;
  double embedded_sum = 0.0;
  double embedded_nodes = 0.0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    inter_sum += sp.k_inter[v];
    const double k = static_cast<double>(g.degree(v));
    if (k == 0.0) continue;
    embedded_sum += sp.k_intra[v] / k;
    embedded_nodes += 1.0;
  }
  s.mixing_parameter = inter_sum / (2.0 * static_cast<double>(g.num_edges()));
  s.embeddedness = embedded_sum / embedded_nodes;

  CommunityMean internal_distance;
  CommunityMean internal_density;
  CommunityMean max_odf;
  CommunityMean avg_odf;
  CommunityMean flake_odf;
  CommunityMean hub_dominance;
  for (CommunityId c = 0; c < p.num_communities(); ++c) {
    const auto members = p.members(c);
    const double nc = static_cast<double>(members.size());
    const double w = averaging == CommunityAveraging::size_weighted ? nc : 1.0;

    double odf_max = 0.0;
    double odf_sum = 0.0;
    double flaky = 0.0;
    double counted = 0.0;
    double intra_max = 0.0;
    double intra_endpoints = 0.0;
    for (NodeId v : members) {
      intra_endpoints += sp.k_intra[v];
      intra_max = std::max<double>(intra_max, sp.k_intra[v]);
      const double k = static_cast<double>(g.degree(v));
      if (k == 0.0) continue;
      const double odf = sp.k_inter[v] / k;
      odf_max = std::max(odf_max, odf);
      odf_sum += odf;
      if (sp.k_intra[v] < k / 2.0) flaky += 1.0;
      counted += 1.0;
    }
    if (counted > 0.0) {
      max_odf.add(odf_max, w);
      avg_odf.add(odf_sum / counted, w);
      flake_odf.add(flaky / counted, w);
    }
    if (members.size() < 2) continue;
    internal_density.add(intra_endpoints / (nc * (nc - 1.0)), w);
    hub_dominance.add(intra_max / (nc - 1.0), w);
    internal_distance.add(mean_internal_distance(g, members), w);
  }
  s.internal_distance = internal_distance.value();
  s.internal_density = internal_density.value();
  s.max_odf = max_odf.value();
  s.avg_odf = avg_odf.value();
  s.flake_odf = flake_odf.value();
  s.hub_dominance = hub_dominance.value();
  return s;
}

}  // namespace commcent
