#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "commcent/centrality.hpp"
#include "commcent/graph.hpp"

namespace commcent {

struct ClassicalConfig {
  /// Katz attenuation. When unset, katz_fraction / lambda_max is used.
  std::optional<double> katz_s;
  double katz_fraction = 0.9;
  double katz_tolerance = 1e-10;
  double pagerank_d = 0.85;
  double pagerank_tol = 1e-10;
  std::size_t pagerank_max_iter = 100000;
  double diffusion_varpi = 1.0;
  std::size_t subgraph_max_nodes = 25000;
};

/// Largest adjacency eigenvalue by shifted power iteration on A + I.
double spectral_radius(const Graph& g, double tol = 1e-12, std::size_t max_iter = 200000);

/// The attenuation katz() will use for this graph and config.
double katz_attenuation(const Graph& g, const ClassicalConfig& cfg);

CentralityVector degree_centrality(const Graph& g);
CentralityVector leverage_centrality(const Graph& g);
CentralityVector laplacian_centrality(const Graph& g);
CentralityVector diffusion_degree(const Graph& g, const ClassicalConfig& cfg = {});
CentralityVector max_neighborhood_component(const Graph& g);

/// Brandes; each unordered pair {s,t} counted once, endpoints excluded, unnormalised.
CentralityVector betweenness(const Graph& g);

/// (N-1) / sum of distances. Requires a connected graph with N >= 2.
CentralityVector closeness(const Graph& g);

/// Row sums of sum_{p>=1} s^p A^p, from (I - sA) x = sA 1 solved by conjugate gradients.
CentralityVector katz(const Graph& g, const ClassicalConfig& cfg = {});

/// Power iteration on the undirected random walk with damping d.
CentralityVector pagerank(const Graph& g, const ClassicalConfig& cfg = {});

/// Diagonal of exp(A) from a full symmetric eigendecomposition.
CentralityVector subgraph_centrality(const Graph& g, const ClassicalConfig& cfg = {});

CentralityVector compute(ClassicalMeasure m, const Graph& g, const ClassicalConfig& cfg = {});

}  // namespace commcent
