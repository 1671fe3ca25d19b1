#include "commcent/classical.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "commcent/kernels.hpp"

namespace commcent {

namespace {

constexpr std::array<std::string_view, 10> kClassicalNames{
    "degree",      "leverage",  "laplacian", "diffusion", "mnc",
    "betweenness", "closeness", "katz",      "pagerank",  "subgraph",
};
constexpr std::array<std::string_view, 7> kCommunityNames{
    "chb", "pc", "cbm", "comm", "mv", "cbc", "ksc",
};

CentralityVector named(ClassicalMeasure m, std::vector<double> scores) {
  return {std::string(name(m)), std::move(scores)};
}

void spmv(const Graph& g, std::span<double> out, std::span<const double> x) {
  kernels::adjacency_spmv(out, g.offsets(), g.adjacency(), x);
}

}  // namespace

std::string_view name(ClassicalMeasure m) noexcept {
  return kClassicalNames[static_cast<std::size_t>(m)];
}
std::string_view name(CommunityMeasure m) noexcept {
  return kCommunityNames[static_cast<std::size_t>(m)];
}

std::optional<ClassicalMeasure> parse_classical(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kClassicalNames.size(); ++i)
    if (kClassicalNames[i] == s) return static_cast<ClassicalMeasure>(i);
  return std::nullopt;
}

std::optional<CommunityMeasure> parse_community(std::string_view s) noexcept {
  for (std::size_t i = 0; i < kCommunityNames.size(); ++i)
    if (kCommunityNames[i] == s) return static_cast<CommunityMeasure>(i);
  return std::nullopt;
}

double spectral_radius(const Graph& g, double tol, std::size_t max_iter) {
  const std::size_t n = g.num_nodes();
  if (g.num_edges() == 0) return 0.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  std::vector<double> next(n);
  double lambda = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    spmv(g, ax, x);
    const double rayleigh = kernels::dot(x, ax) / kernels::dot(x, x);
    // Shift by +1 so the dominant eigenvalue of A + I is lambda_max + 1 even
    // on bipartite graphs, where A alone oscillates.
    kernels::axpby(next, 1.0, ax, 1.0, x);
    const double norm = std::sqrt(kernels::dot(next, next));
    kernels::affine(x, next, 1.0 / norm, 0.0);
    if (it > 0 && std::fabs(rayleigh - lambda) <= tol * std::max(1.0, rayleigh)) {
      return rayleigh;
    }
    lambda = rayleigh;
  }
  return lambda;
}

double katz_attenuation(const Graph& g, const ClassicalConfig& cfg) {
  if (cfg.katz_s) return *cfg.katz_s;
  const double lambda = spectral_radius(g);
  return lambda > 0.0 ? cfg.katz_fraction / lambda : cfg.katz_fraction;
}

CentralityVector degree_centrality(const Graph& g) {
  return named(ClassicalMeasure::degree, g.degree_vector());
}

CentralityVector leverage_centrality(const Graph& g) {
  std::vector<double> s(g.num_nodes(), 0.0);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    const double ki = static_cast<double>(g.degree(i));
    if (ki == 0.0)
      throw std::domain_error("leverage is undefined for isolated node '" + g.label(i) + "'");
    double acc = 0.0;
    for (NodeId j : g.neighbors(i)) {
      const double kj = static_cast<double>(g.degree(j));
      acc += (ki - kj) / (ki + kj);
    }
    s[i] = acc / ki;
  }
  return named(ClassicalMeasure::leverage, std::move(s));
}

CentralityVector laplacian_centrality(const Graph& g) {
  const std::vector<double> deg = g.degree_vector();
  std::vector<double> neighbor_deg(g.num_nodes());
  spmv(g, neighbor_deg, deg);
  std::vector<double> s(g.num_nodes());
  for (NodeId i = 0; i < g.num_nodes(); ++i)
    s[i] = deg[i] * deg[i] + deg[i] + 2.0 * neighbor_deg[i];
  return named(ClassicalMeasure::laplacian, std::move(s));
}

CentralityVector diffusion_degree(const Graph& g, const ClassicalConfig& cfg) {
  const double varpi = cfg.diffusion_varpi;
  if (!(varpi > 0.0 && varpi <= 1.0))
    throw std::invalid_argument("diffusion propagation probability must lie in (0, 1]");
  const std::vector<double> deg = g.degree_vector();
  std::vector<double> neighbor_deg(g.num_nodes());
  spmv(g, neighbor_deg, deg);
  std::vector<double> s(g.num_nodes());
  kernels::axpby(s, varpi, deg, varpi, neighbor_deg);
  return named(ClassicalMeasure::diffusion, std::move(s));
}

CentralityVector max_neighborhood_component(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> s(n, 0.0);
  // in_hood[v] == owner + 1 marks v as a neighbour of the current owner;
  // seen uses the same stamping to avoid clearing between owners.
  std::vector<std::uint32_t> in_hood(n, 0);
  std::vector<std::uint32_t> seen(n, 0);
  std::vector<NodeId> stack;
  for (NodeId i = 0; i < n; ++i) {
    const std::uint32_t stamp = i + 1;
    for (NodeId u : g.neighbors(i)) in_hood[u] = stamp;
    std::size_t best = 0;
    for (NodeId start : g.neighbors(i)) {
      if (seen[start] == stamp) continue;
      seen[start] = stamp;
      stack.assign(1, start);
      std::size_t size = 0;
      while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        ++size;
        for (NodeId w : g.neighbors(u)) {
          if (in_hood[w] == stamp && seen[w] != stamp) {
            seen[w] = stamp;
            stack.push_back(w);
          }
        }
      }
      best = std::max(best, size);
    }
    s[i] = static_cast<double>(best);
  }
  return named(ClassicalMeasure::mnc, std::move(s));
}

CentralityVector betweenness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> bc(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors are recovered from distances instead of stored lists.
    for (std::size_t k = order.size(); k-- > 1;) {
      const NodeId w = order[k];
      const double coeff = (1.0 + delta[w]) / sigma[w];
      for (NodeId v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] * coeff;
      bc[w] += delta[w];
    }
  }
  for (double& b : bc) b /= 2.0;
  return named(ClassicalMeasure::betweenness, std::move(bc));
}

CentralityVector closeness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw std::domain_error("closeness needs at least two nodes");
  std::vector<double> s(n);
  for (NodeId i = 0; i < n; ++i) {
    const Distances d = bfs_distances(g, i);
    std::uint64_t total = 0;
    for (std::uint32_t h : d.hops) {
      if (h == Distances::kUnreachable)
        throw std::domain_error("closeness requires a connected graph");
      total += h;
    }
    s[i] = static_cast<double>(n - 1) / static_cast<double>(total);
  }
  return named(ClassicalMeasure::closeness, std::move(s));
}

CentralityVector katz(const Graph& g, const ClassicalConfig& cfg) {
  const std::size_t n = g.num_nodes();
  const double lambda = spectral_radius(g);
  const double s = cfg.katz_s ? *cfg.katz_s
                              : (lambda > 0.0 ? cfg.katz_fraction / lambda : cfg.katz_fraction);
  if (!(s > 0.0)) throw std::invalid_argument("Katz attenuation must be positive");
  if (s * lambda >= 1.0)
    throw std::domain_error("Katz series diverges: s = " + std::to_string(s) +
                            " >= 1/lambda_max = " + std::to_string(1.0 / lambda));

  // b = s A 1 = s k
  std::vector<double> b = g.degree_vector();
  kernels::affine(b, b, s, 0.0);

  std::vector<double> x(n, 0.0);
  std::vector<double> r = b;
  std::vector<double> p = r;
  std::vector<double> ap(n);
  std::vector<double> q(n);
  double rr = kernels::dot(r, r);
  const std::size_t max_iter = std::max<std::size_t>(1000, 10 * n);
  std::size_t it = 0;
  while (std::sqrt(rr) >= cfg.katz_tolerance) {
    if (++it > max_iter)
      throw std::runtime_error("Katz conjugate gradient did not converge; residual " +
                               std::to_string(std::sqrt(rr)));
    spmv(g, q, p);
    kernels::axpby(ap, 1.0, p, -s, q);
    const double alpha = rr / kernels::dot(p, ap);
    kernels::axpby(x, 1.0, x, alpha, p);
    kernels::axpby(r, 1.0, r, -alpha, ap);
    const double rr_next = kernels::dot(r, r);
    kernels::axpby(p, 1.0, r, rr_next / rr, p);
    rr = rr_next;
  }
  return named(ClassicalMeasure::katz, std::move(x));
}

CentralityVector pagerank(const Graph& g, const ClassicalConfig& cfg) {
  const std::size_t n = g.num_nodes();
  const double d = cfg.pagerank_d;
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("PageRank damping must lie in (0, 1)");
  if (n == 0) return named(ClassicalMeasure::pagerank, {});

  std::vector<double> inv_deg(n, 0.0);
  std::vector<NodeId> dangling;
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      dangling.push_back(v);
    else
      inv_deg[v] = 1.0 / static_cast<double>(g.degree(v));
  }
  const double nn = static_cast<double>(n);
  std::vector<double> x(n, 1.0 / nn);
  std::vector<double> share(n);
  std::vector<double> next(n);
  double change = 0.0;
  for (std::size_t it = 0; it < cfg.pagerank_max_iter; ++it) {
    double dangling_mass = 0.0;
    for (NodeId v : dangling) dangling_mass += x[v];
    kernels::multiply(share, x, inv_deg);
    spmv(g, next, share);
    kernels::affine(next, next, d, (1.0 - d) / nn + d * dangling_mass / nn);
    change = kernels::l1_distance(next, x);
    x.swap(next);
    if (change < cfg.pagerank_tol) return named(ClassicalMeasure::pagerank, std::move(x));
  }
  throw std::runtime_error("PageRank did not converge; last L1 change " + std::to_string(change));
}

CentralityVector subgraph_centrality(const Graph& g, const ClassicalConfig& cfg) {
  const std::size_t n = g.num_nodes();
  if (n > cfg.subgraph_max_nodes)
    throw std::length_error("subgraph centrality: " + std::to_string(n) +
                            " nodes exceeds the eigendecomposition cap of " +
                            std::to_string(cfg.subgraph_max_nodes) +
                            "; a truncated series would be needed instead");
  if (n == 0) return named(ClassicalMeasure::subgraph, {});
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (const Edge& e : g.edges()) {
    a(e.first, e.second) = 1.0;
    a(e.second, e.first) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("subgraph centrality: eigendecomposition failed");
  const Eigen::VectorXd w = eig.eigenvalues().array().exp();
  const Eigen::VectorXd diag = eig.eigenvectors().array().square().matrix() * w;
  return named(ClassicalMeasure::subgraph, std::vector<double>(diag.data(), diag.data() + n));
}

CentralityVector compute(ClassicalMeasure m, const Graph& g, const ClassicalConfig& cfg) {
  switch (m) {
    case ClassicalMeasure::degree:
      return degree_centrality(g);
    case ClassicalMeasure::leverage:
      return leverage_centrality(g);
    case ClassicalMeasure::laplacian:
      return laplacian_centrality(g);
    case ClassicalMeasure::diffusion:
      return diffusion_degree(g, cfg);
    case ClassicalMeasure::mnc:
      return max_neighborhood_component(g);
    case ClassicalMeasure::betweenness:
      return betweenness(g);
    case ClassicalMeasure::closeness:
      return closeness(g);
    case ClassicalMeasure::katz:
      return katz(g, cfg);
    case ClassicalMeasure::pagerank:
      return pagerank(g, cfg);
    case ClassicalMeasure::subgraph:
      return subgraph_centrality(g, cfg);
  }
  throw std::invalid_argument("unknown classical measure");
}

}  // namespace commcent
