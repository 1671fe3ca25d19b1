#include <algorithm>
#include <numeric>
#include <random>

#include "commcent/partition.hpp"

namespace commcent {
namespace {

// Weighted graph of one aggregation level. Self-loop weight is kept apart
// from the neighbour lists; strength[i] counts it twice, as in the degree.
struct Level {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> self_weight;
  std::vector<double> strength;

  std::size_t size() const { return adj.size(); }
};

Level level_from_graph(const Graph& g) {
  Level lv;
  const std::size_t n = g.num_nodes();
  lv.adj.resize(n);
  lv.self_weight.assign(n, 0.0);
  lv.strength.assign(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId u : g.neighbors(v)) lv.adj[v].emplace_back(u, 1.0);
    lv.strength[v] = static_cast<double>(g.degree(v));
  }
  return lv;
}

template <class Rng>
void shuffle_indices(std::vector<std::uint32_t>& order, Rng& rng) {
  // Explicit Fisher-Yates: std::shuffle's draw sequence is library-specific.
  for (std::size_t i = order.size(); i > 1; --i) {
    const std::uint64_t j = rng() % i;
    std::swap(order[i - 1], order[j]);
  }
}

// One round of local moving. Returns true if any node changed community.
bool local_moving(const Level& lv, double two_m, std::vector<std::uint32_t>& comm,
                  std::mt19937_64& rng) {
  const std::size_t n = lv.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[comm[i]] += lv.strength[i];

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  shuffle_indices(order, rng);

  std::vector<double> link_to(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool any_move = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::uint32_t i : order) {
      const std::uint32_t own = comm[i];
      touched.clear();
      touched.push_back(own);
      for (auto [j, w] : lv.adj[i]) {
        const std::uint32_t c = comm[j];
        if (link_to[c] == 0.0 && c != own) touched.push_back(c);
        link_to[c] += w;
      }
      const double k = lv.strength[i];
      tot[own] -= k;
      std::uint32_t best = own;
      double best_gain = link_to[own] - tot[own] * k / two_m;
      for (std::uint32_t c : touched) {
        const double gain = link_to[c] - tot[c] * k / two_m;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best = c;
        }
      }
      tot[best] += k;
      for (std::uint32_t c : touched) link_to[c] = 0.0;
      if (best != own) {
        comm[i] = best;
        moved = true;
        any_move = true;
      }
    }
  }
  return any_move;
}

// Renumbers communities densely; returns the count.
std::uint32_t compact(std::vector<std::uint32_t>& comm) {
  std::vector<std::uint32_t> remap(comm.size(), std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (auto& c : comm) {
    if (remap[c] == std::numeric_limits<std::uint32_t>::max()) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

Level aggregate(const Level& lv, const std::vector<std::uint32_t>& comm, std::uint32_t count) {
  Level out;
  out.adj.resize(count);
  out.self_weight.assign(count, 0.0);
  out.strength.assign(count, 0.0);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> raw(count);
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const std::uint32_t ci = comm[i];
    out.strength[ci] += lv.strength[i];
    out.self_weight[ci] += lv.self_weight[i];
    for (auto [j, w] : lv.adj[i]) {
      const std::uint32_t cj = comm[j];
      if (cj == ci) {
        // Each internal edge is seen from both ends.
        out.self_weight[ci] += w / 2.0;
      } else {
        raw[ci].emplace_back(cj, w);
      }
    }
  }
  for (std::uint32_t c = 0; c < count; ++c) {
    auto& r = raw[c];
    std::sort(r.begin(), r.end());
    for (std::size_t i = 0; i < r.size();) {
      std::size_t j = i;
      double w = 0.0;
      while (j < r.size() && r[j].first == r[i].first) w += r[j++].second;
      out.adj[c].emplace_back(r[i].first, w);
      i = j;
    }
  }
  return out;
}

}  // namespace

LouvainResult louvain_levels(const Graph& g, std::uint64_t seed) {
  if (g.num_edges() == 0) throw std::domain_error("Louvain needs at least one edge");
  const double two_m = 2.0 * static_cast<double>(g.num_edges());
  std::mt19937_64 rng(seed);

  LouvainResult result;
  std::vector<std::uint32_t> node_comm(g.num_nodes());
  std::iota(node_comm.begin(), node_comm.end(), 0u);

  Level lv = level_from_graph(g);
  while (true) {
    std::vector<std::uint32_t> comm(lv.size());
    std::iota(comm.begin(), comm.end(), 0u);
    if (!local_moving(lv, two_m, comm, rng)) break;
    const std::uint32_t count = compact(comm);
    for (auto& c : node_comm) c = comm[c];
    result.level_modularity.push_back(modularity(g, Partition(node_comm)));
    if (count == lv.size()) break;
    lv = aggregate(lv, comm, count);
  }
  result.partition = Partition(node_comm);
  if (result.level_modularity.empty())
    result.level_modularity.push_back(modularity(g, result.partition));
  return result;
}

Partition louvain(const Graph& g, std::uint64_t seed) { return louvain_levels(g, seed).partition; }

}  // namespace commcent
