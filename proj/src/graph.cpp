#include "commcent/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace commcent {

Graph Graph::from_edges(std::vector<std::string> labels, std::span<const Edge> edges) {
  Graph g;
  const std::size_t n = labels.size();
  g.labels_ = std::move(labels);
  g.index_.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    if (!g.index_.emplace(g.labels_[v], v).second)
      throw std::invalid_argument("duplicate node label '" + g.labels_[v] + "'");
  }

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint outside node range");
    if (u == v) continue;
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : canon) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : canon) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
  return g;
}

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
  std::vector<std::string> labels(num_nodes);
  for (std::size_t v = 0; v < num_nodes; ++v) labels[v] = std::to_string(v);
  return from_edges(std::move(labels), edges);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::find(std::string_view label) const {
  if (auto it = index_.find(std::string(label)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<double> Graph::degree_vector() const {
  std::vector<double> d(num_nodes());
  for (NodeId v = 0; v < num_nodes(); ++v) d[v] = static_cast<double>(degree(v));
  return d;
}

Distances bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.num_nodes()) throw std::out_of_range("unknown source node");
  Distances d;
  d.source = source;
  d.hops.assign(g.num_nodes(), Distances::kUnreachable);
  std::vector<NodeId> frontier{source};
  d.hops[source] = 0;
  std::size_t head = 0;
  while (head < frontier.size()) {
    const NodeId u = frontier[head++];
    for (NodeId v : g.neighbors(u)) {
      if (d.hops[v] == Distances::kUnreachable) {
        d.hops[v] = d.hops[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return d;
}

Components connected_components(const Graph& g) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  Components c;
  c.component_of.assign(g.num_nodes(), kNone);
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (c.component_of[s] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(c.sizes.size());
    std::size_t size = 0;
    stack.push_back(s);
    c.component_of[s] = id;
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (c.component_of[v] == kNone) {
          c.component_of[v] = id;
          stack.push_back(v);
        }
      }
    }
    c.sizes.push_back(size);
  }
  return c;
}

bool is_connected(const Graph& g) {
  return g.num_nodes() <= 1 || connected_components(g).sizes.size() == 1;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  constexpr auto kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<NodeId> local(g.num_nodes(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (NodeId v : sorted) {
    if (v >= g.num_nodes()) throw std::out_of_range("unknown node in induced_subgraph");
    local[v] = static_cast<NodeId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (NodeId u : sorted)
    for (NodeId v : g.neighbors(u))
      if (u < v && local[v] != kAbsent) edges.emplace_back(local[u], local[v]);
  return Graph::from_edges(std::move(labels), edges);
}

Graph largest_connected_component(const Graph& g) {
  const Components c = connected_components(g);
  if (c.sizes.size() <= 1) return g;
  // Components are numbered by smallest member, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(c.sizes.begin(), c.sizes.end()) - c.sizes.begin());
  std::vector<NodeId> keep;
  keep.reserve(c.sizes[best]);
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (c.component_of[v] == best) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::uint32_t CoreDecomposition::max_core() const {
  return core_number.empty() ? 0 : *std::max_element(core_number.begin(), core_number.end());
}

CoreDecomposition core_decomposition(const Graph& g) {
  const std::size_t n = g.num_nodes();
  CoreDecomposition out;
  out.core_number.assign(n, 0);
  if (n == 0) return out;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(v));
    max_deg = std::max(max_deg, deg[v]);
  }
  // bin[d] = first position in `order` of nodes with current degree d
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (NodeId v = 0; v < n; ++v) ++bin[deg[v] + 1];
  std::partial_sum(bin.begin(), bin.end(), bin.begin());
  std::vector<NodeId> order(n);
  std::vector<std::size_t> pos(n);
  {
    std::vector<std::size_t> next(bin.begin(), bin.end() - 1);
    for (NodeId v = 0; v < n; ++v) {
      pos[v] = next[deg[v]]++;
      order[pos[v]] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::uint32_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const NodeId w = order[pw];
        if (u != w) {
          order[pu] = w;
          pos[w] = pu;
          order[pw] = u;
          pos[u] = pw;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  out.core_number = std::move(deg);
  return out;
}

}  // namespace commcent
