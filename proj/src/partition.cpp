#include "commcent/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace commcent {

Partition::Partition(std::span<const std::uint32_t> labels) {
  constexpr auto kUnset = std::numeric_limits<CommunityId>::max();
  std::unordered_map<std::uint32_t, CommunityId> canon;
  community_of_.assign(labels.size(), kUnset);
  for (NodeId v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = canon.try_emplace(labels[v], static_cast<CommunityId>(members_.size()));
    if (inserted) members_.emplace_back();
    community_of_[v] = it->second;
    members_[it->second].push_back(v);
  }
}

Partition Partition::single_community(std::size_t num_nodes) {
  std::vector<std::uint32_t> labels(num_nodes, 0);
  return Partition(labels);
}

Partition Partition::singletons(std::size_t num_nodes) {
  std::vector<std::uint32_t> labels(num_nodes);
  for (std::size_t v = 0; v < num_nodes; ++v) labels[v] = static_cast<std::uint32_t>(v);
  return Partition(labels);
}

namespace {

void require_cover(const Graph& g, const Partition& p) {
  if (p.num_nodes() != g.num_nodes())
    throw std::invalid_argument("partition covers " + std::to_string(p.num_nodes()) +
                                " nodes but the graph has " + std::to_string(g.num_nodes()));
}

}  // namespace

DegreeSplit degree_split(const Graph& g, const Partition& p) {
  require_cover(g, p);
  const std::size_t n = g.num_nodes();
  DegreeSplit s;
  s.k_intra.assign(n, 0);
  s.k_inter.assign(n, 0);
  s.k_ic.resize(n);
  std::vector<CommunityId> comms;
  for (NodeId v = 0; v < n; ++v) {
    const CommunityId own = p.community_of(v);
    comms.clear();
    for (NodeId u : g.neighbors(v)) {
      const CommunityId c = p.community_of(u);
      comms.push_back(c);
      if (c == own)
        ++s.k_intra[v];
      else
        ++s.k_inter[v];
    }
    std::sort(comms.begin(), comms.end());
    auto& row = s.k_ic[v];
    for (std::size_t i = 0; i < comms.size();) {
      std::size_t j = i;
      while (j < comms.size() && comms[j] == comms[i]) ++j;
      row.emplace_back(comms[i], static_cast<std::uint32_t>(j - i));
      i = j;
    }
  }
  return s;
}

double modularity(const Graph& g, const Partition& p) {
  require_cover(g, p);
  const double m = static_cast<double>(g.num_edges());
  if (m == 0) throw std::domain_error("modularity is undefined for an edgeless graph");
  std::vector<double> internal(p.num_communities(), 0.0);
  std::vector<double> total(p.num_communities(), 0.0);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    const CommunityId c = p.community_of(v);
    total[c] += static_cast<double>(g.degree(v));
    for (NodeId u : g.neighbors(v))
      if (v < u && p.community_of(u) == c) internal[c] += 1.0;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < internal.size(); ++c) {
    const double frac = total[c] / (2.0 * m);
    q += internal[c] / m - frac * frac;
  }
  return q;
}

FilteredGraphs edge_filtered_graphs(const Graph& g, const Partition& p) {
  require_cover(g, p);
  std::vector<Edge> intra;
  std::vector<Edge> inter;
  for (const Edge& e : g.edges()) {
    if (p.community_of(e.first) == p.community_of(e.second))
      intra.push_back(e);
    else
      inter.push_back(e);
  }
  return {Graph::from_edges(g.labels(), intra), Graph::from_edges(g.labels(), inter)};
}

Partition parse_partition(std::istream& in, const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label_of(g.num_nodes(), kUnset);
  std::unordered_map<std::string, std::uint32_t> community_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string node;
    if (!(tokens >> node) || node.front() == '#') continue;
    std::string community;
    if (!(tokens >> community))
      throw ParseError("line " + std::to_string(line_no) + ": expected 'node community'",
                       line_no);
    const auto v = g.find(node);
    if (!v)
      throw std::invalid_argument("partition line " + std::to_string(line_no) +
                                  ": unknown node '" + node + "'");
    if (label_of[*v] != kUnset)
      throw std::invalid_argument("partition line " + std::to_string(line_no) + ": node '" +
                                  node + "' assigned twice");
    auto [it, _] =
        community_ids.try_emplace(community, static_cast<std::uint32_t>(community_ids.size()));
    label_of[*v] = it->second;
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading partition");
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    if (label_of[v] == kUnset)
      throw std::invalid_argument("partition does not assign node '" + g.label(v) + "'");
  return Partition(label_of);
}

Partition load_partition(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open partition file '" + path.string() + "'");
  return parse_partition(in, g);
}

void write_partition(std::ostream& out, const Graph& g, const Partition& p) {
  require_cover(g, p);
  std::vector<NodeId> order(g.num_nodes());
  for (NodeId v = 0; v < order.size(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });
  for (NodeId v : order) out << g.label(v) << ' ' << p.community_of(v) << '\n';
}

void save_partition(const std::filesystem::path& path, const Graph& g, const Partition& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write partition file '" + path.string() + "'");
  write_partition(out, g, p);
  if (!out) throw std::runtime_error("failed writing partition file '" + path.string() + "'");
}

Partition project_partition(const Graph& from, const Partition& p, const Graph& to) {
  require_cover(from, p);
  std::vector<std::uint32_t> labels(to.num_nodes());
  for (NodeId v = 0; v < to.num_nodes(); ++v) {
    const auto src = from.find(to.label(v));
    if (!src) throw std::invalid_argument("node '" + to.label(v) + "' missing from partition");
    labels[v] = p.community_of(*src);
  }
  return Partition(labels);
}

}  // namespace commcent
