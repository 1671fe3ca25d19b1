#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace commcent {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Thrown for malformed input files; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph in CSR form. Nodes are dense indices
/// 0..N-1, each carrying an external string label; neighbour lists are sorted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labelled nodes and an edge list. Self-loops and
  /// repeated pairs (in either orientation) are dropped.
  static Graph from_edges(std::vector<std::string> labels, std::span<const Edge> edges);

  /// Convenience for tests and fixtures: labels are "0".."n-1".
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find(std::string_view label) const;

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return adjacency_; }

  /// Every undirected edge once, as (u, v) with u < v, in CSR order.
  std::vector<Edge> edges() const;

  std::vector<double> degree_vector() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

struct EdgeListLoad {
  Graph graph;
  std::size_t records = 0;
  std::size_t dropped_self_loops = 0;
  std::size_t dropped_duplicates = 0;
  std::size_t ignored_extra_columns = 0;  // lines with a third token (e.g. a weight)

  std::size_t dropped() const noexcept { return dropped_self_loops + dropped_duplicates; }
};

/// Parses whitespace-separated "u v [ignored...]" records; '#' lines and blank
/// lines are skipped. Labels are mapped to indices in first-seen order.
EdgeListLoad parse_edgelist(std::istream& in);
EdgeListLoad load_edgelist(const std::filesystem::path& path);

/// Hop distances from one source; unreachable nodes hold kUnreachable.
struct Distances {
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  NodeId source = 0;
  std::vector<std::uint32_t> hops;

  bool reachable(NodeId v) const { return hops[v] != kUnreachable; }
};

Distances bfs_distances(const Graph& g, NodeId source);

struct Components {
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;
};

/// Components numbered in order of their smallest node index.
Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced by `nodes`; nodes keep their labels and relative order.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Induced subgraph on the largest component. Ties go to the component
/// containing the smallest node index.
Graph largest_connected_component(const Graph& g);

struct CoreDecomposition {
  std::vector<std::uint32_t> core_number;
  std::uint32_t max_core() const;
};

/// Batagelj-Zaversnik bucket peeling, O(N + m).
CoreDecomposition core_decomposition(const Graph& g);

}  // namespace commcent
