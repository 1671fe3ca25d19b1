#pragma once

#include <string>
#include <vector>

#include "commcent/graph.hpp"
#include "commcent/partition.hpp"

namespace fixtures {

using commcent::Edge;
using commcent::Graph;
using commcent::Partition;

inline Graph labelled(std::vector<std::string> labels, std::vector<Edge> edges) {
  return Graph::from_edges(std::move(labels), edges);
}

inline Graph triangle() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph single_edge() { return labelled({"a", "b"}, {{0, 1}}); }

/// Path a-b-c.
inline Graph path3() { return labelled({"a", "b", "c"}, {{0, 1}, {1, 2}}); }

inline Graph path4() { return labelled({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}}); }

/// Star with centre "c" (node 0) and four leaves.
inline Graph star4() {
  return labelled({"c", "l1", "l2", "l3", "l4"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

inline Graph k4() {
  return labelled({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

/// K4 on a..d plus pendant e attached to d.
inline Graph k4_pendant() {
  return labelled({"a", "b", "c", "d", "e"},
                  {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

/// Triangles a-b-c and d-e-f joined by the bridge c-d.
inline Graph two_triangles() {
  return labelled({"a", "b", "c", "d", "e", "f"},
                  {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}

inline Partition two_triangles_partition() {
  const std::vector<std::uint32_t> labels{0, 0, 0, 1, 1, 1};
  return Partition(labels);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<commcent::NodeId>(i), static_cast<commcent::NodeId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (commcent::NodeId u = 0; u < n; ++u)
    for (commcent::NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace fixtures
