#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "commcent/graph.hpp"

namespace commcent {

EdgeListLoad parse_edgelist(std::istream& in) {
  EdgeListLoad out;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](std::string&& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(std::move(label));
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string a;
    if (!(tokens >> a) || a.front() == '#') continue;
    std::string b;
    if (!(tokens >> b))
      throw ParseError("line " + std::to_string(line_no) + ": expected two node labels", line_no);
    if (std::string extra; tokens >> extra) ++out.ignored_extra_columns;

    ++out.records;
    const NodeId u = intern(std::move(a));
    const NodeId v = intern(std::move(b));
    if (u == v) {
      ++out.dropped_self_loops;
      continue;
    }
    const std::uint64_t key = (std::uint64_t{std::min(u, v)} << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      ++out.dropped_duplicates;
      continue;
    }
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading edge list");
  out.graph = Graph::from_edges(std::move(labels), edges);
  return out;
}

EdgeListLoad load_edgelist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path.string() + "'");
  return parse_edgelist(in);
}

}  // namespace commcent
