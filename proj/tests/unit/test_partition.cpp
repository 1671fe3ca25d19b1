#include <doctest.h>

#include <set>
#include <sstream>

#include "commcent/partition.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commcent;

TEST_CASE("partition ids are canonical") {
  const std::vector<std::uint32_t> a{7, 7, 3, 9, 3};
  const std::vector<std::uint32_t> b{0, 0, 1, 2, 1};
  const Partition pa(a);
  CHECK(pa == Partition(b));
  CHECK(pa.num_communities() == 3);
  CHECK(pa.size_of(1) == 2);
  CHECK(std::vector<NodeId>(pa.members(1).begin(), pa.members(1).end()) ==
        std::vector<NodeId>{2, 4});
}

TEST_CASE("single community and singletons") {
  CHECK(Partition::single_community(4).num_communities() == 1);
  CHECK(Partition::singletons(4).num_communities() == 4);
  CHECK(Partition::single_community(0).num_communities() == 0);
}

TEST_CASE("degree split fixtures") {
  const Graph g = fixtures::two_triangles();
  const DegreeSplit s = degree_split(g, fixtures::two_triangles_partition());
  CHECK(s.k_intra[2] == 2);
  CHECK(s.k_inter[2] == 1);
  CHECK(s.k_intra[0] == 2);
  CHECK(s.k_inter[0] == 0);
  using Pair = std::pair<CommunityId, std::uint32_t>;
  CHECK(s.k_ic[2] == std::vector<Pair>{{0, 2}, {1, 1}});

  const DegreeSplit one = degree_split(g, Partition::single_community(6));
  for (NodeId v = 0; v < 6; ++v) CHECK(one.k_inter[v] == 0);
}

TEST_CASE("degree split invariants on random graphs") {
  gen::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 20;
    const Graph g = gen::gnp(rng, n, 0.3);
    const Partition p(gen::random_labels(rng, n, 4));
    const DegreeSplit s = degree_split(g, p);
    for (NodeId v = 0; v < n; ++v) {
      CHECK(s.k_intra[v] + s.k_inter[v] == g.degree(v));
      std::uint32_t total = 0;
      std::uint32_t own = 0;
      for (auto [c, k] : s.k_ic[v]) {
        total += k;
        CHECK(k > 0);
        if (c == p.community_of(v)) own = k;
      }
      CHECK(total == g.degree(v));
      CHECK(own == s.k_intra[v]);
    }
  }
}

TEST_CASE("modularity fixtures") {
  CHECK(modularity(fixtures::triangle(), Partition::single_community(3)) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(modularity(fixtures::two_triangles(), fixtures::two_triangles_partition()) ==
        doctest::Approx(2.0 * (3.0 / 7.0 - 0.25)).epsilon(1e-15));
  CHECK(modularity(fixtures::two_triangles(), fixtures::two_triangles_partition()) ==
        doctest::Approx(0.35714).epsilon(1e-5));
  std::vector<Edge> none;
  CHECK_THROWS_AS(modularity(Graph::from_edges(3, none), Partition::singletons(3)),
                  std::domain_error);
}

TEST_CASE("modularity matches the dense oracle and its range") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 15;
    const Graph g = gen::connected_graph(rng, n, 0.2);
    const auto labels = gen::random_labels(rng, n, 1 + trial % 5);
    const Partition p(labels);
    const double q = modularity(g, p);
    CHECK(q == doctest::Approx(oracle::modularity(g, labels)).epsilon(1e-12));
    CHECK(q >= -0.5);
    CHECK(q < 1.0);
    double singles = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      const double x = static_cast<double>(g.degree(v)) / (2.0 * g.num_edges());
      singles -= x * x;
    }
    CHECK(modularity(g, Partition::singletons(n)) == doctest::Approx(singles).epsilon(1e-12));
  }
}

TEST_CASE("edge filtered graphs") {
  const FilteredGraphs f =
      edge_filtered_graphs(fixtures::two_triangles(), fixtures::two_triangles_partition());
  CHECK(f.intra.num_nodes() == 6);
  CHECK(f.inter.num_nodes() == 6);
  CHECK(f.intra.num_edges() == 6);
  CHECK(f.inter.num_edges() == 1);
  CHECK(f.inter.has_edge(2, 3));

  const std::vector<std::uint32_t> cut{0, 0, 1, 1};
  const FilteredGraphs k = edge_filtered_graphs(fixtures::k4(), Partition(cut));
  CHECK(k.intra.num_edges() == 2);
  CHECK(k.inter.num_edges() == 4);

  const FilteredGraphs one = edge_filtered_graphs(fixtures::k4(), Partition::single_community(4));
  CHECK(one.intra.num_edges() == 6);
  CHECK(one.inter.num_edges() == 0);

  CHECK_THROWS(edge_filtered_graphs(fixtures::k4(), Partition::single_community(3)));
}

TEST_CASE("edge filtering partitions the edge set") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 25;
    const Graph g = gen::gnp(rng, n, 0.3);
    const Partition p(gen::random_labels(rng, n, 3));
    const FilteredGraphs f = edge_filtered_graphs(g, p);
    CHECK(f.intra.num_edges() + f.inter.num_edges() == g.num_edges());
    for (auto [u, v] : g.edges()) {
      const bool same = p.community_of(u) == p.community_of(v);
      CHECK(f.intra.has_edge(u, v) == same);
      CHECK(f.inter.has_edge(u, v) == !same);
    }
  }
}

TEST_CASE("partition files") {
  const Graph g = fixtures::two_triangles();
  SUBCASE("round trip") {
    std::ostringstream out;
    write_partition(out, g, fixtures::two_triangles_partition());
    std::istringstream in(out.str());
    CHECK(parse_partition(in, g) == fixtures::two_triangles_partition());
  }
  SUBCASE("arbitrary community labels and comments") {
    std::istringstream in("# groups\nf right\na left\nb left\nc left\nd right\ne right\n");
    CHECK(parse_partition(in, g) == fixtures::two_triangles_partition());
  }
  SUBCASE("missing node is named") {
    std::istringstream in("a 0\nb 0\nc 0\nd 1\ne 1\n");
    try {
      parse_partition(in, g);
      FAIL("expected an error");
    } catch (const std::exception& e) {
      CHECK(std::string(e.what()).find("'f'") != std::string::npos);
    }
  }
  SUBCASE("unknown node") {
    std::istringstream in("a 0\nb 0\nc 0\nd 1\ne 1\nf 1\nzz 1\n");
    CHECK_THROWS(parse_partition(in, g));
  }
  SUBCASE("node listed twice") {
    std::istringstream in("a 0\na 1\nb 0\nc 0\nd 1\ne 1\nf 1\n");
    CHECK_THROWS(parse_partition(in, g));
  }
  SUBCASE("malformed line") {
    std::istringstream in("a 0\nb\n");
    CHECK_THROWS_AS(parse_partition(in, g), ParseError);
  }
}

TEST_CASE("karate partition file with two groups") {
  const auto load = load_edgelist(std::string(COMMCENT_DATA_DIR) + "/corpus/karate.edges");
  std::ostringstream text;
  for (const auto& label : load.graph.labels()) text << label << ' ' << (std::stoi(label) <= 17 ? "x" : "y") << '\n';
  std::istringstream in(text.str());
  CHECK(parse_partition(in, load.graph).num_communities() == 2);
}

TEST_CASE("save/load round trip on random partitions") {
  gen::Rng rng(31);
  const auto dir = std::filesystem::temp_directory_path() / "commcent_partition_rt";
  std::filesystem::create_directories(dir);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial;
    const Graph g = gen::gnp(rng, n, 0.3);
    const Partition p(gen::random_labels(rng, n, 4));
    const auto path = dir / "p.partition";
    save_partition(path, g, p);
    CHECK(load_partition(path, g) == p);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("project partition by label") {
  const Graph g = fixtures::two_triangles();
  const std::vector<NodeId> right{3, 4, 5};
  const Graph sub = induced_subgraph(g, right);
  const std::vector<std::uint32_t> labels{0, 0, 0, 1, 2, 2};
  const Partition p = project_partition(g, Partition(labels), sub);
  const std::vector<std::uint32_t> expected{0, 1, 1};
  CHECK(p == Partition(expected));
}
