#include <doctest.h>

#include "commcent/partition.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commcent;

TEST_CASE("louvain recovers the two triangles") {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(louvain(fixtures::two_triangles(), seed) == fixtures::two_triangles_partition());
}

TEST_CASE("louvain keeps K4 whole") {
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(louvain(fixtures::k4(), seed).num_communities() == 1);
}

TEST_CASE("exhaustive optimum of the two triangles is the triangle split") {
  const oracle::BestPartition best = oracle::best_partition(fixtures::two_triangles());
  CHECK(Partition(best.labels) == fixtures::two_triangles_partition());
  const oracle::BestPartition k4 = oracle::best_partition(fixtures::k4());
  CHECK(Partition(k4.labels).num_communities() == 1);
}

TEST_CASE("louvain on karate reaches 0.40 for every seed") {
  const auto load = load_edgelist(std::string(COMMCENT_DATA_DIR) + "/corpus/karate.edges");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CAPTURE(seed);
    CHECK(modularity(load.graph, louvain(load.graph, seed)) >= 0.40);
  }
}

TEST_CASE("louvain is deterministic per seed") {
  const auto load = load_edgelist(std::string(COMMCENT_DATA_DIR) + "/corpus/football.edges");
  CHECK(louvain(load.graph, 3) == louvain(load.graph, 3));
}

TEST_CASE("louvain level modularity never decreases and ends at the partition's value") {
  gen::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = gen::connected_graph(rng, 5 + trial % 40, 0.08);
    const LouvainResult r = louvain_levels(g, static_cast<std::uint64_t>(trial));
    REQUIRE_FALSE(r.level_modularity.empty());
    for (std::size_t i = 1; i < r.level_modularity.size(); ++i)
      CHECK(r.level_modularity[i] >= r.level_modularity[i - 1] - 1e-12);
    CHECK(r.level_modularity.back() == doctest::Approx(modularity(g, r.partition)).epsilon(1e-12));
    CHECK(modularity(g, r.partition) >= modularity(g, Partition::singletons(g.num_nodes())) - 1e-12);
  }
}

TEST_CASE("louvain against the exhaustive optimum on small graphs") {
  // A greedy heuristic: bounded by the optimum, and usually reaching it at this size.
  gen::Rng rng(21);
  int optimal = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<std::size_t> size(3, 8);
    const Graph g = gen::connected_graph(rng, size(rng), 0.3);
    const double best = oracle::best_partition(g).modularity;
    const double found = modularity(g, louvain(g, static_cast<std::uint64_t>(trial)));
    CHECK(found <= best + 1e-12);
    if (found >= best - 1e-12) ++optimal;
  }
  CHECK(optimal >= 40);
}

TEST_CASE("louvain rejects edgeless graphs") {
  std::vector<Edge> none;
  CHECK_THROWS_AS(louvain(Graph::from_edges(4, none)), std::domain_error);
}
