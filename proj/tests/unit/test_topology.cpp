#include <doctest.h>

#include <cmath>
#include <random>

#include "commcent/topology.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commcent;
using doctest::Approx;

TEST_CASE("macroscopic fixtures") {
  const MacroscopicSummary k4 = macroscopic(fixtures::k4());
  CHECK(k4.density == 1.0);
  CHECK(k4.transitivity == 1.0);
  CHECK(k4.efficiency == 1.0);
  CHECK(k4.diameter == 1.0);
  CHECK(std::isnan(k4.assortativity));  // regular: zero degree variance

  const MacroscopicSummary star = macroscopic(fixtures::star4());
  CHECK(star.transitivity == 0.0);
  CHECK(star.assortativity == Approx(-1.0).epsilon(1e-12));

  const MacroscopicSummary p4 = macroscopic(fixtures::path4());
  CHECK(p4.diameter == 3.0);
  CHECK(p4.avg_distance == Approx(10.0 / 6.0).epsilon(1e-12));
  CHECK(p4.density == Approx(0.5));

  CHECK_THROWS(macroscopic(fixtures::single_edge()));
  std::vector<Edge> e{{0, 1}, {1, 2}};
  CHECK_THROWS(macroscopic(Graph::from_edges(4, e)));
}

TEST_CASE("macroscopic invariants and oracles on random graphs") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> size(3, 10);
    const Graph g = gen::connected_graph(rng, size(rng), 0.3);
    const MacroscopicSummary s = macroscopic(g);
    CHECK(s.density >= 0.0);
    CHECK(s.density <= 1.0);
    CHECK(s.transitivity == Approx(oracle::transitivity(g)).epsilon(1e-14));
    const double r_ref = oracle::assortativity(g);
    if (std::isfinite(r_ref) && std::isfinite(s.assortativity)) {
      CHECK(std::fabs(s.assortativity - r_ref) <= 1e-10);
      CHECK(s.assortativity >= -1.0);
      CHECK(s.assortativity <= 1.0);
    }
    const oracle::DistanceStats d = oracle::distance_stats(g);
    CHECK(s.avg_distance == Approx(d.avg_distance).epsilon(1e-14));
    CHECK(s.diameter == d.diameter);
    CHECK(s.efficiency == Approx(d.efficiency).epsilon(1e-14));
    CHECK(s.diameter >= s.avg_distance);
    CHECK(s.avg_distance >= 1.0);
    CHECK(s.efficiency > 0.0);
    CHECK(s.efficiency <= 1.0);
  }
}

TEST_CASE("efficiency drops when an edge is removed") {
  gen::Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = gen::connected_graph(rng, 4 + trial % 6, 0.5);
    const auto edges = g.edges();
    for (std::size_t drop = 0; drop < edges.size(); ++drop) {
      std::vector<Edge> rest;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (i != drop) rest.push_back(edges[i]);
      const Graph h = Graph::from_edges(g.num_nodes(), rest);
      if (!is_connected(h)) continue;
      CHECK(macroscopic(h).efficiency < macroscopic(g).efficiency);
    }
  }
  CHECK(macroscopic(fixtures::complete(7)).efficiency == 1.0);
}

TEST_CASE("discrete power-law fit recovers the exponent of synthetic samples") {
  // Inverse-CDF sampling from P(X >= x) = zeta(alpha, x) / zeta(alpha, xmin).
  gen::Rng rng(63);
  for (double alpha : {2.2, 2.7, 3.3}) {
    const std::uint32_t x_min = 3;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::uint32_t> xs;
    const double z = hurwitz_zeta(alpha, x_min);
    for (int i = 0; i < 4000; ++i) {
      const double target = u(rng);
      std::uint32_t x = x_min;
      while (hurwitz_zeta(alpha, x + 1.0) / z > target && x < 100000) ++x;
      xs.push_back(x);
    }
    // Sub-x_min noise that the KS scan should discard.
    for (int i = 0; i < 300; ++i) xs.push_back(1 + i % 2);
    const PowerLawFit fit = fit_discrete_power_law(xs);
    REQUIRE(fit.ok());
    CHECK(fit.alpha == Approx(alpha).epsilon(0.05));
    CHECK(fit.alpha > 1.0);
    CHECK(fit.tail_size >= 10);
  }
}

TEST_CASE("power-law fit needs ten tail points") {
  const std::vector<std::uint32_t> few{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK_FALSE(fit_discrete_power_law(few).ok());
  const std::vector<std::uint32_t> flat(50, 3);
  CHECK_FALSE(fit_discrete_power_law(flat).ok());
  CHECK(std::isnan(macroscopic(fixtures::k4()).degree_exponent));
}

TEST_CASE("hurwitz zeta reference values") {
  CHECK(hurwitz_zeta(2.0, 1.0) == Approx(M_PI * M_PI / 6.0).epsilon(1e-14));
  CHECK(hurwitz_zeta(2.0, 2.0) == Approx(M_PI * M_PI / 6.0 - 1.0).epsilon(1e-14));
  CHECK_THROWS(hurwitz_zeta(1.0, 1.0));
}

TEST_CASE("mesoscopic fixture: two triangles") {
  const MesoscopicSummary s =
      mesoscopic(fixtures::two_triangles(), fixtures::two_triangles_partition());
  CHECK(s.modularity == Approx(2.0 * (3.0 / 7.0 - 0.25)).epsilon(1e-12));
  CHECK(s.mixing_parameter == Approx(1.0 / 7.0).epsilon(1e-12));
  CHECK(s.embeddedness == Approx(8.0 / 9.0).epsilon(1e-12));
  CHECK(s.max_odf == Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(s.avg_odf == Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(s.flake_odf == 0.0);
  CHECK(s.hub_dominance == 1.0);
  CHECK(s.internal_density == 1.0);
  CHECK(s.internal_distance == 1.0);
}

TEST_CASE("mesoscopic degenerate partitions") {
  const Graph g = fixtures::k4_pendant();
  const MesoscopicSummary one = mesoscopic(g, Partition::single_community(5));
  CHECK(one.mixing_parameter == 0.0);
  CHECK(one.embeddedness == 1.0);
  CHECK(one.avg_odf == 0.0);

  const MesoscopicSummary single = mesoscopic(g, Partition::singletons(5));
  CHECK(single.mixing_parameter == 1.0);
  CHECK(single.embeddedness == 0.0);
  CHECK(std::isnan(single.internal_density));
  CHECK(std::isnan(single.internal_distance));
  CHECK(std::isnan(single.hub_dominance));
}

TEST_CASE("community means: unweighted versus size-weighted") {
  // Communities {a..d} (K4) and {e} (pendant): only the ODF family sees the singleton.
  const std::vector<std::uint32_t> labels{0, 0, 0, 0, 1};
  const Graph g = fixtures::k4_pendant();
  const MesoscopicSummary u = mesoscopic(g, Partition(labels));
  const MesoscopicSummary w = mesoscopic(g, Partition(labels), CommunityAveraging::size_weighted);
  // Community 0: node d has odf 1/4, others 0. Community 1: odf 1.
  CHECK(u.max_odf == Approx((0.25 + 1.0) / 2.0));
  CHECK(w.max_odf == Approx((4 * 0.25 + 1.0) / 5.0));
  CHECK(u.avg_odf == Approx((0.25 / 4.0 + 1.0) / 2.0));
  CHECK(u.flake_odf == Approx(0.5));
  CHECK(w.flake_odf == Approx(0.2));
}

TEST_CASE("mesoscopic invariants on random partitions") {
  gen::Rng rng(64);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 25;
    const Graph g = gen::connected_graph(rng, n, 0.15);
    const Partition p(gen::random_labels(rng, n, 1 + trial % 5));
    const MesoscopicSummary s = mesoscopic(g, p);
    for (double x : {s.mixing_parameter, s.embeddedness, s.max_odf, s.avg_odf, s.flake_odf}) {
      CHECK(x >= 0.0);
      CHECK(x <= 1.0);
    }
    if (std::isfinite(s.hub_dominance)) {
      CHECK(s.hub_dominance >= 0.0);
      CHECK(s.hub_dominance <= 1.0);
    }
    double node_odf = 0.0;
    const DegreeSplit sp = degree_split(g, p);
    for (NodeId v = 0; v < n; ++v) node_odf += sp.k_inter[v] / static_cast<double>(g.degree(v));
    node_odf /= static_cast<double>(n);
    CHECK(s.embeddedness + node_odf == Approx(1.0).epsilon(1e-14));
    // Mixing parameter from the split equals 2 m_inter / 2m from the filtered graphs.
    const FilteredGraphs f = edge_filtered_graphs(g, p);
    CHECK(s.mixing_parameter ==
          static_cast<double>(2 * f.inter.num_edges()) / static_cast<double>(2 * g.num_edges()));
  }
}

TEST_CASE("feature values follow the feature names") {
  MacroscopicSummary macro;
  macro.density = 1;
  macro.degree_exponent = 7;
  MesoscopicSummary meso;
  meso.modularity = 8;
  meso.hub_dominance = 16;
  const auto v = feature_values(macro, meso);
  CHECK(kFeatureNames[0] == "density");
  CHECK(v[0] == 1);
  CHECK(kFeatureNames[6] == "gamma");
  CHECK(v[6] == 7);
  CHECK(kFeatureNames[7] == "modularity");
  CHECK(v[7] == 8);
  CHECK(kFeatureNames[15] == "hub_dominance");
  CHECK(v[15] == 16);
}
