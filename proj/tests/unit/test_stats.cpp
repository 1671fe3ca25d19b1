#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "commcent/stats.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace commcent::stats;
using doctest::Approx;

TEST_CASE("kendall tau fixtures") {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{3, 2, 1};
  CHECK(kendall_tau(a, a) == 1.0);
  CHECK(kendall_tau(a, b) == -1.0);
  const std::vector<double> x{1, 1, 2};
  const std::vector<double> y{1, 2, 2};
  CHECK(kendall_tau(x, y) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("kendall tau errors") {
  const std::vector<double> a{1, 2, 3};
  const std::vector<double> b{1, 2};
  const std::vector<double> flat{4, 4, 4};
  const std::vector<double> one{1};
  CHECK_THROWS_AS(kendall_tau(a, b), std::invalid_argument);
  CHECK_THROWS_AS(kendall_tau(a, flat), std::invalid_argument);
  CHECK_THROWS_AS(kendall_tau(one, one), std::invalid_argument);
}

TEST_CASE("kendall tau equals the pair-enumeration oracle exactly") {
  gen::Rng rng(71);
  std::uniform_int_distribution<std::size_t> size(2, 200);
  std::uniform_int_distribution<int> distinct(2, 12);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = size(rng);
    const auto x = gen::tied_vector(rng, n, distinct(rng));
    const auto y = gen::tied_vector(rng, n, distinct(rng));
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; })) continue;
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; })) continue;
    CHECK(kendall_tau(x, y) == oracle::kendall_tau(x, y));
    ++checked;
  }
}

TEST_CASE("kendall tau symmetries") {
  gen::Rng rng(72);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial;
    const auto x = gen::normal_vector(rng, n);
    const auto y = gen::normal_vector(rng, n);
    const double t = kendall_tau(x, y);
    CHECK(kendall_tau(y, x) == t);
    std::vector<double> neg(y);
    for (double& v : neg) v = -v;
    CHECK(kendall_tau(x, neg) == -t);
    std::vector<double> cubed(x);
    for (double& v : cubed) v = v * v * v;
    std::vector<double> shifted(y);
    for (double& v : shifted) v = std::exp(v);
    CHECK(kendall_tau(cubed, shifted) == t);
    CHECK(t >= -1.0);
    CHECK(t <= 1.0);
  }
}

TEST_CASE("pearson") {
  gen::Rng rng(73);
  const auto v = gen::normal_vector(rng, 30);
  std::vector<double> neg(v);
  for (double& x : neg) x = -x;
  CHECK(pearson(v, v) == Approx(1.0).epsilon(1e-15));
  CHECK(pearson(v, neg) == Approx(-1.0).epsilon(1e-15));

  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{2, 4, 6.1};
  // Two-pass definition by hand.
  const double mx = 2.0;
  const double my = (2 + 4 + 6.1) / 3.0;
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  CHECK(std::fabs(pearson(x, y) - sxy / std::sqrt(sxx * syy)) <= 1e-12);
  const std::vector<double> flat{1, 1, 1};
  CHECK_THROWS_AS(pearson(x, flat), std::invalid_argument);
}

TEST_CASE("summaries") {
  const std::vector<double> a{1, 2, 3, 4};
  const DistributionSummary s = summarize(a);
  CHECK(s.median == 2.5);
  CHECK(s.iqr == 1.5);
  CHECK(s.mean == 2.5);
  CHECK(s.std == Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-15));
  CHECK(s.min == 1);
  CHECK(s.max == 4);

  const std::vector<double> five{5};
  const DistributionSummary one = summarize(five);
  CHECK(one.mean == 5);
  CHECK(one.median == 5);
  CHECK(one.std == 0);
  CHECK(one.iqr == 0);

  const std::vector<double> skew{0, 0, 0, 10};
  CHECK(summarize(skew).mean == 2.5);
  CHECK(summarize(skew).median == 0);

  CHECK_THROWS(summarize(std::vector<double>{}));
}

TEST_CASE("summary invariants") {
  gen::Rng rng(74);
  for (int trial = 0; trial < 200; ++trial) {
    const auto v = gen::normal_vector(rng, 1 + trial % 40);
    const DistributionSummary s = summarize(v);
    CHECK(s.min <= s.median);
    CHECK(s.median <= s.max);
    CHECK(s.iqr >= 0);
    CHECK(s.std >= 0);
  }
}

TEST_CASE("ols: perfect line") {
  std::vector<double> x(10);
  std::vector<double> y(10);
  for (int i = 0; i < 10; ++i) {
    x[i] = i + 1;
    y[i] = 2 * x[i] + 1;
  }
  const RegressionRecord r = ols_fit(x, y);
  CHECK(r.slope == Approx(2.0).epsilon(1e-14));
  CHECK(r.intercept == Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(r.r_squared - 1.0) <= 1e-10);
  CHECK(r.p_value < 1e-9);
  CHECK(r.n == 10);
}

TEST_CASE("ols: constant response") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{7, 7, 7, 7};
  const RegressionRecord r = ols_fit(x, y);
  CHECK(r.slope == 0.0);
  CHECK(r.r_squared == 0.0);
  CHECK(r.p_value == 1.0);
}

TEST_CASE("ols: small example against the permutation distribution") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{2, 1, 4, 3};
  const RegressionRecord r = ols_fit(x, y);
  CHECK(r.slope == Approx(0.6).epsilon(1e-14));
  CHECK(r.intercept == Approx(1.0).epsilon(1e-14));
  CHECK(r.r_squared == Approx(0.36).epsilon(1e-14));
  CHECK(r.p_value == Approx(0.4).epsilon(1e-12));
  // With n = 4 the exact permutation p is 10/24; the t approximation is close but not equal.
  const double perm = oracle::slope_permutation_pvalue(x, y);
  CHECK(perm == Approx(10.0 / 24.0).epsilon(1e-12));
  CHECK(std::fabs(r.p_value - perm) <= 0.02);
}

TEST_CASE("ols errors") {
  const std::vector<double> two{1, 2};
  CHECK_THROWS_AS(ols_fit(two, two), std::invalid_argument);
  const std::vector<double> flat{3, 3, 3};
  const std::vector<double> y{1, 2, 3};
  CHECK_THROWS_AS(ols_fit(flat, y), std::invalid_argument);
}

TEST_CASE("ols p-values match simulation of the null") {
  gen::Rng rng(75);
  for (std::size_t n : {10u, 20u}) {
    for (double t : {0.5, 1.2, 2.1, 3.0}) {
      const double p_mc = oracle::slope_t_pvalue_mc(n, t, 200000, rng);
      CHECK(std::fabs(t_two_sided_p(t, static_cast<double>(n) - 2.0) - p_mc) <= 0.01);
    }
  }
  CHECK(t_two_sided_p(0.0, 5.0) == Approx(1.0));
  CHECK(t_two_sided_p(INFINITY, 5.0) == 0.0);
}

TEST_CASE("ols records stay in range") {
  gen::Rng rng(76);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 30;
    const auto x = gen::normal_vector(rng, n);
    const auto y = gen::normal_vector(rng, n);
    const RegressionRecord r = ols_fit(x, y);
    CHECK(r.r_squared >= 0.0);
    CHECK(r.r_squared <= 1.0);
    CHECK(r.p_value >= 0.0);
    CHECK(r.p_value <= 1.0);
  }
}

TEST_CASE("pairwise consistency") {
  gen::Rng rng(77);
  const auto a = gen::normal_vector(rng, 20);
  auto flipped = a;
  for (double& v : flipped) v = -v;
  const auto c = gen::normal_vector(rng, 20);
  const ConsistencyMatrix m = pairwise_network_consistency({{"a", a}, {"a2", a}, {"b", flipped}, {"c", c}});
  REQUIRE(m.ids == std::vector<std::string>{"a", "a2", "b", "c"});
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m.at(i, i) == 1.0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(m.at(i, j) == m.at(j, i));
  }
  CHECK(m.at(0, 1) == Approx(1.0).epsilon(1e-15));
  CHECK(m.at(0, 2) == Approx(-1.0).epsilon(1e-15));
  CHECK(m.at(0, 3) == pearson(a, c));

  auto holed = c;
  holed[3] = NAN;
  const ConsistencyMatrix h = pairwise_network_consistency({{"a", a}, {"h", holed}});
  std::vector<double> a_kept;
  std::vector<double> c_kept;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != 3) {
      a_kept.push_back(a[i]);
      c_kept.push_back(c[i]);
    }
  CHECK(h.at(0, 1) == pearson(a_kept, c_kept));

  const std::vector<double> shorter(5, 1.0);
  CHECK_THROWS(pairwise_network_consistency({{"a", a}, {"s", shorter}}));
}
