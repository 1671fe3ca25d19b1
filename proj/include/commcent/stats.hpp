#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace commcent::stats {

struct CorrelationRecord {
  std::string network;
  std::string classical;
  std::string community_aware;
  double tau = 0.0;  // NaN when either score vector is constant
};

struct DistributionSummary {
  double mean = 0.0;
  double median = 0.0;
  double std = 0.0;
  double iqr = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t n = 0;
};

struct RegressionRecord {
  std::string community_aware;
  std::string feature;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double p_value = 1.0;
  std::size_t n = 0;
};

/// Kendall tau-b with tie correction, O(n log n) (Knight's merge-sort counting).
/// Throws std::invalid_argument on length mismatch, n < 2 or a constant input.
double kendall_tau(std::span<const double> x, std::span<const double> y);

/// Sample Pearson correlation, two-pass centred. Throws on constant input.
double pearson(std::span<const double> x, std::span<const double> y);

/// Quantile with linear interpolation between order statistics (p in [0,1]).
double quantile(std::span<const double> sorted, double p);

/// Mean, median, n-1 standard deviation (0 for n = 1), IQR, range.
DistributionSummary summarize(std::span<const double> values);

/// Two-sided Student-t tail probability P(|T| >= |t|) with `dof` degrees of freedom.
double t_two_sided_p(double t, double dof);

/// Simple OLS y = intercept + slope x with a t-test on the slope (n - 2 dof).
/// Throws if n < 3 or x is constant.
RegressionRecord ols_fit(std::span<const double> x, std::span<const double> y);

struct ConsistencyMatrix {
  std::vector<std::string> ids;
  std::vector<double> values;  // row-major, ids.size() squared

  double at(std::size_t a, std::size_t b) const { return values[a * ids.size() + b]; }
};

/// Pearson correlation between every pair of per-network vectors. Positions
/// holding NaN in either vector are dropped pairwise. Throws on ragged input.
ConsistencyMatrix pairwise_network_consistency(
    const std::map<std::string, std::vector<double>>& per_network);

}  // namespace commcent::stats
