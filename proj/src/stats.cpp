#include "commcent/stats.hpp"

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_errno.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "commcent/kernels.hpp"

namespace commcent::stats {

namespace {

void require_pair(std::span<const double> x, std::span<const double> y, std::size_t min_n) {
  if (x.size() != y.size()) throw std::invalid_argument("vectors differ in length");
  if (x.size() < min_n)
    throw std::invalid_argument("need at least " + std::to_string(min_n) + " observations");
}

// Counts ties among runs of equal values: sum over runs of r(r-1)/2.
template <class It, class Eq>
std::int64_t tied_pairs(It first, It last, Eq eq) {
  std::int64_t ties = 0;
  while (first != last) {
    It run_end = std::next(first);
    while (run_end != last && eq(*first, *run_end)) ++run_end;
    const auto r = static_cast<std::int64_t>(std::distance(first, run_end));
    ties += r * (r - 1) / 2;
    first = run_end;
  }
  return ties;
}

// Bottom-up merge sort on ys; returns the number of inversions (swaps).
std::int64_t count_inversions(std::vector<double>& ys) {
  const std::size_t n = ys.size();
  std::vector<double> buf(n);
  std::int64_t swaps = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (ys[j] < ys[i]) {
          swaps += static_cast<std::int64_t>(mid - i);
          buf[k++] = ys[j++];
        } else {
          buf[k++] = ys[i++];
        }
      }
      while (i < mid) buf[k++] = ys[i++];
      while (j < hi) buf[k++] = ys[j++];
    }
    std::swap(ys, buf);
  }
  return swaps;
}

}  // namespace

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, 2);
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  const std::int64_t x_ties =
      tied_pairs(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
  const std::int64_t joint_ties = tied_pairs(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return x[a] == x[b] && y[a] == y[b];
  });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[idx[i]];
  const std::int64_t swaps = count_inversions(ys);
  const std::int64_t y_ties =
      tied_pairs(ys.begin(), ys.end(), [](double a, double b) { return a == b; });

  const auto total = static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n - 1) / 2;
  if (x_ties == total || y_ties == total)
    throw std::invalid_argument("Kendall tau is undefined for a constant vector");
  // concordant - discordant
  const std::int64_t numerator = total - x_ties - y_ties + joint_ties - 2 * swaps;
  // sqrt(a) * sqrt(a) can miss a by an ulp, which would break tau = 1 on identical rankings
  const std::int64_t a = total - x_ties;
  const std::int64_t b = total - y_ties;
  const double denom = a == b ? static_cast<double>(a)
                              : std::sqrt(static_cast<double>(a) * static_cast<double>(b));
  return static_cast<double>(numerator) / denom;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, 2);
  const double n = static_cast<double>(x.size());
  const double mx = kernels::sum(x) / n;
  const double my = kernels::sum(y) / n;
  std::vector<double> cx(x.size());
  std::vector<double> cy(y.size());
  kernels::affine(cx, x, 1.0, -mx);
  kernels::affine(cy, y, 1.0, -my);
  const double sxx = kernels::dot(cx, cx);
  const double syy = kernels::dot(cy, cy);
  if (sxx == 0.0 || syy == 0.0)
    throw std::invalid_argument("Pearson correlation is undefined for a constant vector");
  const double r = kernels::dot(cx, cy) / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

double quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

DistributionSummary summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("cannot summarise an empty sample");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  DistributionSummary s;
  s.n = v.size();
  s.mean = kernels::sum(v) / static_cast<double>(s.n);
  if (s.n > 1) {
    std::vector<double> c(s.n);
    kernels::affine(c, v, 1.0, -s.mean);
    s.std = std::sqrt(kernels::dot(c, c) / static_cast<double>(s.n - 1));
  }
  s.median = quantile(v, 0.5);
  s.iqr = quantile(v, 0.75) - quantile(v, 0.25);
  s.min = v.front();
  s.max = v.back();
  return s;
}

double t_two_sided_p(double t, double dof) {
  if (std::isinf(t)) return 0.0;
  static const gsl_error_handler_t* previous = gsl_set_error_handler_off();
  (void)previous;
  return std::min(1.0, 2.0 * gsl_cdf_tdist_Q(std::fabs(t), dof));
}

RegressionRecord ols_fit(std::span<const double> x, std::span<const double> y) {
  require_pair(x, y, 3);
  const std::size_t n = x.size();
  const double nd = static_cast<double>(n);
  const double mx = kernels::sum(x) / nd;
  const double my = kernels::sum(y) / nd;
  std::vector<double> cx(n);
  std::vector<double> cy(n);
  kernels::affine(cx, x, 1.0, -mx);
  kernels::affine(cy, y, 1.0, -my);
  const double sxx = kernels::dot(cx, cx);
  if (sxx == 0.0) throw std::invalid_argument("OLS needs a non-constant predictor");
  const double sxy = kernels::dot(cx, cy);
  const double syy = kernels::dot(cy, cy);

  RegressionRecord r;
  r.n = n;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  if (syy == 0.0) {
    r.slope = 0.0;
    r.intercept = my;
    r.r_squared = 0.0;
    r.p_value = 1.0;
    return r;
  }
  r.r_squared = std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  const double sse = std::max(0.0, syy - r.slope * sxy);
  const double dof = nd - 2.0;
  const double se = std::sqrt(sse / dof / sxx);
  if (se == 0.0 || se < 1e-15 * std::fabs(r.slope)) {
    r.p_value = 0.0;
  } else {
    r.p_value = t_two_sided_p(r.slope / se, dof);
  }
  return r;
}

ConsistencyMatrix pairwise_network_consistency(
    const std::map<std::string, std::vector<double>>& per_network) {
  ConsistencyMatrix out;
  std::vector<const std::vector<double>*> vecs;
  for (const auto& [id, v] : per_network) {
    if (!vecs.empty() && v.size() != vecs.front()->size())
      throw std::invalid_argument("network '" + id + "' has a vector of different length");
    out.ids.push_back(id);
    vecs.push_back(&v);
  }
  const std::size_t k = out.ids.size();
  out.values.assign(k * k, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> a;
  std::vector<double> b;
  for (std::size_t i = 0; i < k; ++i) {
    out.values[i * k + i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      a.clear();
      b.clear();
      for (std::size_t t = 0; t < vecs[i]->size(); ++t) {
        const double u = (*vecs[i])[t];
        const double w = (*vecs[j])[t];
        if (std::isfinite(u) && std::isfinite(w)) {
          a.push_back(u);
          b.push_back(w);
        }
      }
      double r = std::numeric_limits<double>::quiet_NaN();
      try {
        r = pearson(a, b);
      } catch (const std::invalid_argument&) {
        // too few paired values or a constant vector: leave NaN
      }
      out.values[i * k + j] = r;
      out.values[j * k + i] = r;
    }
  }
  return out;
}

}  // namespace commcent::stats
