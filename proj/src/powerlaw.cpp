#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "commcent/topology.hpp"

namespace commcent {

double hurwitz_zeta(double s, double q) {
  if (!(s > 1.0) || !(q > 0.0)) throw std::domain_error("hurwitz_zeta needs s > 1, q > 0");
  // GSL aborts on underflow by default; the fitter only needs the value.
  static const gsl_error_handler_t* previous = gsl_set_error_handler_off();
  (void)previous;
  gsl_sf_result r;
  gsl_sf_hzeta_e(s, q, &r);
  return r.val;
}

namespace {

// Negative log-likelihood up to a constant: n ln zeta(alpha, xmin) + alpha sum ln x.
double neg_log_likelihood(double alpha, double n, double sum_log, double x_min) {
  return n * std::log(hurwitz_zeta(alpha, x_min)) + alpha * sum_log;
}

double mle_alpha(double n, double sum_log, double x_min) {
  // The likelihood is log-concave in alpha; golden-section on a wide bracket.
  double lo = 1.0 + 1e-6;
  double hi = 20.0;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - ratio * (hi - lo);
  double d = lo + ratio * (hi - lo);
  double fc = neg_log_likelihood(c, n, sum_log, x_min);
  double fd = neg_log_likelihood(d, n, sum_log, x_min);
  while (hi - lo > 1e-10) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - ratio * (hi - lo);
      fc = neg_log_likelihood(c, n, sum_log, x_min);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + ratio * (hi - lo);
      fd = neg_log_likelihood(d, n, sum_log, x_min);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PowerLawFit fit_discrete_power_law(std::span<const std::uint32_t> samples, std::size_t min_tail) {
  std::vector<std::uint32_t> xs;
  xs.reserve(samples.size());
  for (std::uint32_t x : samples)
    if (x >= 1) xs.push_back(x);
  std::sort(xs.begin(), xs.end());

  PowerLawFit best;
  std::vector<std::uint32_t> candidates(xs.begin(), xs.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::uint32_t x_min : candidates) {
    const auto first = std::lower_bound(xs.begin(), xs.end(), x_min);
    const auto tail = static_cast<std::size_t>(xs.end() - first);
    if (tail < min_tail) break;
    // A tail with a single distinct value carries no slope information.
    if (*first == xs.back()) break;
    double sum_log = 0.0;
    for (auto it = first; it != xs.end(); ++it) sum_log += std::log(static_cast<double>(*it));
    const double n = static_cast<double>(tail);
    const double alpha = mle_alpha(n, sum_log, x_min);

    // KS distance between empirical and fitted CCDFs over the tail support.
    const double z_min = hurwitz_zeta(alpha, x_min);
    double ks = 0.0;
    for (auto it = first; it != xs.end();) {
      const std::uint32_t x = *it;
      const auto run_end = std::upper_bound(it, xs.end(), x);
      const double emp_ge = static_cast<double>(xs.end() - it) / n;
      const double emp_gt = static_cast<double>(xs.end() - run_end) / n;
      const double fit_ge = hurwitz_zeta(alpha, x) / z_min;
      const double fit_gt = hurwitz_zeta(alpha, x + 1.0) / z_min;
      ks = std::max({ks, std::fabs(emp_ge - fit_ge), std::fabs(emp_gt - fit_gt)});
      it = run_end;
    }
    if (!best.ok() || ks < best.ks_distance) {
      best.alpha = alpha;
      best.x_min = x_min;
      best.tail_size = tail;
      best.ks_distance = ks;
    }
  }
  return best;
}

}  // namespace commcent
