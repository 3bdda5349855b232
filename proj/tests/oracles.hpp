#pragma once

// Independent statistical oracles shared by the unit and acceptance
// suites. Nothing here calls into the sampler code paths it is used to
// check.

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <vector>

namespace qpd::test {

inline double oracle_log_sinh(double x) {
  if (x > 20.0) return x - 0.6931471805599453 + std::log1p(-std::exp(-2.0 * x));
  return std::log(std::sinh(x));
}

// E[r1^2 + r2^2] under the n = 2 radial density by 1-D quadrature after
// rotating to u = (r1+r2)/sqrt(2), v = (r1-r2)/sqrt(2): u is exactly
// N(0, sigma^2) and v has density proportional to
// exp(-v^2/2 sigma^2) sinh^4(|v|/sqrt(2)).
inline double radial_mean_sq_quadrature_n2(double sigma) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const auto weight = [&](double v) {
    return std::exp(-v * v * inv2s2 + 4.0 * oracle_log_sinh(v / std::sqrt(2.0)));
  };
  const double norm = integrator.integrate(weight, 1e-12);
  const double second =
      integrator.integrate([&](double v) { return v * v * weight(v); }, 1e-12);
  return sigma * sigma + second / norm;
}

inline double normal_cdf(double x, double sigma) {
  return 0.5 * std::erfc(-x / (sigma * std::sqrt(2.0)));
}

// Two-sided Kolmogorov-Smirnov statistic against a continuous CDF.
template <typename Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = cdf(xs[i]);
    d = std::max(d, std::abs(c - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - c));
  }
  return d;
}

// Asymptotic two-sided critical value at level alpha = 1%.
inline double ks_critical_1pct(std::size_t n) {
  return 1.6276236115189503 / std::sqrt(static_cast<double>(n));
}

}  // namespace qpd::test
