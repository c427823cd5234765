#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "stochgeo/geom2.hpp"

namespace testutil {

// Kolmogorov-Smirnov statistic sqrt(n) * D_n against a continuous CDF.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf&& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return std::sqrt(n) * d;
}

// Asymptotic 99% critical value of sqrt(n) * D_n.
inline constexpr double kKs99 = 1.6276;

// P(<x, dir> <= c) for a uniform point of p, from the area of the cut.
inline double cut_fraction(const stochgeo::ConvexPolygon& p, stochgeo::Point2 dir, double c) {
  const auto pieces = stochgeo::split_by_line(p, stochgeo::LineSide(dir, c));
  return pieces.negative ? stochgeo::area(*pieces.negative) / stochgeo::area(p) : 0.0;
}

}  // namespace testutil
