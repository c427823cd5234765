#include "stochgeo/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "stochgeo/parallel.hpp"

namespace stochgeo {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("quantile level must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

EstimatorResult summarize(std::span<const double> values, std::uint64_t master_seed,
                          double ci_level) {
  if (values.empty()) throw std::invalid_argument("cannot summarize an empty sample");
  const auto n = values.size();
  EstimatorResult r;
  r.n_samples = n;
  r.master_seed = master_seed;
  r.ci_level = ci_level;
  r.mean = pairwise_sum(values) / static_cast<double>(n);
  if (n > 1) {
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = (values[i] - r.mean) * (values[i] - r.mean);
    const double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    r.std_error = std::sqrt(var / static_cast<double>(n));
  }
  const double z = normal_quantile(0.5 + 0.5 * ci_level);
  r.ci_low = r.mean - z * r.std_error;
  r.ci_high = r.mean + z * r.std_error;
  return r;
}

PairedComparison compare_paired(std::span<const double> lower, std::span<const double> upper,
                                std::uint64_t master_seed, double one_sided_level) {
  if (lower.size() != upper.size()) throw std::invalid_argument("paired samples differ in size");
  PairedComparison out;
  out.lower = summarize(lower, master_seed);
  out.upper = summarize(upper, master_seed);
  std::vector<double> diff(lower.size());
  out.identical = true;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    diff[i] = upper[i] - lower[i];
    if (diff[i] != 0.0) out.identical = false;
  }
  out.difference = summarize(diff, master_seed);
  out.one_sided_level = one_sided_level;
  out.lower_confidence_bound =
      out.difference.mean - normal_quantile(one_sided_level) * out.difference.std_error;
  out.dominance_holds = out.lower_confidence_bound > 0.0;
  return out;
}

}  // namespace stochgeo
