#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace stochgeo {

struct EstimatorResult {
  double mean = 0.0;
  double std_error = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double ci_level = 0.99;  // two-sided
  std::size_t n_samples = 0;
  std::uint64_t master_seed = 0;
};

struct QuadratureOptions {
  int panels = 1024;
  int order = 8;
};

struct EstimatorOptions {
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency
  double ci_level = 0.99;
  QuadratureOptions quadrature{};
};

double normal_quantile(double p);

// Mean, standard error and a normal-approximation confidence interval,
// reduced with fixed-order pairwise sums.
EstimatorResult summarize(std::span<const double> values, std::uint64_t master_seed,
                          double ci_level = 0.99);

/// Common-random-numbers comparison of two per-sample value sequences drawn
/// with the same seed. `difference` summarizes upper - lower sample by sample.
struct PairedComparison {
  EstimatorResult lower;  // the body expected to have the smaller functional
  EstimatorResult upper;  // the extremizer
  EstimatorResult difference;
  double one_sided_level = 0.99;
  double lower_confidence_bound = 0.0;  // on E[upper - lower]
  bool dominance_holds = false;         // lower_confidence_bound > 0
  bool identical = false;               // every paired sample equal
};

PairedComparison compare_paired(std::span<const double> lower, std::span<const double> upper,
                                std::uint64_t master_seed, double one_sided_level = 0.99);

}  // namespace stochgeo
