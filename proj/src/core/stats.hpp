#pragma once
// Small statistics helpers shared by the Monte Carlo probes.

#include <cstddef>
#include <span>
#include <vector>

namespace ergo::stats {

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
    std::size_t n = 0;
};

MeanSE mean_se(std::span<const double> xs);

// Wilson score interval for a binomial proportion (z = 1.96 for 95%).
struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};
Interval wilson(std::size_t successes, std::size_t n, double z = 1.96);

// Empirical quantile with linear interpolation; xs need not be sorted.
double quantile(std::vector<double> xs, double q);

// Pearson correlation of two equal-length samples.
double correlation(std::span<const double> a, std::span<const double> b);

}  // namespace ergo::stats
