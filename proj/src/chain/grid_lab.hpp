#pragma once
// Row-normalized grid discretization of an AR(1)-type Gaussian kernel on a
// bounded interval. Finite-space eventual continuity is vacuous, so this lab
// is the designated non-vacuous proxy: continuity profiles are measured
// against grid-neighbor distance. The d metric is a coarser squashed distance
// |tanh x - tanh y| standing in for the topology-weakened setting.

#include "chain/finite_chain.hpp"

namespace ergo::chain {

struct GridKernelSpec {
    double contraction = 0.5;  // next mean = contraction * x
    double noise_sigma = 0.3;  // Gaussian kernel width; <= 0 degenerates to nearest point
    double xmin = -2.0;
    double xmax = 2.0;
    int points = 64;
};

FiniteChain grid_kernel_lab(const GridKernelSpec& spec);

// sup over tail times in [t_tail, t_end] of |P^t f(x) - P^t f(z)| maximized
// over a small dictionary of 1-Lipschitz functions; x runs over grid
// neighbors of z at increasing distance.
struct ContinuityProfile {
    std::vector<double> distance;  // |x - z| per probed neighbor (d or rho metric)
    std::vector<double> disparity; // sup_t max_f |P^t f(x) - P^t f(z)|
};
ContinuityProfile grid_continuity_profile(const FiniteChain& c, std::size_t z,
                                          int max_neighbor, int t_tail, int t_end,
                                          bool use_d_metric = false);

// Total variation distance between invariant measures of two refinements,
// compared after aggregating the finer chain onto the coarser bins.
double refinement_tv(const FiniteChain& coarse, const FiniteChain& fine);

}  // namespace ergo::chain
