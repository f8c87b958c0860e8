#include "chain/grid_lab.hpp"

#include "chain/chain_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace ergo::chain {

FiniteChain grid_kernel_lab(const GridKernelSpec& spec) {
    const int n = spec.points;
    if (n < 2) throw std::invalid_argument("grid lab: need >= 2 points");
    if (!(spec.xmax > spec.xmin)) throw std::invalid_argument("grid lab: bad interval");
    std::vector<std::vector<double>> coords;
    std::vector<double> xs(n);
    const double dx = (spec.xmax - spec.xmin) / (n - 1);
    for (int i = 0; i < n; ++i) {
        xs[i] = spec.xmin + dx * i;
        coords.push_back({xs[i]});
    }
    std::vector<double> P(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double mean = spec.contraction * xs[i];
        if (spec.noise_sigma <= 0.0) {
            // Degenerate kernel: all mass on the nearest grid point.
            int best = 0;
            for (int j = 1; j < n; ++j)
                if (std::abs(xs[j] - mean) < std::abs(xs[best] - mean)) best = j;
            P[static_cast<std::size_t>(i) * n + best] = 1.0;
            continue;
        }
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const double t = (xs[j] - mean) / spec.noise_sigma;
            const double w = std::exp(-0.5 * t * t);
            P[static_cast<std::size_t>(i) * n + j] = w;
            row += w;
        }
        if (row <= 0.0)
            throw std::runtime_error("grid lab: row normalization failed (all-zero row)");
        for (int j = 0; j < n; ++j) P[static_cast<std::size_t>(i) * n + j] /= row;
    }
    FiniteChain chain(std::move(coords), std::move(P));
    const std::size_t N = chain.size();
    std::vector<double> d(N * N, 0.0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            d[i * N + j] = std::abs(std::tanh(xs[i]) - std::tanh(xs[j]));
    chain.set_d_metric(std::move(d));
    return chain;
}

ContinuityProfile grid_continuity_profile(const FiniteChain& c, std::size_t z,
                                          int max_neighbor, int t_tail, int t_end,
                                          bool use_d_metric) {
    const std::size_t n = c.size();
    // Dictionary of 1-Lipschitz test functions of the coordinate.
    std::vector<std::vector<double>> dict;
    {
        std::vector<double> f1(n), f2(n), f3(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = c.coords()[i][0];
            f1[i] = std::tanh(x);
            f2[i] = std::tanh(2.0 * x) * 0.5;
            f3[i] = std::cos(x) * 0.5;
        }
        dict = {f1, f2, f3};
    }
    // Evolve each dictionary function to every time in [t_tail, t_end].
    std::vector<std::vector<std::vector<double>>> evolved;  // [f][t][state]
    for (const auto& f : dict) {
        std::vector<std::vector<double>> per_t;
        std::vector<double> cur = f, tmp;
        for (int t = 0; t < t_tail; ++t) {
            apply_to_function(c, cur, tmp);
            cur.swap(tmp);
        }
        per_t.push_back(cur);
        for (int t = t_tail; t < t_end; ++t) {
            apply_to_function(c, cur, tmp);
            cur.swap(tmp);
            per_t.push_back(cur);
        }
        evolved.push_back(std::move(per_t));
    }
    ContinuityProfile prof;
    for (int step = 1; step <= max_neighbor; ++step) {
        const std::size_t x = z + static_cast<std::size_t>(step);
        if (x >= n) break;
        double disparity = 0.0;
        for (const auto& per_t : evolved)
            for (const auto& ft : per_t)
                disparity = std::max(disparity, std::abs(ft[x] - ft[z]));
        prof.distance.push_back(use_d_metric ? c.dmet(z, x) : c.rho(z, x));
        prof.disparity.push_back(disparity);
    }
    return prof;
}

double refinement_tv(const FiniteChain& coarse, const FiniteChain& fine) {
    const auto mu_c = invariant_measures(coarse);
    const auto mu_f = invariant_measures(fine);
    if (mu_c.size() != 1 || mu_f.size() != 1)
        throw std::runtime_error("refinement_tv: chains must be uniquely ergodic");
    // Aggregate the fine measure onto the coarse bins by nearest coordinate.
    std::vector<double> agg(coarse.size(), 0.0);
    for (std::size_t j = 0; j < fine.size(); ++j) {
        const double x = fine.coords()[j][0];
        std::size_t best = 0;
        for (std::size_t i = 1; i < coarse.size(); ++i)
            if (std::abs(coarse.coords()[i][0] - x) <
                std::abs(coarse.coords()[best][0] - x))
                best = i;
        agg[best] += mu_f[0][j];
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i)
        tv += std::abs(agg[i] - mu_c[0][i]);
    return 0.5 * tv;
}

}  // namespace ergo::chain
