#include "chain/prop_lbc.hpp"

#include "chain/chain_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace ergo::chain {

PropLbcReport prop_lbc_exact(const FiniteChain& c, const std::vector<double>& V,
                             double h0, double rho_decay, double C, std::size_t z,
                             double eps, double R, int T, int grid_max) {
    const std::size_t n = c.size();
    if (V.size() != n) throw std::invalid_argument("prop_lbc: V size mismatch");
    for (double v : V)
        if (v < 0.0) throw std::invalid_argument("prop_lbc: V must be nonnegative");
    if (T < 1) throw std::invalid_argument("prop_lbc: T >= 1");

    PropLbcReport rep;

    // Premise 1: P^t V <= h(t) V + C entrywise over the time grid.
    std::vector<double> ptv = V, tmp(n, 0.0);
    double worst = -1e300;
    double h = h0;
    for (int t = 0; t <= grid_max; ++t) {
        const double ht = (t == 0) ? 1.0 : h;  // h(0) is not used below t=1
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, ptv[i] - (ht * V[i] + C));
        if (t < grid_max) {
            apply_to_function(c, ptv, tmp);
            ptv.swap(tmp);
            h *= rho_decay;
        }
    }
    rep.lyapunov_worst = worst;
    rep.lyapunov_ok = worst <= 1e-12;

    // Half-level check at the grid tail: 1 - (h(t)V+C)/R >= 1/2.
    const double h_tail = h0 * std::pow(rho_decay, grid_max);
    double vmax = 0.0;
    for (double v : V) vmax = std::max(vmax, v);
    rep.half_level_ok = 1.0 - (h_tail * vmax + C) / R >= 0.5 - 1e-12;

    // Premise 2: min over {V <= R} of P^T(x, ball).
    const auto ball = c.ball(z, eps);
    if (ball.empty()) throw std::invalid_argument("prop_lbc: empty ball");
    std::vector<double> ind(n, 0.0);
    for (std::size_t b : ball) ind[b] = 1.0;
    for (int t = 0; t < T; ++t) {
        apply_to_function(c, ind, tmp);
        ind.swap(tmp);
    }
    double p = 2.0;
    bool any = false;
    for (std::size_t x = 0; x < n; ++x)
        if (V[x] <= R) {
            any = true;
            p = std::min(p, ind[x]);
        }
    if (!any) throw std::invalid_argument("prop_lbc: {V <= R} is empty");
    rep.p = p;
    rep.irreducibility_ok = p > 0.0;

    rep.premises_ok = rep.lyapunov_ok && rep.half_level_ok && rep.irreducibility_ok;
    if (!rep.premises_ok) return rep;

    const auto cc = condition_C_exact(c, z, eps);
    rep.condition_c = cc.value;
    rep.condition_c_witness = cc.witness;
    rep.conclusion_ok = cc.value >= p / 2.0 - 1e-12;
    return rep;
}

}  // namespace ergo::chain
