#pragma once
// Exact check of the Lyapunov + uniform-irreducibility => lower-bound-condition
// implication. Premises are verified first (P^t V <= h(t) V + C entrywise on a
// time grid; min of P^T(x, ball) over the sublevel set {V <= R} positive), the
// conclusion is the proof's final display: condition (C) at (z,eps) is at
// least p/2. True premises with a failing conclusion indicate a bug, never a
// tolerable outcome, and are flagged as such.

#include "chain/finite_chain.hpp"

namespace ergo::chain {

struct PropLbcReport {
    bool lyapunov_ok = false;
    double lyapunov_worst = 0.0;     // max over grid of (P^tV - h(t)V - C), entrywise
    bool half_level_ok = false;      // 1 - (h(t)V+C)/R >= 1/2 at the grid tail
    bool irreducibility_ok = false;
    double p = 0.0;                  // min_{V<=R} P^T(x, ball)
    bool premises_ok = false;
    double condition_c = 0.0;
    std::size_t condition_c_witness = 0;
    bool conclusion_ok = false;      // condition_c >= p/2 - 1e-12; only meaningful
                                     // when premises_ok
};

// h(t) = h0 * rho_decay^t.
PropLbcReport prop_lbc_exact(const FiniteChain& c, const std::vector<double>& V,
                             double h0, double rho_decay, double C, std::size_t z,
                             double eps, double R, int T, int grid_max = 200);

}  // namespace ergo::chain
