#pragma once
// Exact ergodicity computations on finite chains: extreme invariant measures,
// tail-liminf hitting probabilities (true liminf, not Cesaro: the 2-cycle
// would fool an averaged estimate), the lower-bound condition, and asymptotic
// stability, plus the stability <=> lower-bound consistency battery.

#include "chain/finite_chain.hpp"

#include <optional>

namespace ergo::chain {

// One extreme invariant measure per closed communicating class (exact linear
// solve; pi P = pi within 1e-12).
std::vector<std::vector<double>> invariant_measures(const FiniteChain& c);

// Independent oracle: power iteration from the uniform distribution on the
// class, to tolerance; only valid for aperiodic classes.
std::vector<double> power_iteration_measure(const FiniteChain& c,
                                            const std::vector<int>& cls,
                                            double tol = 1e-13,
                                            std::size_t max_iter = 1000000);

// liminf_{t->oo} P^t(x, ball): detects the lcm of periods of the closed
// classes reachable from x, converges each residue subsequence, returns the
// minimum over residues.
double liminf_hitting(const FiniteChain& c, std::size_t x,
                      const std::vector<std::size_t>& ball,
                      std::size_t max_iter = 1000000, double tol = 1e-13);

struct ConditionC {
    double value = 0.0;
    std::size_t witness = 0;  // the infimum-attaining start state
};
ConditionC condition_C_exact(const FiniteChain& c, std::size_t z, double eps,
                             bool use_d = false);

struct StabilityVerdict {
    bool stable = false;
    std::optional<std::vector<double>> mu;  // present iff stable
};
// Stable iff unique closed class and that class is aperiodic; mu is then the
// power-iteration limit (checked to tolerance).
StabilityVerdict asymptotic_stability_exact(const FiniteChain& c);

struct Theorem4Row {
    bool stable = false;
    bool lower_bound = false;  // exists z with condition (C) > 0 at point balls
    double best_value = 0.0;
    std::size_t best_z = 0;
};
Theorem4Row theorem4_row(const FiniteChain& c);

struct Theorem4Report {
    std::size_t chains = 0;
    std::size_t violations = 0;
    std::vector<std::size_t> violating_indices;
};
Theorem4Report theorem4_consistency(const std::vector<FiniteChain>& battery);

}  // namespace ergo::chain
