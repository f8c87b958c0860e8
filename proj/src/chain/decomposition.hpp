#pragma once
// Mixture decomposition of P^{t1+...+tk} delta_x into ball-supported pieces:
//   nu_i  = (mu_{i-1} P^{t_i}) restricted to B_d(z,delta), normalized
//   mu_i  = (mu_{i-1} P^{t_i} - alpha nu_i) / (1 - alpha)
// with t_i the smallest step count pushing the ball mass above alpha, and the
// reconstruction identity
//   P^{t1+...+tk} delta_x = sum_i alpha (1-alpha)^{i-1} P^{t_{i+1}+...+t_k} nu_i
//                           + (1-alpha)^k mu_k
// verified entrywise.

#include "chain/finite_chain.hpp"

namespace ergo::chain {

struct DecompositionTrace {
    double alpha = 0.0;
    double delta = 0.0;
    int k = 0;
    std::vector<int> times;                   // t_1..t_k
    std::vector<std::vector<double>> nus;     // ball-supported pieces
    std::vector<std::vector<double>> mus;     // remainders
    double reconstruction_error = 0.0;        // entrywise max
    double off_ball_mass = 0.0;               // max nu_i mass outside the ball
    double mass_defect = 0.0;                 // max |sum(nu_i) - 1|, |sum(mu_i) - 1|
    // Stopping rule 2 (1-alpha)^k ||f||_inf < eps for the given budget.
    bool stop_rule_ok = false;
    double stop_lhs = 0.0;
};

DecompositionTrace measure_decomposition(const FiniteChain& c, std::size_t x,
                                         std::size_t z, double delta, double alpha,
                                         int k, bool use_d_metric = true,
                                         double f_budget = 1.0, double eps_stop = 0.1,
                                         int horizon = 100000);

}  // namespace ergo::chain
