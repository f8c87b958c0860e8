#include "chain/decomposition.hpp"

#include <cmath>
#include <stdexcept>

namespace ergo::chain {
namespace {

double mass_on(const std::vector<double>& mu, const std::vector<std::size_t>& ids) {
    double s = 0.0;
    for (std::size_t i : ids) s += mu[i];
    return s;
}

}  // namespace

DecompositionTrace measure_decomposition(const FiniteChain& c, std::size_t x,
                                         std::size_t z, double delta, double alpha,
                                         int k, bool use_d_metric, double f_budget,
                                         double eps_stop, int horizon) {
    if (alpha <= 0.0 || alpha >= 1.0)
        throw std::invalid_argument("measure_decomposition: alpha in (0,1)");
    if (k < 1) throw std::invalid_argument("measure_decomposition: k >= 1");
    const std::size_t n = c.size();
    const auto ball = c.ball(z, delta, use_d_metric);
    if (ball.empty()) throw std::invalid_argument("measure_decomposition: empty ball");
    std::vector<bool> in_ball(n, false);
    for (std::size_t b : ball) in_ball[b] = true;

    DecompositionTrace tr;
    tr.alpha = alpha;
    tr.delta = delta;
    tr.k = k;

    std::vector<double> mu(n, 0.0), next(n, 0.0);
    mu[x] = 1.0;
    for (int i = 0; i < k; ++i) {
        // Greedy: smallest t >= 1 with ball mass strictly above alpha.
        int t = 0;
        double mass = 0.0;
        bool found = false;
        std::vector<double> cur = mu;
        while (t < horizon) {
            apply_to_measure(c, cur, next);
            cur.swap(next);
            ++t;
            mass = mass_on(cur, ball);
            if (mass > alpha) {
                found = true;
                break;
            }
        }
        if (!found)
            throw std::runtime_error("measure_decomposition: alpha exceeds achievable "
                                     "ball mass within horizon");
        tr.times.push_back(t);

        std::vector<double> nu(n, 0.0), rem(n, 0.0);
        for (std::size_t s = 0; s < n; ++s)
            if (in_ball[s]) nu[s] = cur[s] / mass;
        // Remainder (1-alpha)^{-1} (rho - alpha nu); mass > alpha keeps it
        // nonnegative up to roundoff at the alpha = mass boundary.
        for (std::size_t s = 0; s < n; ++s) {
            double val = cur[s] - alpha * nu[s];
            if (val < 0.0) {
                if (val < -1e-12)
                    throw std::runtime_error("measure_decomposition: negative remainder");
                val = 0.0;
            }
            rem[s] = val / (1.0 - alpha);
        }
        tr.nus.push_back(nu);
        tr.mus.push_back(rem);
        mu = rem;
    }

    // Bookkeeping checks: supports, masses.
    for (const auto& nu : tr.nus) {
        double off = 0.0, total = 0.0;
        for (std::size_t s = 0; s < n; ++s) {
            total += nu[s];
            if (!in_ball[s]) off += nu[s];
        }
        tr.off_ball_mass = std::max(tr.off_ball_mass, off);
        tr.mass_defect = std::max(tr.mass_defect, std::abs(total - 1.0));
    }
    for (const auto& m : tr.mus) {
        double total = 0.0;
        for (std::size_t s = 0; s < n; ++s) total += m[s];
        tr.mass_defect = std::max(tr.mass_defect, std::abs(total - 1.0));
    }

    // Reconstruction identity, entrywise.
    auto advance = [&](std::vector<double> v, int steps) {
        std::vector<double> tmp(n, 0.0);
        for (int s = 0; s < steps; ++s) {
            apply_to_measure(c, v, tmp);
            v.swap(tmp);
        }
        return v;
    };
    int total_time = 0;
    for (int t : tr.times) total_time += t;
    std::vector<double> lhs(n, 0.0);
    lhs[x] = 1.0;
    lhs = advance(lhs, total_time);

    std::vector<double> rhs(n, 0.0);
    double w = alpha;
    int remaining = total_time;
    for (int i = 0; i < k; ++i) {
        remaining -= tr.times[i];
        const auto pushed = advance(tr.nus[i], remaining);
        for (std::size_t s = 0; s < n; ++s) rhs[s] += w * pushed[s];
        w *= (1.0 - alpha);
    }
    // w is now alpha (1-alpha)^k; the final remainder enters with (1-alpha)^k.
    const double wk = std::pow(1.0 - alpha, k);
    for (std::size_t s = 0; s < n; ++s) rhs[s] += wk * tr.mus.back()[s];

    for (std::size_t s = 0; s < n; ++s)
        tr.reconstruction_error = std::max(tr.reconstruction_error, std::abs(lhs[s] - rhs[s]));

    tr.stop_lhs = 2.0 * wk * f_budget;
    tr.stop_rule_ok = tr.stop_lhs < eps_stop;
    return tr;
}

}  // namespace ergo::chain
