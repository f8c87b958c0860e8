#include "chain/chain_ops.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ergo::chain {
namespace {

// Closed classes reachable from x (indices into structure().classes).
std::vector<int> reachable_closed_classes(const FiniteChain& c, std::size_t x) {
    const std::size_t n = c.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue{x};
    seen[x] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t u = queue[qi];
        for (std::size_t v = 0; v < n; ++v)
            if (c.p(u, v) > 0.0 && !seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
    }
    const auto& st = c.structure();
    std::vector<int> out;
    for (std::size_t cls = 0; cls < st.classes.size(); ++cls) {
        if (!st.closed[cls]) continue;
        for (int m : st.classes[cls])
            if (seen[static_cast<std::size_t>(m)]) {
                out.push_back(static_cast<int>(cls));
                break;
            }
    }
    return out;
}

}  // namespace

std::vector<std::vector<double>> invariant_measures(const FiniteChain& c) {
    const auto& st = c.structure();
    const std::size_t n = c.size();
    std::vector<std::vector<double>> out;
    for (std::size_t cls = 0; cls < st.classes.size(); ++cls) {
        if (!st.closed[cls]) continue;
        const auto& members = st.classes[cls];
        const int m = static_cast<int>(members.size());
        // Solve pi (P|class - I) = 0 with sum(pi) = 1: transpose and replace
        // the last equation by the normalization row.
        Eigen::MatrixXd A(m, m);
        for (int r = 0; r < m; ++r)
            for (int cidx = 0; cidx < m; ++cidx)
                A(r, cidx) = c.p(static_cast<std::size_t>(members[cidx]),
                                 static_cast<std::size_t>(members[r])) -
                             (r == cidx ? 1.0 : 0.0);
        Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
        for (int cidx = 0; cidx < m; ++cidx) A(m - 1, cidx) = 1.0;
        b(m - 1) = 1.0;
        Eigen::VectorXd pi = A.partialPivLu().solve(b);
        std::vector<double> mu(n, 0.0);
        for (int cidx = 0; cidx < m; ++cidx)
            mu[static_cast<std::size_t>(members[cidx])] = pi(cidx);
        out.push_back(std::move(mu));
    }
    return out;
}

std::vector<double> power_iteration_measure(const FiniteChain& c,
                                            const std::vector<int>& cls,
                                            double tol, std::size_t max_iter) {
    const std::size_t n = c.size();
    std::vector<double> mu(n, 0.0), next(n, 0.0);
    for (int m : cls) mu[static_cast<std::size_t>(m)] = 1.0 / static_cast<double>(cls.size());
    for (std::size_t it = 0; it < max_iter; ++it) {
        apply_to_measure(c, mu, next);
        double diff = 0.0;
        for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - mu[i]));
        mu.swap(next);
        if (diff < tol) return mu;
    }
    throw std::runtime_error("power iteration did not converge");
}

double liminf_hitting(const FiniteChain& c, std::size_t x,
                      const std::vector<std::size_t>& ball,
                      std::size_t max_iter, double tol) {
    if (ball.empty()) throw std::invalid_argument("liminf_hitting: empty ball");
    const std::size_t n = c.size();
    const auto& st = c.structure();
    const auto closed = reachable_closed_classes(c, x);
    std::size_t d = 1;
    for (int cls : closed)
        d = std::lcm(d, static_cast<std::size_t>(st.period[cls]));

    std::vector<double> mu(n, 0.0), next(n, 0.0);
    mu[x] = 1.0;
    std::vector<double> last(d, -1.0);   // previous ball mass per residue
    std::vector<int> settled(d, 0);      // consecutive converged rounds
    std::vector<double> limit(d, -1.0);

    auto ball_mass = [&](const std::vector<double>& m) {
        double s = 0.0;
        for (std::size_t b : ball) s += m[b];
        return s;
    };

    // t = 0 belongs to residue 0.
    std::size_t t = 0;
    double mass = ball_mass(mu);
    last[0] = mass;
    const int needed = 3;  // consecutive stable rounds per residue
    while (t < max_iter) {
        apply_to_measure(c, mu, next);
        mu.swap(next);
        ++t;
        const std::size_t r = t % d;
        mass = ball_mass(mu);
        if (last[r] >= 0.0 && std::abs(mass - last[r]) < tol) {
            if (++settled[r] >= needed) limit[r] = mass;
        } else {
            settled[r] = 0;
            limit[r] = -1.0;
        }
        last[r] = mass;
        bool all = true;
        for (std::size_t r2 = 0; r2 < d; ++r2)
            if (limit[r2] < 0.0) {
                all = false;
                break;
            }
        if (all) break;
    }
    for (std::size_t r = 0; r < d; ++r)
        if (limit[r] < 0.0)
            throw std::runtime_error("liminf_hitting: residue " + std::to_string(r) +
                                     " did not converge within iteration cap");
    return *std::min_element(limit.begin(), limit.end());
}

ConditionC condition_C_exact(const FiniteChain& c, std::size_t z, double eps,
                             bool use_d) {
    const auto ball = c.ball(z, eps, use_d);
    if (ball.empty()) throw std::invalid_argument("condition_C: empty ball");
    ConditionC out;
    out.value = 2.0;  // above any probability
    for (std::size_t x = 0; x < c.size(); ++x) {
        const double v = liminf_hitting(c, x, ball);
        if (v < out.value) {
            out.value = v;
            out.witness = x;
        }
    }
    return out;
}

StabilityVerdict asymptotic_stability_exact(const FiniteChain& c) {
    const auto& st = c.structure();
    int closed_count = 0;
    int the_class = -1;
    for (std::size_t cls = 0; cls < st.classes.size(); ++cls)
        if (st.closed[cls]) {
            ++closed_count;
            the_class = static_cast<int>(cls);
        }
    StabilityVerdict v;
    if (closed_count != 1) return v;
    if (st.period[the_class] != 1) return v;
    v.stable = true;
    v.mu = power_iteration_measure(c, st.classes[the_class]);
    return v;
}

Theorem4Row theorem4_row(const FiniteChain& c) {
    Theorem4Row row;
    row.stable = asymptotic_stability_exact(c).stable;
    // Point balls are the hardest epsilon on a finite metric space: take the
    // smallest positive rho distance around each candidate z.
    for (std::size_t z = 0; z < c.size(); ++z) {
        double nearest = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < c.size(); ++j)
            if (j != z) nearest = std::min(nearest, c.rho(z, j));
        const double eps = std::isfinite(nearest) ? nearest * 0.5 : 0.5;
        const auto res = condition_C_exact(c, z, eps);
        if (res.value > row.best_value) {
            row.best_value = res.value;
            row.best_z = z;
        }
        if (res.value > 0.0) {
            row.lower_bound = true;
            break;
        }
    }
    return row;
}

Theorem4Report theorem4_consistency(const std::vector<FiniteChain>& battery) {
    Theorem4Report rep;
    rep.chains = battery.size();
    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto row = theorem4_row(battery[i]);
        if (row.stable != row.lower_bound) {
            ++rep.violations;
            rep.violating_indices.push_back(i);
        }
    }
    return rep;
}

}  // namespace ergo::chain
