#include "chain/finite_chain.hpp"

#include "core/philox.hpp"
#include "kernels/kernels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ergo::chain {
namespace {

constexpr double kRowTol = 1e-12;

std::vector<double> pairwise_euclidean(const std::vector<std::vector<double>>& coords) {
    const std::size_t n = coords.size();
    std::vector<double> m(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t c = 0; c < coords[i].size(); ++c) {
                const double d = coords[i][c] - coords[j][c];
                s += d * d;
            }
            m[i * n + j] = std::sqrt(s);
        }
    return m;
}

void check_metric(const std::vector<double>& m, std::size_t n, const char* name) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i * n + j] != m[j * n + i])
                throw std::invalid_argument(std::string(name) + ": not symmetric");
            if ((i == j) != (m[i * n + j] == 0.0))
                throw std::invalid_argument(std::string(name) +
                                            ": zero iff same state violated");
        }
}

// Iterative Tarjan SCC (explicit stack; chains can have ~10^3 states).
std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj, int& nscc) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;
    nscc = 0;
    struct Frame {
        int v;
        std::size_t child;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.child < adj[f.v].size()) {
                const int w = adj[f.v][f.child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                const int v = f.v;
                call.pop_back();
                if (!call.empty())
                    low[call.back().v] = std::min(low[call.back().v], low[v]);
                if (low[v] == index[v]) {
                    while (true) {
                        const int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = nscc;
                        if (w == v) break;
                    }
                    ++nscc;
                }
            }
        }
    }
    return comp;
}

}  // namespace

FiniteChain::FiniteChain(std::vector<std::vector<double>> coords, std::vector<double> P)
    : n_(coords.size()), coords_(std::move(coords)), P_(std::move(P)) {
    if (n_ == 0) throw std::invalid_argument("FiniteChain: empty state set");
    if (P_.size() != n_ * n_) throw std::invalid_argument("FiniteChain: P is not n x n");
    for (std::size_t i = 0; i < n_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (P_[i * n_ + j] < 0.0)
                throw std::invalid_argument("FiniteChain: negative transition entry");
            row += P_[i * n_ + j];
        }
        if (std::abs(row - 1.0) > kRowTol)
            throw std::invalid_argument("FiniteChain: row " + std::to_string(i) +
                                        " sums to " + std::to_string(row));
    }
    rho_ = pairwise_euclidean(coords_);
    check_metric(rho_, n_, "rho");
    d_ = rho_;
}

void FiniteChain::set_d_metric(std::vector<double> d) {
    if (d.size() != n_ * n_) throw std::invalid_argument("d metric: wrong size");
    check_metric(d, n_, "d");
    d_ = std::move(d);
}

std::vector<std::size_t> FiniteChain::ball(std::size_t z, double eps, bool use_d) const {
    std::vector<std::size_t> ids;
    for (std::size_t j = 0; j < n_; ++j) {
        const double dist = use_d ? dmet(z, j) : rho(z, j);
        if (dist < eps) ids.push_back(j);
    }
    return ids;
}

const ChainStructure& FiniteChain::structure() const {
    if (structure_valid_) return structure_;
    const double tol = 0.0;  // any positive probability is an edge
    std::vector<std::vector<int>> adj(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (P_[i * n_ + j] > tol) adj[i].push_back(static_cast<int>(j));

    int nscc = 0;
    structure_.class_id = tarjan_scc(adj, nscc);
    structure_.classes.assign(nscc, {});
    for (std::size_t i = 0; i < n_; ++i)
        structure_.classes[structure_.class_id[i]].push_back(static_cast<int>(i));

    structure_.closed.assign(nscc, true);
    for (std::size_t i = 0; i < n_; ++i)
        for (int j : adj[i])
            if (structure_.class_id[i] != structure_.class_id[j])
                structure_.closed[structure_.class_id[i]] = false;

    // Period per class: gcd over internal edges of level(u) + 1 - level(v)
    // from a BFS labeling inside the class.
    structure_.period.assign(nscc, 1);
    for (int c = 0; c < nscc; ++c) {
        const auto& members = structure_.classes[c];
        if (members.size() == 1) {
            structure_.period[c] = 1;
            continue;
        }
        std::vector<int> level(n_, -1);
        std::vector<int> queue{members[0]};
        level[members[0]] = 0;
        int g = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : adj[u]) {
                if (structure_.class_id[v] != c) continue;
                if (level[v] == -1) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                } else {
                    g = std::gcd(g, std::abs(level[u] + 1 - level[v]));
                }
            }
        }
        structure_.period[c] = g == 0 ? 1 : g;
    }
    structure_valid_ = true;
    return structure_;
}

void apply_to_function(const FiniteChain& c, const std::vector<double>& v,
                       std::vector<double>& out) {
    const std::size_t n = c.size();
    out.assign(n, 0.0);
    const auto& P = c.matrix();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = kern::ops().dot(P.data() + i * n, v.data(), n);
}

void apply_to_measure(const FiniteChain& c, const std::vector<double>& mu,
                      std::vector<double>& out) {
    const std::size_t n = c.size();
    out.assign(n, 0.0);
    kern::vecmat(mu.data(), c.matrix().data(), out.data(), n);
}

nlohmann::json FiniteChain::to_json() const {
    nlohmann::json j;
    j["states"] = coords_;
    j["metric"] = "euclidean";
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < n_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t k = 0; k < n_; ++k) row.push_back(P_[i * n_ + k]);
        rows.push_back(std::move(row));
    }
    j["P"] = std::move(rows);
    return j;
}

FiniteChain FiniteChain::from_json(const nlohmann::json& j) {
    std::vector<std::vector<double>> coords =
        j.at("states").get<std::vector<std::vector<double>>>();
    const auto& rows = j.at("P");
    const std::size_t n = coords.size();
    std::vector<double> P(n * n, 0.0);
    if (rows.size() != n) throw std::runtime_error("chain json: P row count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw std::runtime_error("chain json: P column count mismatch");
        for (std::size_t k = 0; k < n; ++k) P[i * n + k] = rows[i][k].get<double>();
    }
    FiniteChain chain(std::move(coords), std::move(P));
    if (j.contains("metric") && j.at("metric").is_array()) {
        const auto& m = j.at("metric");
        std::vector<double> d(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) d[i * n + k] = m[i][k].get<double>();
        chain.set_d_metric(std::move(d));
    }
    return chain;
}

FiniteChain make_identity_chain(int n) {
    std::vector<std::vector<double>> coords;
    std::vector<double> P(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        coords.push_back({static_cast<double>(i)});
        P[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    return FiniteChain(std::move(coords), std::move(P));
}

FiniteChain make_cycle_chain(int n) {
    std::vector<std::vector<double>> coords;
    std::vector<double> P(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        coords.push_back({static_cast<double>(i)});
        P[static_cast<std::size_t>(i) * n + (i + 1) % n] = 1.0;
    }
    return FiniteChain(std::move(coords), std::move(P));
}

FiniteChain make_positive_random_chain(int n, std::uint64_t seed) {
    return make_random_chain(n, seed, 0.0);
}

FiniteChain make_two_absorbing_chain() {
    // 0 and 3 absorbing; 1 and 2 transient feeding both.
    std::vector<std::vector<double>> coords{{0.0}, {1.0}, {2.0}, {3.0}};
    std::vector<double> P{
        1.0, 0.0, 0.0, 0.0,
        0.4, 0.2, 0.2, 0.2,
        0.2, 0.2, 0.2, 0.4,
        0.0, 0.0, 0.0, 1.0,
    };
    return FiniteChain(std::move(coords), std::move(P));
}

FiniteChain make_random_chain(int n, std::uint64_t seed, double sparsity) {
    std::vector<std::vector<double>> coords;
    coords.reserve(n);
    for (int i = 0; i < n; ++i) coords.push_back({static_cast<double>(i)});
    std::vector<double> P(static_cast<std::size_t>(n) * n, 0.0);
    std::uint64_t ctr = 0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            const auto u = rng::uniform2(seed, 1000 + i, ctr++);
            double w = (sparsity > 0.0 && u[1] < sparsity) ? 0.0 : u[0];
            P[static_cast<std::size_t>(i) * n + j] = w;
            row += w;
        }
        if (row == 0.0) {
            // sparsified everything away; keep the row valid with a self-loop
            P[static_cast<std::size_t>(i) * n + i] = 1.0;
            row = 1.0;
        }
        for (int j = 0; j < n; ++j) P[static_cast<std::size_t>(i) * n + j] /= row;
    }
    return FiniteChain(std::move(coords), std::move(P));
}

FiniteChain make_birth_death_chain(int n, double p_up, double p_down) {
    if (p_up < 0 || p_down < 0 || p_up + p_down > 1.0)
        throw std::invalid_argument("birth-death: need p_up + p_down <= 1");
    std::vector<std::vector<double>> coords;
    std::vector<double> P(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        coords.push_back({static_cast<double>(i)});
        double stay = 1.0 - p_up - p_down;
        double up = p_up, down = p_down;
        if (i == 0) {
            stay += down;
            down = 0.0;
        }
        if (i == n - 1) {
            stay += up;
            up = 0.0;
        }
        if (i > 0) P[static_cast<std::size_t>(i) * n + (i - 1)] = down;
        if (i < n - 1) P[static_cast<std::size_t>(i) * n + (i + 1)] = up;
        P[static_cast<std::size_t>(i) * n + i] = stay;
    }
    return FiniteChain(std::move(coords), std::move(P));
}

}  // namespace ergo::chain
