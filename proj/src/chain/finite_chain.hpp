#pragma once
// Finite metrized Markov chains: the exact oracle side of the workbench.
// States carry coordinates and two metrics (rho, and an alternative d that may
// be topologically coarser); P is row-stochastic. Communicating classes and
// periods are computed once and cached.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ergo::chain {

struct ChainStructure {
    std::vector<int> class_id;            // per state
    std::vector<std::vector<int>> classes;
    std::vector<bool> closed;             // per class
    std::vector<int> period;              // per class (1 for singleton transients)
};

class FiniteChain {
   public:
    FiniteChain(std::vector<std::vector<double>> coords, std::vector<double> P);

    std::size_t size() const { return n_; }
    double p(std::size_t i, std::size_t j) const { return P_[i * n_ + j]; }
    const std::vector<double>& matrix() const { return P_; }
    const std::vector<std::vector<double>>& coords() const { return coords_; }

    double rho(std::size_t i, std::size_t j) const { return rho_[i * n_ + j]; }
    double dmet(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set_d_metric(std::vector<double> d);

    // States within metric distance < eps of z.
    std::vector<std::size_t> ball(std::size_t z, double eps, bool use_d = false) const;

    const ChainStructure& structure() const;

    nlohmann::json to_json() const;
    static FiniteChain from_json(const nlohmann::json& j);

   private:
    std::size_t n_ = 0;
    std::vector<std::vector<double>> coords_;
    std::vector<double> P_;
    std::vector<double> rho_;
    std::vector<double> d_;
    mutable bool structure_valid_ = false;
    mutable ChainStructure structure_;
};

// y = P^T-style application: out(i) = sum_j P(i,j) v(j)  (acts on functions).
void apply_to_function(const FiniteChain& c, const std::vector<double>& v,
                       std::vector<double>& out);
// out(j) = sum_i mu(i) P(i,j)  (acts on measures).
void apply_to_measure(const FiniteChain& c, const std::vector<double>& mu,
                      std::vector<double>& out);

// Canonical battery members.
FiniteChain make_identity_chain(int n);
FiniteChain make_cycle_chain(int n);
FiniteChain make_positive_random_chain(int n, std::uint64_t seed);
FiniteChain make_two_absorbing_chain();
// Dense random row-stochastic chain; sparsity in [0,1) zeroes entries before
// normalization (rows are kept valid).
FiniteChain make_random_chain(int n, std::uint64_t seed, double sparsity = 0.0);
// Reflecting birth-death chain on {0..n-1} with given up/down probabilities.
FiniteChain make_birth_death_chain(int n, double p_up, double p_down);

}  // namespace ergo::chain
