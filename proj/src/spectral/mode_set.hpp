#pragma once
// Truncated integer-lattice mode set: all k in Z^d \ {0} with |k|_inf <= M,
// enumerated lexicographically on (|k|^2, k1, k2). The zero mode is excluded
// (mean-zero fields) and the enumeration is stable across runs, which pins
// down projections and serialized layouts.

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace ergo::spectral {

class ModeSet {
   public:
    static std::shared_ptr<const ModeSet> torus(int dim, int cutoff);
    static std::shared_ptr<const ModeSet> from_json(const nlohmann::json& j);

    int dim() const { return dim_; }
    int cutoff() const { return cutoff_; }
    std::size_t size() const { return modes_.size(); }
    const std::array<int, 2>& mode(std::size_t i) const { return modes_[i]; }
    double k2(std::size_t i) const { return k2_[i]; }
    std::size_t conj_index(std::size_t i) const { return conj_[i]; }
    // Index of k in the enumeration; -1 if outside the truncation.
    std::int64_t index_of(int k1, int k2) const;
    // True for the canonical half-lattice representative (k1>0, or k1==0 && k2>0).
    bool is_half(std::size_t i) const;

    // N-th (1-based) value of the ascending-with-multiplicity list |k|^p over
    // retained modes. p = 2 is the Laplacian; other p serve fractional
    // operators. Throws if N exceeds the truncation.
    double eigenvalue_level(int N, double p = 2.0) const;
    int levels() const { return static_cast<int>(modes_.size()); }

    nlohmann::json to_json() const;

   private:
    int dim_ = 0;
    int cutoff_ = 0;
    std::vector<std::array<int, 2>> modes_;
    std::vector<double> k2_;
    std::vector<std::size_t> conj_;
    std::vector<double> sorted_k2_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

}  // namespace ergo::spectral
