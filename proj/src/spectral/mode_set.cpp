#include "spectral/mode_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ergo::spectral {

std::shared_ptr<const ModeSet> ModeSet::torus(int dim, int cutoff) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("ModeSet: dim must be 1 or 2");
    if (cutoff < 1) throw std::invalid_argument("ModeSet: cutoff must be >= 1");
    auto ms = std::make_shared<ModeSet>();
    ms->dim_ = dim;
    ms->cutoff_ = cutoff;
    const int lo2 = (dim == 2) ? -cutoff : 0;
    const int hi2 = (dim == 2) ? cutoff : 0;
    for (int k1 = -cutoff; k1 <= cutoff; ++k1)
        for (int k2 = lo2; k2 <= hi2; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            ms->modes_.push_back({k1, k2});
        }
    std::sort(ms->modes_.begin(), ms->modes_.end(),
              [](const std::array<int, 2>& a, const std::array<int, 2>& b) {
                  const int a2 = a[0] * a[0] + a[1] * a[1];
                  const int b2 = b[0] * b[0] + b[1] * b[1];
                  if (a2 != b2) return a2 < b2;
                  if (a[0] != b[0]) return a[0] < b[0];
                  return a[1] < b[1];
              });
    ms->k2_.resize(ms->modes_.size());
    ms->sorted_k2_.resize(ms->modes_.size());
    for (std::size_t i = 0; i < ms->modes_.size(); ++i) {
        const auto& k = ms->modes_[i];
        ms->k2_[i] = static_cast<double>(k[0] * k[0] + k[1] * k[1]);
        ms->sorted_k2_[i] = ms->k2_[i];
        ms->index_[{k[0], k[1]}] = i;
    }
    ms->conj_.resize(ms->modes_.size());
    for (std::size_t i = 0; i < ms->modes_.size(); ++i) {
        const auto& k = ms->modes_[i];
        ms->conj_[i] = ms->index_.at({-k[0], -k[1]});
    }
    return ms;
}

std::int64_t ModeSet::index_of(int k1, int k2) const {
    auto it = index_.find({k1, k2});
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

bool ModeSet::is_half(std::size_t i) const {
    const auto& k = modes_[i];
    return k[0] > 0 || (k[0] == 0 && k[1] > 0);
}

double ModeSet::eigenvalue_level(int N, double p) const {
    if (N < 1) throw std::out_of_range("eigenvalue level N must be >= 1");
    if (static_cast<std::size_t>(N) > modes_.size())
        throw std::out_of_range("projection rank beyond truncation");
    if (p == 2.0) return sorted_k2_[static_cast<std::size_t>(N - 1)];
    std::vector<double> vals(modes_.size());
    for (std::size_t i = 0; i < modes_.size(); ++i)
        vals[i] = std::pow(k2_[i], p / 2.0);
    std::sort(vals.begin(), vals.end());
    return vals[static_cast<std::size_t>(N - 1)];
}

nlohmann::json ModeSet::to_json() const {
    return {{"dim", dim_}, {"cutoff", cutoff_}, {"ordering", "lex-|k|2"}};
}

std::shared_ptr<const ModeSet> ModeSet::from_json(const nlohmann::json& j) {
    if (j.value("ordering", "lex-|k|2") != std::string("lex-|k|2"))
        throw std::runtime_error("ModeSet: unsupported ordering");
    return torus(j.at("dim").get<int>(), j.at("cutoff").get<int>());
}

}  // namespace ergo::spectral
