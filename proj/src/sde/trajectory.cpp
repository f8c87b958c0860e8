#include "sde/trajectory.hpp"

namespace ergo::sde {

std::vector<double> Trajectory::series(std::size_t functional) const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.at(functional));
    return out;
}

std::vector<double> CoupledTrajectory::series(std::size_t functional) const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(r.at(functional));
    return out;
}

std::optional<std::size_t> first_exit_index(const std::vector<double>& series,
                                            double threshold) {
    for (std::size_t i = 0; i < series.size(); ++i)
        if (series[i] >= threshold) return i;
    return std::nullopt;
}

}  // namespace ergo::sde
