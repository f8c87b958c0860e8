#pragma once

#include "sde/time_grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ergo::sde {

// Functional records along one path, sampled every `record_every` steps
// (index 0 is the initial state). States are kept only when requested.
struct Trajectory {
    TimeGrid grid;
    std::size_t record_every = 1;
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> records;  // [output index][functional]
    std::vector<std::vector<double>> states;   // optional, same indexing

    std::size_t outputs() const { return times.size(); }
    // Column of one recorded functional.
    std::vector<double> series(std::size_t functional) const;
};

struct CoupledTrajectory {
    TimeGrid grid;
    std::size_t record_every = 1;
    std::vector<double> times;
    std::vector<std::string> names;            // pair functionals + "G"
    std::vector<std::vector<double>> records;
    std::vector<double> series(std::size_t functional) const;
};

// First output index whose recorded functional exceeds the threshold;
// nullopt means "never".
std::optional<std::size_t> first_exit_index(const std::vector<double>& series,
                                            double threshold);

struct BlowupError : std::runtime_error {
    std::size_t step;
    explicit BlowupError(std::size_t step_)
        : std::runtime_error("numerical blow-up at step " + std::to_string(step_)),
          step(step_) {}
};

}  // namespace ergo::sde
