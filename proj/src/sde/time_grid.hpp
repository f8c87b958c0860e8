#pragma once

#include <cstddef>
#include <stdexcept>

namespace ergo::sde {

struct TimeGrid {
    double t0 = 0.0;
    double dt = 1e-3;
    std::size_t steps = 0;

    TimeGrid() = default;
    TimeGrid(double t0_, double dt_, std::size_t steps_) : t0(t0_), dt(dt_), steps(steps_) {
        if (dt <= 0.0) throw std::invalid_argument("TimeGrid: dt must be positive");
    }
    static TimeGrid over(double t0, double t1, double dt) {
        if (t1 <= t0) throw std::invalid_argument("TimeGrid: t1 must exceed t0");
        const auto steps = static_cast<std::size_t>((t1 - t0) / dt + 0.5);
        return TimeGrid(t0, dt, steps == 0 ? 1 : steps);
    }
    double t1() const { return t0 + dt * static_cast<double>(steps); }
    double time(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
};

}  // namespace ergo::sde
