#pragma once
// Seeded noise stream: (seed, stream id, step) -> increment vector, with no
// state carried between calls. Distinct stream ids give independent streams;
// the same triple always reproduces the same increments.

#include <cstdint>
#include <vector>

namespace ergo::sde {

struct NoiseStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
    int dim = 1;

    NoiseStream() = default;
    NoiseStream(std::uint64_t seed_, std::uint64_t stream_, int dim_)
        : seed(seed_), stream_id(stream_), dim(dim_) {}

    NoiseStream with_stream(std::uint64_t id) const { return {seed, id, dim}; }

    // Standard Gaussians for one step.
    void gaussians(std::uint64_t step, double* out) const;
    // Brownian increments: Gaussians scaled by sqrt(dt).
    void increments(std::uint64_t step, double sqrt_dt, double* out) const;
};

}  // namespace ergo::sde
