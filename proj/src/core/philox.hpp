#pragma once
// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
//
// Purely functional: the value at (seed, stream, index) never depends on call
// order, so trajectories are reproducible and parallelizable without shared
// state. One block yields 128 bits, which we turn into two doubles or two
// standard Gaussians (Box-Muller).

#include <array>
#include <cstdint>

namespace ergo::rng {

std::array<std::uint32_t, 4> philox_block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t index);

// Two uniforms in (0,1] from one block (53-bit mantissas).
std::array<double, 2> uniform2(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t index);

// Two independent standard Gaussians from one block.
std::array<double, 2> gaussian2(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index);

// Fills out[0..n) with standard Gaussians addressed by (seed, stream, step).
// Consecutive steps use disjoint counter ranges.
void fill_gaussians(std::uint64_t seed, std::uint64_t stream, std::uint64_t step,
                    double* out, std::size_t n);

}  // namespace ergo::rng
