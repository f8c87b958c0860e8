#include "sde/noise_stream.hpp"

#include "core/philox.hpp"

namespace ergo::sde {

void NoiseStream::gaussians(std::uint64_t step, double* out) const {
    rng::fill_gaussians(seed, stream_id, step, out, static_cast<std::size_t>(dim));
}

void NoiseStream::increments(std::uint64_t step, double sqrt_dt, double* out) const {
    gaussians(step, out);
    for (int i = 0; i < dim; ++i) out[i] *= sqrt_dt;
}

}  // namespace ergo::sde
