#include "core/philox.hpp"

#include <cmath>

namespace ergo::rng {
namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;

inline void round_once(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * ctr[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
    const std::uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
    ctr[0] = out0;
    ctr[1] = lo1;
    ctr[2] = out2;
    ctr[3] = lo0;
}

}  // namespace

std::array<std::uint32_t, 4> philox_block(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t index) {
    std::uint32_t ctr[4] = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        static_cast<std::uint32_t>(stream),
        static_cast<std::uint32_t>(stream >> 32),
    };
    std::uint32_t key[2] = {
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
    };
    for (int r = 0; r < 10; ++r) {
        round_once(ctr, key);
        key[0] += kWeylA;
        key[1] += kWeylB;
    }
    return {ctr[0], ctr[1], ctr[2], ctr[3]};
}

std::array<double, 2> uniform2(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t index) {
    const auto b = philox_block(seed, stream, index);
    const std::uint64_t r0 = (static_cast<std::uint64_t>(b[0]) << 32) | b[1];
    const std::uint64_t r1 = (static_cast<std::uint64_t>(b[2]) << 32) | b[3];
    // (0,1]: the +1 keeps log() finite.
    const double u0 = static_cast<double>((r0 >> 11) + 1) * 0x1.0p-53;
    const double u1 = static_cast<double>((r1 >> 11) + 1) * 0x1.0p-53;
    return {u0, u1};
}

std::array<double, 2> gaussian2(std::uint64_t seed, std::uint64_t stream,
                                std::uint64_t index) {
    const auto u = uniform2(seed, stream, index);
    const double r = std::sqrt(-2.0 * std::log(u[0]));
    const double a = 2.0 * M_PI * u[1];
    return {r * std::cos(a), r * std::sin(a)};
}

void fill_gaussians(std::uint64_t seed, std::uint64_t stream, std::uint64_t step,
                    double* out, std::size_t n) {
    const std::uint64_t blocks = (n + 1) / 2;
    for (std::uint64_t j = 0; j < blocks; ++j) {
        const auto z = gaussian2(seed, stream, step * blocks + j);
        out[2 * j] = z[0];
        if (2 * j + 1 < n) out[2 * j + 1] = z[1];
    }
}

}  // namespace ergo::rng
