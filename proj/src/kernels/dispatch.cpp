#include "kernels/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ergo::kern {
namespace {

bool cpu_has_avx2() {
#if defined(ERGO_BUILD_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa pick_isa() {
    const char* env = std::getenv("ERGOVERIFY_KERNEL");
    std::string want = env ? env : "auto";
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2") {
        if (!isa_available(Isa::avx2))
            throw std::runtime_error("ERGOVERIFY_KERNEL=avx2 but AVX2 is unavailable");
        return Isa::avx2;
    }
    if (want == "neon") {
        if (!isa_available(Isa::neon))
            throw std::runtime_error("ERGOVERIFY_KERNEL=neon but NEON is unavailable");
        return Isa::neon;
    }
#if defined(ERGO_BUILD_NEON)
    return Isa::neon;
#else
    return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
#endif
}

}  // namespace

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
            return cpu_has_avx2();
        case Isa::neon:
#if defined(ERGO_BUILD_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const Ops& ops_for(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return scalar_ops;
        case Isa::avx2:
#if defined(ERGO_BUILD_AVX2)
            if (cpu_has_avx2()) return avx2_ops;
#endif
            throw std::runtime_error("AVX2 kernels not available in this build/CPU");
        case Isa::neon:
#if defined(ERGO_BUILD_NEON)
            return neon_ops;
#else
            throw std::runtime_error("NEON kernels not available in this build");
#endif
    }
    throw std::runtime_error("unknown ISA");
}

Isa active_isa() {
    static const Isa isa = pick_isa();
    return isa;
}

const Ops& ops() { return ops_for(active_isa()); }

std::string active_name() { return ops().name; }

void vecmat(const double* x, const double* P, double* y, std::size_t n) {
    const Ops& k = ops();
    for (std::size_t j = 0; j < n; ++j) y[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] != 0.0) k.axpy(x[i], P + i * n, y, n);
}

}  // namespace ergo::kern
