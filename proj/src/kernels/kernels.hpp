#pragma once
// Data-parallel inner loops used by the spectral and chain code paths.
//
// Every kernel exists as a scalar reference implementation and, where the
// build target supports it, a SIMD variant (AVX2 on x86-64, NEON on arm64).
// The active variant is picked once at runtime from cpuid; the choice can be
// forced with ERGOVERIFY_KERNEL={auto,scalar,avx2,neon}. Scalar and SIMD
// variants are equivalence-tested against each other (summation order differs,
// so agreement is to rounding, not bitwise). Within one process the active
// variant is fixed, which keeps every reduction deterministic across runs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ergo::kern {

// Mode-coupling table for the 2D convective product w(k) += i*(u(p).q)*v(q).
// Entries are grouped by output mode so accumulation never scatters: each
// segment owns one output slot and its entries form a contiguous run.
struct ConvTable {
    // Per entry: element offsets into the flattened complex state (mode*2*ncomp
    // doubles per mode, components interleaved re,im) and the wavevector q.
    std::vector<std::int32_t> p_base;  // offset of u(p), in doubles
    std::vector<std::int32_t> q_base;  // offset of v(q), in doubles
    std::vector<double> qx;
    std::vector<double> qy;
    // Per segment: output element offset and the entry range covering it.
    std::vector<std::int32_t> out_base;
    std::vector<std::int32_t> seg_start;  // size = nseg + 1
    std::size_t entries() const { return p_base.size(); }
    std::size_t segments() const { return out_base.size(); }
};

struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sumsq)(const double* x, std::size_t n);
    // sum_i w[i] * x[i]^2 (weights pre-expanded to per-double length)
    double (*wsumsq)(const double* w, const double* x, std::size_t n);
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    void (*mul)(const double* w, double* x, std::size_t n);  // x[i] *= w[i]
    double (*max_abs_diff)(const double* a, const double* b, std::size_t n);
    // 2-component complex convective product; accumulates into out.
    void (*conv2d)(const ConvTable& t, const double* u, const double* v,
                   double* out);
};

enum class Isa { scalar, avx2, neon };

const Ops& ops();               // active implementation (dispatch on first use)
const Ops& ops_for(Isa isa);    // specific implementation; throws if not built
Isa active_isa();
bool isa_available(Isa isa);
std::string active_name();

// y = x^T P for row-major P (n x n). Built on axpy so it inherits the active
// SIMD variant; used by the chain power iterations.
void vecmat(const double* x, const double* P, double* y, std::size_t n);

extern const Ops scalar_ops;
#if defined(ERGO_BUILD_AVX2)
extern const Ops avx2_ops;
#endif
#if defined(ERGO_BUILD_NEON)
extern const Ops neon_ops;
#endif

}  // namespace ergo::kern
