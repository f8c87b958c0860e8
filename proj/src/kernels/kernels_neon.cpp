// NEON kernels (arm64). float64x2_t is 2-wide; the convective product has no
// gather on NEON, so it reuses the scalar segment loop.

#include "kernels/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace ergo::kern {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sumsq_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double wsumsq_neon(const double* w, const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, vmulq_f64(vld1q_f64(w + i), v), v);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += w[i] * x[i] * x[i];
    return s;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
    const float64x2_t av = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void mul_neon(const double* w, double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(x + i, vmulq_f64(vld1q_f64(w + i), vld1q_f64(x + i)));
    for (; i < n; ++i) x[i] *= w[i];
}

double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i))));
    double m = vmaxvq_f64(acc);
    for (; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void conv2d_neon(const ConvTable& t, const double* u, const double* v,
                 double* out) {
    scalar_ops.conv2d(t, u, v, out);
}

}  // namespace

const Ops neon_ops = {
    "neon",    dot_neon, sumsq_neon,        wsumsq_neon,
    axpy_neon, mul_neon, max_abs_diff_neon, conv2d_neon,
};

}  // namespace ergo::kern
