// Scalar reference kernels. These define the semantics the SIMD variants are
// tested against.

#include "kernels/kernels.hpp"

#include <cmath>

namespace ergo::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sumsq_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double wsumsq_scalar(const double* w, const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * x[i];
    return s;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mul_scalar(const double* w, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= w[i];
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// out(k) += i * (u(p) . q) * v(q), components x,y interleaved re,im.
void conv2d_scalar(const ConvTable& t, const double* u, const double* v,
                   double* out) {
    const std::size_t nseg = t.segments();
    for (std::size_t s = 0; s < nseg; ++s) {
        double xr = 0.0, xi = 0.0, yr = 0.0, yi = 0.0;
        const std::int32_t e0 = t.seg_start[s];
        const std::int32_t e1 = t.seg_start[s + 1];
        for (std::int32_t e = e0; e < e1; ++e) {
            const double* up = u + t.p_base[e];
            const double* vq = v + t.q_base[e];
            const double qx = t.qx[e], qy = t.qy[e];
            // s = u(p).q  (complex scalar), f = i*s
            const double sr = up[0] * qx + up[2] * qy;
            const double si = up[1] * qx + up[3] * qy;
            const double fr = -si, fi = sr;
            xr += fr * vq[0] - fi * vq[1];
            xi += fr * vq[1] + fi * vq[0];
            yr += fr * vq[2] - fi * vq[3];
            yi += fr * vq[3] + fi * vq[2];
        }
        double* o = out + t.out_base[s];
        o[0] += xr;
        o[1] += xi;
        o[2] += yr;
        o[3] += yi;
    }
}

}  // namespace

const Ops scalar_ops = {
    "scalar",     dot_scalar, sumsq_scalar,        wsumsq_scalar,
    axpy_scalar,  mul_scalar, max_abs_diff_scalar, conv2d_scalar,
};

}  // namespace ergo::kern
