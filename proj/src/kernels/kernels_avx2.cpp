// AVX2/FMA kernels. This TU is compiled with -mavx2 -mfma and must only be
// entered after the dispatcher has confirmed cpuid support.

#include "kernels/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace ergo::kern {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_pd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sumsq_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double wsumsq_avx2(const double* w, const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(w + i), v), v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * x[i] * x[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void mul_avx2(const double* w, double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(w + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= w[i];
}

double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, d));
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    lo = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_pd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Four table entries per iteration, gathered loads, four complex accumulators.
// Entries within a segment share one output slot, so stores happen once per
// segment after a horizontal reduction.
void conv2d_avx2(const ConvTable& t, const double* u, const double* v,
                 double* out) {
    const std::size_t nseg = t.segments();
    for (std::size_t s = 0; s < nseg; ++s) {
        const std::int32_t e0 = t.seg_start[s];
        const std::int32_t e1 = t.seg_start[s + 1];
        __m256d xr = _mm256_setzero_pd(), xi = _mm256_setzero_pd();
        __m256d yr = _mm256_setzero_pd(), yi = _mm256_setzero_pd();
        std::int32_t e = e0;
        for (; e + 4 <= e1; e += 4) {
            const __m128i pidx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(t.p_base.data() + e));
            const __m128i qidx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(t.q_base.data() + e));
            const __m256d qx = _mm256_loadu_pd(t.qx.data() + e);
            const __m256d qy = _mm256_loadu_pd(t.qy.data() + e);

            const __m256d upxr = _mm256_i32gather_pd(u + 0, pidx, 8);
            const __m256d upxi = _mm256_i32gather_pd(u + 1, pidx, 8);
            const __m256d upyr = _mm256_i32gather_pd(u + 2, pidx, 8);
            const __m256d upyi = _mm256_i32gather_pd(u + 3, pidx, 8);

            // f = i * (u(p).q): fr = -(upxi*qx + upyi*qy), fi = upxr*qx + upyr*qy
            const __m256d si = _mm256_fmadd_pd(upxi, qx, _mm256_mul_pd(upyi, qy));
            const __m256d sr = _mm256_fmadd_pd(upxr, qx, _mm256_mul_pd(upyr, qy));
            const __m256d fr = _mm256_sub_pd(_mm256_setzero_pd(), si);
            const __m256d fi = sr;

            const __m256d vqxr = _mm256_i32gather_pd(v + 0, qidx, 8);
            const __m256d vqxi = _mm256_i32gather_pd(v + 1, qidx, 8);
            const __m256d vqyr = _mm256_i32gather_pd(v + 2, qidx, 8);
            const __m256d vqyi = _mm256_i32gather_pd(v + 3, qidx, 8);

            xr = _mm256_fmadd_pd(fr, vqxr, _mm256_fnmadd_pd(fi, vqxi, xr));
            xi = _mm256_fmadd_pd(fr, vqxi, _mm256_fmadd_pd(fi, vqxr, xi));
            yr = _mm256_fmadd_pd(fr, vqyr, _mm256_fnmadd_pd(fi, vqyi, yr));
            yi = _mm256_fmadd_pd(fr, vqyi, _mm256_fmadd_pd(fi, vqyr, yi));
        }
        double axr = hsum(xr), axi = hsum(xi), ayr = hsum(yr), ayi = hsum(yi);
        for (; e < e1; ++e) {
            const double* up = u + t.p_base[e];
            const double* vq = v + t.q_base[e];
            const double sr = up[0] * t.qx[e] + up[2] * t.qy[e];
            const double si = up[1] * t.qx[e] + up[3] * t.qy[e];
            const double fr = -si, fi = sr;
            axr += fr * vq[0] - fi * vq[1];
            axi += fr * vq[1] + fi * vq[0];
            ayr += fr * vq[2] - fi * vq[3];
            ayi += fr * vq[3] + fi * vq[2];
        }
        double* o = out + t.out_base[s];
        o[0] += axr;
        o[1] += axi;
        o[2] += ayr;
        o[3] += ayi;
    }
}

}  // namespace

const Ops avx2_ops = {
    "avx2",    dot_avx2, sumsq_avx2,        wsumsq_avx2,
    axpy_avx2, mul_avx2, max_abs_diff_avx2, conv2d_avx2,
};

}  // namespace ergo::kern
