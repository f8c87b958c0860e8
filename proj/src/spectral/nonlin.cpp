#include "spectral/nonlin.hpp"

#include "core/philox.hpp"

#include <cmath>
#include <stdexcept>

namespace ergo::spectral {

kern::ConvTable build_conv_table(const ModeSet& ms) {
    if (ms.dim() != 2)
        throw std::invalid_argument("conv table: 2D mode sets only");
    kern::ConvTable t;
    const std::size_t n = ms.size();
    t.seg_start.push_back(0);
    for (std::size_t ki = 0; ki < n; ++ki) {
        const auto& k = ms.mode(ki);
        for (std::size_t pi = 0; pi < n; ++pi) {
            const auto& p = ms.mode(pi);
            const int q1 = k[0] - p[0];
            const int q2 = k[1] - p[1];
            const std::int64_t qi = ms.index_of(q1, q2);
            if (qi < 0) continue;
            t.p_base.push_back(static_cast<std::int32_t>(pi * 4));
            t.q_base.push_back(static_cast<std::int32_t>(qi * 4));
            t.qx.push_back(static_cast<double>(q1));
            t.qy.push_back(static_cast<double>(q2));
        }
        t.out_base.push_back(static_cast<std::int32_t>(ki * 4));
        t.seg_start.push_back(static_cast<std::int32_t>(t.p_base.size()));
    }
    return t;
}

SpectralState convective(const SpectralState& a, const SpectralState& b,
                         const kern::ConvTable& table) {
    if (a.ncomp != 2 || b.ncomp != 2)
        throw std::invalid_argument("convective: 2-component fields only");
    SpectralState out(a.modes, 2, a.real_field && b.real_field, false);
    kern::ops().conv2d(table, a.a.data(), b.a.data(), out.a.data());
    return out;
}

SpectralState ns_nonlinearity(const SpectralState& u, const kern::ConvTable& table) {
    if (divergence_defect(u) > 1e-9)
        throw std::invalid_argument("ns_nonlinearity: input is not divergence-free");
    SpectralState w = convective(u, u, table);
    for (double& x : w.a) x = -x;
    leray_project(w);
    w.divfree = true;
    return w;
}

SpectralState ns_nonlinearity(const SpectralState& u) {
    const auto table = build_conv_table(*u.modes);
    return ns_nonlinearity(u, table);
}

double inner(const SpectralState& x, const SpectralState& y) {
    if (x.a.size() != y.a.size())
        throw std::invalid_argument("inner: layout mismatch");
    return kern::ops().dot(x.a.data(), y.a.data(), x.a.size());
}

SpectralState lagrangian_nonlinearity(const SpectralState& u) {
    const auto u0 = point_value(u);
    SpectralState out(u.modes, u.ncomp, u.real_field, u.divfree);
    for (std::size_t i = 0; i < u.modes->size(); ++i) {
        const auto& k = u.modes->mode(i);
        double omega = u0[0] * k[0];
        if (u.ncomp > 1) omega += u0[1] * k[1];
        for (int c = 0; c < u.ncomp; ++c) {
            const auto z = u.coeff(i, c);
            out.set_coeff(i, c, std::complex<double>(-omega * z.imag(), omega * z.real()));
        }
    }
    return out;
}

SpectralState ev_nonlinearity(const SpectralState& u, double gamma,
                              const kern::ConvTable& table) {
    if (divergence_defect(u) > 1e-9)
        throw std::invalid_argument("ev_nonlinearity: input is not divergence-free");
    const SpectralState ug = fractional_laplacian(u, -gamma);
    SpectralState w = convective(ug, ug, table);
    for (double& x : w.a) x = -x;
    leray_project(w);
    w.divfree = true;
    return w;
}

SpectralState random_field(std::shared_ptr<const ModeSet> ms, int ncomp,
                           std::uint64_t seed, std::uint64_t id) {
    SpectralState u(ms, ncomp, true, false);
    std::uint64_t ctr = 0;
    for (std::size_t i = 0; i < ms->size(); ++i) {
        if (!ms->is_half(i)) continue;
        const std::size_t j = ms->conj_index(i);
        for (int c = 0; c < ncomp; ++c) {
            const auto z = rng::gaussian2(seed, id, ctr++);
            const std::complex<double> val(z[0] * M_SQRT1_2, z[1] * M_SQRT1_2);
            u.set_coeff(i, c, val);
            u.set_coeff(j, c, std::conj(val));
        }
    }
    return u;
}

SpectralState random_divfree_field(std::shared_ptr<const ModeSet> ms,
                                   std::uint64_t seed, std::uint64_t id) {
    if (ms->dim() != 2)
        throw std::invalid_argument("random_divfree_field: 2D mode sets only");
    SpectralState u(ms, 2, true, true);
    std::uint64_t ctr = 0;
    for (std::size_t i = 0; i < ms->size(); ++i) {
        if (!ms->is_half(i)) continue;
        const std::size_t j = ms->conj_index(i);
        const auto& k = ms->mode(i);
        const double kn = std::sqrt(ms->k2(i));
        const double dx = -k[1] / kn, dy = k[0] / kn;  // unit k-perp
        const auto z = rng::gaussian2(seed, id, ctr++);
        const std::complex<double> amp(z[0] * M_SQRT1_2, z[1] * M_SQRT1_2);
        u.set_coeff(i, 0, amp * dx);
        u.set_coeff(i, 1, amp * dy);
        u.set_coeff(j, 0, std::conj(amp) * dx);
        u.set_coeff(j, 1, std::conj(amp) * dy);
    }
    return u;
}

double calibrate_CD(std::shared_ptr<const ModeSet> ms, int samples,
                    std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("calibrate_CD: samples >= 1");
    const auto table = build_conv_table(*ms);
    double best = -1.0;
    for (int s = 0; s < samples; ++s) {
        const auto u = random_divfree_field(ms, seed, 2 * static_cast<std::uint64_t>(s));
        const auto v = random_divfree_field(ms, seed, 2 * static_cast<std::uint64_t>(s) + 1);
        const double den = sobolev_norm(v, 0.0) * sobolev_norm(v, 1.0) * sobolev_norm(u, 1.0);
        if (den < 1e-300) continue;
        const double num = std::abs(inner(convective(v, u, table), v));
        best = std::max(best, num / den);
    }
    if (best < 0.0) throw std::runtime_error("calibrate_CD: all samples degenerate");
    return std::max(0.1, 1.5 * best);
}

}  // namespace ergo::spectral
