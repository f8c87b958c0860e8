#include "spectral/state.hpp"

#include "kernels/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace ergo::spectral {

SpectralState::SpectralState(std::shared_ptr<const ModeSet> ms, int ncomp_,
                             bool real_f, bool divfree_)
    : modes(std::move(ms)), ncomp(ncomp_), real_field(real_f), divfree(divfree_) {
    a.assign(modes->size() * static_cast<std::size_t>(ncomp) * 2, 0.0);
}

std::complex<double> SpectralState::coeff(std::size_t mode, int comp) const {
    const std::size_t base = (mode * ncomp + comp) * 2;
    return {a[base], a[base + 1]};
}

void SpectralState::set_coeff(std::size_t mode, int comp, std::complex<double> c) {
    const std::size_t base = (mode * ncomp + comp) * 2;
    a[base] = c.real();
    a[base + 1] = c.imag();
}

void SpectralState::set_zero() { std::fill(a.begin(), a.end(), 0.0); }

std::vector<double> sobolev_weights(const ModeSet& ms, double r, int ncomp) {
    std::vector<double> w(ms.size() * static_cast<std::size_t>(ncomp) * 2);
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const double wi = (r == 0.0) ? 1.0 : std::pow(ms.k2(i), r);
        for (int c = 0; c < ncomp; ++c) {
            w[(i * ncomp + c) * 2] = wi;
            w[(i * ncomp + c) * 2 + 1] = wi;
        }
    }
    return w;
}

double sobolev_norm(const SpectralState& u, double r) {
    if (r == 0.0) return std::sqrt(kern::ops().sumsq(u.a.data(), u.a.size()));
    const auto w = sobolev_weights(*u.modes, r, u.ncomp);
    return std::sqrt(kern::ops().wsumsq(w.data(), u.a.data(), u.a.size()));
}

double reality_defect(const SpectralState& u) {
    double worst = 0.0;
    for (std::size_t i = 0; i < u.modes->size(); ++i) {
        const std::size_t j = u.modes->conj_index(i);
        for (int c = 0; c < u.ncomp; ++c) {
            const auto ci = u.coeff(i, c);
            const auto cj = u.coeff(j, c);
            worst = std::max(worst, std::abs(ci - std::conj(cj)));
        }
    }
    return worst;
}

double divergence_defect(const SpectralState& u) {
    if (u.ncomp != 2) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < u.modes->size(); ++i) {
        const auto& k = u.modes->mode(i);
        const auto d = static_cast<double>(k[0]) * u.coeff(i, 0) +
                       static_cast<double>(k[1]) * u.coeff(i, 1);
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

void leray_project(SpectralState& u) {
    if (u.ncomp != 2)
        throw std::invalid_argument("leray_project: needs a 2-component field");
    for (std::size_t i = 0; i < u.modes->size(); ++i) {
        const auto& k = u.modes->mode(i);
        const double kx = k[0], ky = k[1];
        const auto ux = u.coeff(i, 0);
        const auto uy = u.coeff(i, 1);
        const auto kd = (kx * ux + ky * uy) / u.modes->k2(i);
        u.set_coeff(i, 0, ux - kx * kd);
        u.set_coeff(i, 1, uy - ky * kd);
    }
}

void zero_above(SpectralState& u, double lambda_N) {
    for (std::size_t i = 0; i < u.modes->size(); ++i)
        if (u.modes->k2(i) > lambda_N)
            for (int c = 0; c < u.ncomp; ++c) u.set_coeff(i, c, 0.0);
}

void zero_at_or_below(SpectralState& u, double lambda_N) {
    for (std::size_t i = 0; i < u.modes->size(); ++i)
        if (u.modes->k2(i) <= lambda_N)
            for (int c = 0; c < u.ncomp; ++c) u.set_coeff(i, c, 0.0);
}

SpectralState project_low(const SpectralState& u, int N) {
    const double lam = u.modes->eigenvalue_level(N);
    SpectralState out = u;
    zero_above(out, lam);
    return out;
}

SpectralState project_high(const SpectralState& u, int N) {
    const double lam = u.modes->eigenvalue_level(N);
    SpectralState out = u;
    zero_at_or_below(out, lam);
    return out;
}

SpectralState fractional_laplacian(const SpectralState& u, double s) {
    SpectralState out = u;
    if (s == 0.0) return out;
    const auto w = sobolev_weights(*u.modes, s / 2.0, u.ncomp);
    kern::ops().mul(w.data(), out.a.data(), out.a.size());
    return out;
}

std::vector<double> point_value(const SpectralState& u) {
    std::vector<double> v(u.ncomp, 0.0);
    for (std::size_t i = 0; i < u.modes->size(); ++i)
        for (int c = 0; c < u.ncomp; ++c) v[c] += u.coeff(i, c).real();
    return v;
}

nlohmann::json state_to_json(const SpectralState& u) {
    nlohmann::json j = u.modes->to_json();
    j["ncomp"] = u.ncomp;
    j["real_field"] = u.real_field;
    j["divfree"] = u.divfree;
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i + 1 < u.a.size() + 1; i += 2)
        coeffs.push_back({u.a[i], u.a[i + 1]});
    j["coeffs"] = std::move(coeffs);
    return j;
}

SpectralState state_from_json(const nlohmann::json& j) {
    auto ms = ModeSet::from_json(j);
    SpectralState u(ms, j.at("ncomp").get<int>(), j.at("real_field").get<bool>(),
                    j.at("divfree").get<bool>());
    const auto& coeffs = j.at("coeffs");
    if (coeffs.size() * 2 != u.a.size())
        throw std::runtime_error("state_from_json: coefficient count mismatch");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        u.a[2 * i] = coeffs[i][0].get<double>();
        u.a[2 * i + 1] = coeffs[i][1].get<double>();
    }
    return u;
}

}  // namespace ergo::spectral
