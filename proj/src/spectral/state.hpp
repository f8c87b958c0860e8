#pragma once
// Spectral fields over a ModeSet: one complex coefficient per mode per
// component, stored flat as [mode][component][re,im]. Real fields keep
// coeff(-k) = conj(coeff(k)); incompressible 2D fields keep k.u(k) = 0.

#include "spectral/mode_set.hpp"

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace ergo::spectral {

struct SpectralState {
    std::shared_ptr<const ModeSet> modes;
    int ncomp = 1;
    bool real_field = true;
    bool divfree = false;

    std::vector<double> a;  // size() * ncomp * 2 doubles

    SpectralState() = default;
    SpectralState(std::shared_ptr<const ModeSet> ms, int ncomp_, bool real_f = true,
                  bool divfree_ = false);

    std::size_t flat_size() const { return a.size(); }
    std::complex<double> coeff(std::size_t mode, int comp) const;
    void set_coeff(std::size_t mode, int comp, std::complex<double> c);
    void set_zero();
};

// Per-double weight vector |k|^{2r}, expanded to match the flat layout.
std::vector<double> sobolev_weights(const ModeSet& ms, double r, int ncomp);

// sqrt(sum_k |k|^{2r} |coeff(k)|^2); r=0 is the L2-equivalent |.| norm,
// r=1 the ||.|| norm.
double sobolev_norm(const SpectralState& u, double r);

// Largest violation of coeff(-k) = conj(coeff(k)).
double reality_defect(const SpectralState& u);
// Largest |k.u(k)| over retained modes (2-component fields only).
double divergence_defect(const SpectralState& u);

// Spectral Leray projection: u(k) -= k (k.u(k))/|k|^2. Exact incompressibility
// at truncation.
void leray_project(SpectralState& u);

// Keep the N lowest eigenvalue levels of the |k|^2 ordering (ties kept
// together; P_N + Q_N = identity exactly).
SpectralState project_low(const SpectralState& u, int N);
SpectralState project_high(const SpectralState& u, int N);
// In-place versions against a precomputed level threshold lambda_N.
void zero_above(SpectralState& u, double lambda_N);
void zero_at_or_below(SpectralState& u, double lambda_N);

// Multiplies coeff(k) by |k|^s.
SpectralState fractional_laplacian(const SpectralState& u, double s);

// Point evaluation at xi = 0 per component (real fields): sum_k Re coeff(k).
std::vector<double> point_value(const SpectralState& u);

nlohmann::json state_to_json(const SpectralState& u);
SpectralState state_from_json(const nlohmann::json& j);

}  // namespace ergo::spectral
