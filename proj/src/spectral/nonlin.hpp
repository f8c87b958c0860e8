#pragma once
// Convective nonlinearities, computed as sharp Galerkin convolutions in
// spectral space (no FFT, hence no aliasing): the product is evaluated exactly
// over all retained mode pairs and truncated to the mode set. This preserves
// the skew-symmetry <a.grad b, b> = 0 for divergence-free a up to roundoff.

#include "kernels/kernels.hpp"
#include "spectral/state.hpp"

#include <cstdint>
#include <memory>

namespace ergo::spectral {

// Mode-coupling table for (a.grad b)(k) = sum_{p+q=k} (a(p).iq) b(q); built
// once per ModeSet and shared by every evaluation.
kern::ConvTable build_conv_table(const ModeSet& ms);

// P_M(a.grad b) for 2-component fields (no Leray projection, no sign).
SpectralState convective(const SpectralState& a, const SpectralState& b,
                         const kern::ConvTable& table);

// Leray-projected, Galerkin-truncated convective term -P_L P_M(u.grad u).
// Errors if u is not divergence-free.
SpectralState ns_nonlinearity(const SpectralState& u, const kern::ConvTable& table);
SpectralState ns_nonlinearity(const SpectralState& u);

// Real L2 pairing <x, y> = sum_k Re(x(k) conj(y(k))) over components.
double inner(const SpectralState& x, const SpectralState& y);

// Drift contribution of the observation nonlinearity: coeff(k) multiplied by
// i*(u(0).k). Per-mode rotation, exactly energy-neutral.
SpectralState lagrangian_nonlinearity(const SpectralState& u);

// -P_L P_M(u_g.grad u_g) with u_g = Lambda^{-gamma} u.
SpectralState ev_nonlinearity(const SpectralState& u, double gamma,
                              const kern::ConvTable& table);

// Random mean-zero real fields (unit-scale Gaussian coefficients).
SpectralState random_field(std::shared_ptr<const ModeSet> ms, int ncomp,
                           std::uint64_t seed, std::uint64_t id);
SpectralState random_divfree_field(std::shared_ptr<const ModeSet> ms,
                                   std::uint64_t seed, std::uint64_t id);

// Empirical bound for |<v.grad u, v>| <= C_D |v| ||v|| ||u||: max sampled
// ratio times a 1.5 safety factor, floored at 0.1. Deterministic given seed;
// errors if every sample is degenerate.
double calibrate_CD(std::shared_ptr<const ModeSet> ms, int samples,
                    std::uint64_t seed);

}  // namespace ergo::spectral
