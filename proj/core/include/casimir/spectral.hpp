#pragma once

#include "casimir/config.hpp"
#include "casimir/optics.hpp"
#include "casimir/units.hpp"

namespace casimir::spectral {

// Force density at one imaginary frequency: value = (hbar A / 2 pi^2) *
// integral over kappa of kappa^2 f. Even in xi by construction.
struct SpectralDensity {
    double value; // [N s / rad]
    double xi;    // [rad/s]
};

// Cavity function f = sum over polarizations of r^2 / (e^{2 kappa L} - r^2).
// Finite and >= 0 for kappa > 0; for perfect mirrors the kappa = 0 point is
// singular and must never be sampled exactly (quadrature contract).
[[nodiscard]] double loop_integrand(const optics::SpectralPoint& point,
                                    const units::Mirror& mirror, double L);

[[nodiscard]] SpectralDensity spectral_density(double xi, const units::Mirror& mirror,
                                               const units::CavityGeometry& geometry,
                                               const QuadratureConfig& config);

namespace detail {

// spectral_density plus the quadrature error estimate, for callers that
// propagate uncertainties (thermal sums).
struct DensityResult {
    double value;
    double error;
    int evaluations;
};

[[nodiscard]] DensityResult density_with_error(double xi, const units::Mirror& mirror,
                                               const units::CavityGeometry& geometry,
                                               const QuadratureConfig& config);

} // namespace detail

} // namespace casimir::spectral
