#include "casimir/spectral.hpp"

#include <cmath>
#include <numbers>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::spectral {

using units::CavityGeometry;
using units::Mirror;

double loop_integrand(const optics::SpectralPoint& point, const Mirror& mirror, double L) {
    if (!(L > 0.0)) throw DomainError("loop_integrand: L must be > 0");
    const optics::LoopReflectivity r = optics::loop_reflectivity(point, mirror);
    // e^{2 kappa L} - r^2 = expm1(2 kappa L) + (1 - r^2), exact complements.
    const double em = std::expm1(2.0 * point.kappa * L);
    return r.r2_perp / (em + r.co_perp) + r.r2_par / (em + r.co_par);
}

namespace detail {

DensityResult density_with_error(double xi, const Mirror& mirror,
                                 const CavityGeometry& geometry,
                                 const QuadratureConfig& config) {
    if (xi < 0.0 || !std::isfinite(xi)) {
        throw DomainError("spectral_density: xi must be finite and >= 0");
    }
    const double L = geometry.L;
    const double c = units::codata2018.c;
    const double a = xi / c; // lower kappa bound

    // u = u_scale * L * (kappa - xi/c). The upper bound u_max * u_scale / 2
    // keeps the physical cutoff kappa <= xi/c + u_max/(2L) independent of the
    // substitution; there e^{-2 kappa L} <= e^{-u_max}, far below tolerance.
    const double s = config.u_scale * L;
    const double u_hi = config.u_max * config.u_scale / 2.0;

    auto integrand = [&](double u) {
        const double kappa = a + u / s;
        return kappa * kappa * loop_integrand({xi, kappa}, mirror, L);
    };

    quad::Options opt;
    opt.rel_tol = config.rel_tol;
    opt.max_panels = config.max_panels;
    quad::Result r = quad::integrate(integrand, 0.0, u_hi, opt);
    if (!r.converged) {
        throw ConvergenceError("spectral_density: kappa integral did not reach rel_tol", r.error);
    }

    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double prefactor = units::codata2018.hbar * geometry.A / (2.0 * pi2) / s;
    return {prefactor * r.value, prefactor * r.error, r.evaluations};
}

} // namespace detail

SpectralDensity spectral_density(double xi, const Mirror& mirror,
                                 const CavityGeometry& geometry,
                                 const QuadratureConfig& config) {
    return {detail::density_with_error(xi, mirror, geometry, config).value, xi};
}

} // namespace casimir::spectral
