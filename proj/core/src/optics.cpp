#include "casimir/optics.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::optics {

using units::Mirror;

double epsilon_plasma(double xi, const Mirror& mirror) {
    if (mirror.is_perfect()) {
        throw DomainError("epsilon_plasma: mirror must be a plasma metal");
    }
    if (!(xi > 0.0)) {
        throw DomainError(
            "epsilon_plasma: xi must be > 0; the xi = 0 term uses the dedicated limit path");
    }
    const double ratio = mirror.omega_P / xi;
    return 1.0 + ratio * ratio;
}

namespace {

void check_point(const SpectralPoint& p) {
    if (p.xi < 0.0 || !std::isfinite(p.xi)) {
        throw DomainError("SpectralPoint: xi must be finite and >= 0");
    }
    if (!std::isfinite(p.kappa) || p.kappa * units::codata2018.c < p.xi) {
        throw DomainError("SpectralPoint: kappa < xi/c lies in the excluded evanescent sector");
    }
}

} // namespace

// For the plasma model (eps - 1) xi^2 / c^2 = omega_P^2 / c^2 independently of
// xi, so kappa_t = hypot(kappa, omega_P/c) for every frequency including the
// zero-frequency limit. Both squared reflectivities are computed from
// cancellation-free product forms:
//   r_perp = (kappa_t - kappa)/(kappa_t + kappa) = q^2 / (kappa_t + kappa)^2,
//   r_par  = (eps kappa - kappa_t)/(eps kappa + kappa_t)
//          = (eps - 1)((eps + 1) kappa^2 - xi^2/c^2) / (eps kappa + kappa_t)^2,
// with q = omega_P / c, and the complements use the exact forms
//   1 - r_perp = 2 kappa   / (kappa_t + kappa),
//   1 - r_par  = 2 kappa_t / (eps kappa + kappa_t).
LoopReflectivity loop_reflectivity(const SpectralPoint& point, const Mirror& mirror) {
    check_point(point);
    if (mirror.is_perfect()) {
        return {1.0, 0.0, 1.0, 0.0};
    }

    const double c = units::codata2018.c;
    const double q = mirror.omega_P / c;
    const double kappa = point.kappa;
    const double kt = std::hypot(kappa, q);

    const double r_perp = q * q / ((kt + kappa) * (kt + kappa));
    const double r2_perp = r_perp * r_perp;
    const double co_perp = (2.0 * kappa / (kt + kappa)) * (1.0 + r_perp);

    double r_par, co_par;
    if (point.xi == 0.0) {
        r_par = 1.0; // eps -> infinity limit
        co_par = 0.0;
    } else {
        const double eps = epsilon_plasma(point.xi, mirror);
        const double a = point.xi / c;
        const double den = eps * kappa + kt;
        r_par = (eps - 1.0) * ((eps + 1.0) * kappa * kappa - a * a) / (den * den);
        co_par = (2.0 * kt / den) * (1.0 + r_par);
    }
    return {r2_perp, co_perp, r_par * r_par, co_par};
}

ReflectivityPair reflectivities(const SpectralPoint& point, const Mirror& mirror) {
    const LoopReflectivity lr = loop_reflectivity(point, mirror);
    return {lr.r2_perp, lr.r2_par};
}

} // namespace casimir::optics
