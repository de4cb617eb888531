#include "casimir/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/spectral.hpp"

namespace casimir::thermal {

using spectral::detail::density_with_error;
using units::CavityGeometry;
using units::Mirror;
using units::ThermalState;

ForceResult force_matsubara(const CavityGeometry& geometry, const Mirror& mirror,
                            const ThermalState& thermal, const QuadratureConfig& config) {
    if (thermal.is_vacuum()) {
        throw DomainError("force_matsubara: T = 0 has no Matsubara sum; use force_vacuum");
    }

    const auto zero = density_with_error(0.0, mirror, geometry, config);
    quad::KahanSum sum;
    sum.add(0.5 * zero.value); // k = 0 counted once with weight 1/2
    double quad_error = 0.5 * zero.error;

    double previous_term = 0.0;
    double tail_bound = 0.0;
    int k = 1;
    for (; k <= config.matsubara_max_terms; ++k) {
        const auto term = density_with_error(static_cast<double>(k) * thermal.omega_T, mirror,
                                             geometry, config);
        sum.add(term.value);
        quad_error += term.error;
        if (term.value <= config.matsubara_term_rel * sum.value()) {
            // Terms decay at least geometrically (~e^{-2 k omega_T L / c});
            // bound the tail by the observed ratio.
            double ratio = previous_term > 0.0 ? term.value / previous_term : 0.5;
            ratio = std::clamp(ratio, 0.0, 0.999);
            tail_bound = term.value * ratio / (1.0 - ratio);
            break;
        }
        previous_term = term.value;
    }
    if (k > config.matsubara_max_terms) {
        throw ConvergenceError("force_matsubara: term cap reached before truncation threshold",
                               thermal.omega_T * quad_error);
    }

    ForceResult out;
    out.force = thermal.omega_T * sum.value();
    out.representation = Representation::Matsubara;
    out.terms_used = k + 1; // k nonzero terms plus the k = 0 term
    out.error_estimate = thermal.omega_T * (quad_error + tail_bound);
    return out;
}

ForceResult force_vacuum(const CavityGeometry& geometry, const Mirror& mirror,
                         const QuadratureConfig& config) {
    const double c = units::codata2018.c;
    const double L = geometry.L;

    // v = 2 L xi / c maps the xi integral onto an O(1) decay scale; the
    // density falls off like e^{-v} (lower kappa bound moves up with xi).
    const double scale = c / (2.0 * L);
    auto integrand = [&](double v) {
        return density_with_error(v * scale, mirror, geometry, config).value;
    };

    quad::Options opt;
    opt.rel_tol = config.rel_tol;
    opt.max_panels = config.max_panels;
    quad::Result r = quad::integrate(integrand, 0.0, config.u_max, opt);
    if (!r.converged) {
        throw ConvergenceError("force_vacuum: xi integral did not reach rel_tol",
                               scale * r.error);
    }

    ForceResult out;
    out.force = scale * r.value;
    out.representation = Representation::VacuumOnly;
    out.terms_used = r.evaluations;
    // Outer panel error plus the per-density tolerance contract of the inner integral.
    out.error_estimate = scale * r.error + config.rel_tol * out.force;
    return out;
}

namespace {

// Ftilde(x) = integral_0^inf cos(xi x / c) F[xi] dxi, by integrating between
// consecutive zeros of the cosine and summing the alternating panel series in
// order with compensated summation.
struct CosineTransform {
    double value;
    double error;
};

CosineTransform cosine_transform(double x, const CavityGeometry& geometry,
                                 const Mirror& mirror, const QuadratureConfig& config, int m) {
    const double c = units::codata2018.c;
    const double L = geometry.L;

    auto integrand = [&](double xi) {
        return std::cos(xi * x / c) *
               density_with_error(xi, mirror, geometry, config).value;
    };

    // The density decays like e^{-2 L xi / c}: beyond xi_cut the remaining
    // mass is below e^{-u_max} of the total.
    const double xi_cut = config.u_max * c / (2.0 * L);
    const double half_period = std::numbers::pi * c / x;

    quad::Options opt;
    opt.rel_tol = config.rel_tol;
    opt.max_panels = config.max_panels;

    quad::KahanSum sum, err;
    double scale = 0.0; // largest |partial sum| seen, sets the noise floor
    int quiet_panels = 0;

    double lo = 0.0;
    double hi = 0.5 * half_period; // first zero of cos at pi c / (2 x)
    const long max_panels_total = 400000;
    for (long n = 0; n < max_panels_total; ++n) {
        quad::Options panel_opt = opt;
        panel_opt.abs_tol = scale > 0.0 ? 1e-13 * scale : 0.0;
        quad::Result panel = quad::integrate(integrand, lo, hi, panel_opt);
        sum.add(panel.value);
        err.add(panel.error);
        scale = std::max(scale, std::abs(sum.value()));

        if (lo > xi_cut || (scale > 0.0 && std::abs(panel.value) < 1e-14 * scale)) {
            if (++quiet_panels >= 2) break;
        } else {
            quiet_panels = 0;
        }
        lo = hi;
        hi = lo + half_period;
        if (n + 2 == max_panels_total) {
            throw ConvergenceError(
                "force_poisson: oscillatory quadrature failed at m = " + std::to_string(m),
                err.value());
        }
    }

    return {sum.value(), err.value()};
}

} // namespace

ForceResult force_poisson(const CavityGeometry& geometry, const Mirror& mirror,
                          const ThermalState& thermal, const QuadratureConfig& config) {
    if (thermal.is_vacuum()) {
        throw DomainError("force_poisson: T = 0 has no thermal terms; use force_vacuum");
    }

    const ForceResult m0 = force_vacuum(geometry, mirror, config);
    quad::KahanSum sum, err;
    sum.add(m0.force);
    err.add(m0.error_estimate);

    int consecutive_small = 0;
    double last_term = 0.0;
    int m = 1;
    for (; m <= config.poisson_max_m; ++m) {
        const CosineTransform t =
            cosine_transform(static_cast<double>(m) * thermal.lambda_T, geometry, mirror,
                             config, m);
        const double term = 2.0 * t.value;
        sum.add(term);
        err.add(t.error * 2.0);
        last_term = std::abs(term);
        if (last_term < config.poisson_rel_tol * std::abs(sum.value())) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
    }
    if (m > config.poisson_max_m) {
        throw ConvergenceError("force_poisson: m cap reached before truncation threshold",
                               err.value());
    }

    ForceResult out;
    out.force = sum.value();
    out.representation = Representation::Poisson;
    out.terms_used = m + 1; // m cosine terms plus the m = 0 vacuum term
    // Terms decay like 1/m^4 asymptotically, but only like 1/m^2 through the
    // crossover, so bound the tail with the weaker power:
    // sum_{j>m} j^-2 ~ 1/m  =>  tail <= term_m * m.
    out.error_estimate = err.value() + last_term * static_cast<double>(m);
    return out;
}

ForceResult force_perfect_thermal(const CavityGeometry& geometry, const ThermalState& thermal,
                                  const QuadratureConfig& config) {
    return force_matsubara(geometry, Mirror::perfect(), thermal, config);
}

} // namespace casimir::thermal
