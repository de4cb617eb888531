#include "casimir/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermal.hpp"

namespace casimir::energy {

using units::CavityGeometry;
using units::Mirror;
using units::ThermalState;

namespace {

constexpr double zeta3 = 1.2020569031595942854; // Apery's constant

double force_at(double x, double area, const Mirror& mirror, const ThermalState& thermal,
                const QuadratureConfig& config) {
    const CavityGeometry g{x, area};
    if (thermal.is_vacuum()) {
        return thermal::force_vacuum(g, mirror, config).force;
    }
    return thermal::force_matsubara(g, mirror, thermal, config).force;
}

// Analytic remainder of integral_X^inf F dx. At X >= 1e4 L every mirror is
// effectively perfect and, for T > 0, the force has reached its classical
// asymptote zeta(3) k_B T A / (4 pi x^3); for T = 0 it is the ideal force.
double tail_beyond(double X, double area, const ThermalState& thermal) {
    const auto& k = units::codata2018;
    if (thermal.is_vacuum()) {
        return k.hbar * k.c * area * std::numbers::pi * std::numbers::pi /
               (720.0 * X * X * X);
    }
    return zeta3 * k.k_B * thermal.T * area / (8.0 * std::numbers::pi * X * X);
}

// integral_a^b F(x) dx in log space (t = ln x), adaptive.
double integrate_force(double a, double b, double area, const Mirror& mirror,
                       const ThermalState& thermal, const QuadratureConfig& config,
                       const char* what) {
    auto integrand = [&](double t) {
        const double x = std::exp(t);
        return x * force_at(x, area, mirror, thermal, config);
    };
    quad::Options opt;
    opt.rel_tol = std::max(config.rel_tol, 1e-10);
    opt.max_panels = config.max_panels;
    quad::Result r = quad::integrate(integrand, std::log(a), std::log(b), opt);
    if (!r.converged) {
        throw ConvergenceError(std::string("free_energy: ") + what +
                                   " integral did not reach tolerance",
                               r.error);
    }
    return r.value;
}

struct EnergyPieces {
    double energy;
    double upper_limit;
    double extension_abs; // |E(X * ext) - E(X)|, measured
};

EnergyPieces free_energy_pieces(const CavityGeometry& geometry, const Mirror& mirror,
                                const ThermalState& thermal, const QuadratureConfig& config) {
    const double L = geometry.L;
    const double X = config.energy_upper_factor * L;
    const double X2 = config.energy_extension_factor * X;

    const double main = integrate_force(L, X, geometry.A, mirror, thermal, config, "main");
    const double energy = main + tail_beyond(X, geometry.A, thermal);

    const double extension =
        integrate_force(X, X2, geometry.A, mirror, thermal, config, "extension");
    const double shift =
        extension + tail_beyond(X2, geometry.A, thermal) - tail_beyond(X, geometry.A, thermal);

    return {energy, X, std::abs(shift)};
}

EnergyResult finish(const EnergyPieces& p, const QuadratureConfig& config) {
    EnergyResult out;
    out.energy = p.energy;
    out.upper_limit_used = p.upper_limit;
    out.convergence_delta = p.extension_abs / p.energy;
    if (!(out.convergence_delta < config.energy_convergence_limit)) {
        throw ConvergenceError("free_energy: range extension moved the result by " +
                                   std::to_string(out.convergence_delta) +
                                   " relative (limit " +
                                   std::to_string(config.energy_convergence_limit) + ")",
                               p.extension_abs);
    }
    return out;
}

} // namespace

EnergyResult free_energy(const CavityGeometry& geometry, const Mirror& mirror,
                         const ThermalState& thermal, const QuadratureConfig& config) {
    return finish(free_energy_pieces(geometry, mirror, thermal, config), config);
}

double eta_energy(const CavityGeometry& geometry, const Mirror& mirror,
                  const ThermalState& thermal, const QuadratureConfig& config) {
    return free_energy(geometry, mirror, thermal, config).energy / units::ideal_energy(geometry);
}

std::vector<EnergyResult> free_energy_batch(const std::vector<double>& L_grid, double area,
                                            const Mirror& mirror, const ThermalState& thermal,
                                            const QuadratureConfig& config) {
    if (L_grid.empty()) return {};
    if (!std::is_sorted(L_grid.begin(), L_grid.end()) ||
        std::adjacent_find(L_grid.begin(), L_grid.end()) != L_grid.end() ||
        !(L_grid.front() > 0.0)) {
        throw DomainError("free_energy_batch: L grid must be positive, ascending, unique");
    }

    const std::size_t n = L_grid.size();
    const CavityGeometry top{L_grid.back(), area};
    const EnergyPieces top_pieces = free_energy_pieces(top, mirror, thermal, config);

    std::vector<EnergyResult> out(n);
    out[n - 1] = finish(top_pieces, config);
    // Walk down the grid, adding segment integrals (suffix sums). The shared
    // upper limit 1e4 * L_top exceeds 1e4 * L_i for every i.
    double energy = top_pieces.energy;
    for (std::size_t i = n - 1; i-- > 0;) {
        energy += integrate_force(L_grid[i], L_grid[i + 1], area, mirror, thermal, config,
                                  "segment");
        out[i] = finish({energy, top_pieces.upper_limit, top_pieces.extension_abs}, config);
    }
    return out;
}

} // namespace casimir::energy
