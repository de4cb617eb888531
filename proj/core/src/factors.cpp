#include "casimir/factors.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/thermal.hpp"

namespace casimir::factors {

using units::CavityGeometry;
using units::Mirror;
using units::ThermalState;

namespace {

constexpr double coef_force = 8.0 / (3.0 * std::numbers::pi);
constexpr double coef_energy = 2.0 / std::numbers::pi;

void require_thermal_plasma(const Mirror& mirror, const ThermalState& thermal,
                            const char* who) {
    if (mirror.is_perfect()) {
        throw DomainError(std::string(who) +
                          ": delta/Delta are undefined for a perfect reflector");
    }
    if (thermal.is_vacuum()) {
        throw DomainError(std::string(who) + ": requires T > 0");
    }
}

} // namespace

namespace detail {

CorrectionReport assemble_report(double L, double lambda_T, double eta_F, double eta_F_P,
                                 double eta_F_T, double eta_E, double eta_E_P, double eta_E_T,
                                 double lambda_P) {
    CorrectionReport r;
    r.L = L;
    r.eta_F = eta_F;
    r.eta_F_P = eta_F_P;
    r.eta_F_T = eta_F_T;
    r.eta_E = eta_E;
    r.eta_E_P = eta_E_P;
    r.eta_E_T = eta_E_T;

    r.delta_F = eta_F / (eta_F_P * eta_F_T) - 1.0;
    r.delta_E = eta_E / (eta_E_P * eta_E_T) - 1.0;
    r.Delta_F = (lambda_T / lambda_P) * r.delta_F;
    r.Delta_E = (lambda_T / lambda_P) * r.delta_E;

    // Invert the first-order decomposition to extract phi:
    // phi = (Delta - leading) * eta^T * L / lambda_T.
    const double x = lambda_T / L;
    const double lead_F = coef_force * x * (eta_F_T - 1.0) / eta_F_T;
    const double lead_E = coef_energy * x * (eta_E_T - 1.0) / eta_E_T;
    r.phi_F = (r.Delta_F - lead_F) * eta_F_T / x;
    r.phi_E = (r.Delta_E - lead_E) * eta_E_T / x;
    return r;
}

PerfectBaseline perfect_baseline(const std::vector<double>& L_grid,
                                 const ThermalState& thermal, const QuadratureConfig& config) {
    if (thermal.is_vacuum()) {
        throw DomainError("perfect_baseline: requires T > 0");
    }
    PerfectBaseline base;
    base.eta_F_T.reserve(L_grid.size());
    for (double L : L_grid) {
        const CavityGeometry g{L, 1.0};
        base.eta_F_T.push_back(thermal::force_perfect_thermal(g, thermal, config).force /
                               units::ideal_force(g));
    }
    const auto energies =
        energy::free_energy_batch(L_grid, 1.0, Mirror::perfect(), thermal, config);
    base.eta_E_T.reserve(L_grid.size());
    for (std::size_t i = 0; i < L_grid.size(); ++i) {
        base.eta_E_T.push_back(energies[i].energy /
                               units::ideal_energy({L_grid[i], 1.0}));
    }
    return base;
}

std::vector<CorrectionReport> batch_reports(const std::vector<double>& L_grid,
                                            const Mirror& mirror, const ThermalState& thermal,
                                            const QuadratureConfig& config,
                                            const PerfectBaseline& baseline) {
    require_thermal_plasma(mirror, thermal, "batch_reports");
    const units::ThermalState vacuum = units::thermal_state(0.0);

    const auto E_thermal = energy::free_energy_batch(L_grid, 1.0, mirror, thermal, config);
    const auto E_vacuum = energy::free_energy_batch(L_grid, 1.0, mirror, vacuum, config);

    std::vector<CorrectionReport> out;
    out.reserve(L_grid.size());
    for (std::size_t i = 0; i < L_grid.size(); ++i) {
        const double L = L_grid[i];
        const CavityGeometry g{L, 1.0};
        const double F_cas = units::ideal_force(g);
        const double E_cas = units::ideal_energy(g);

        const double eta_F = thermal::force_matsubara(g, mirror, thermal, config).force / F_cas;
        const double eta_F_P = thermal::force_vacuum(g, mirror, config).force / F_cas;
        const double eta_E = E_thermal[i].energy / E_cas;
        const double eta_E_P = E_vacuum[i].energy / E_cas;

        out.push_back(assemble_report(L, thermal.lambda_T, eta_F, eta_F_P,
                                      baseline.eta_F_T[i], eta_E, eta_E_P,
                                      baseline.eta_E_T[i], mirror.lambda_P));
    }
    return out;
}

} // namespace detail

CorrectionReport correction_report(double L, const Mirror& mirror, const ThermalState& thermal,
                                   const QuadratureConfig& config) {
    require_thermal_plasma(mirror, thermal, "correction_report");

    // All factors are per-area quantities; use unit area internally.
    const CavityGeometry g{L, 1.0};
    const double F_cas = units::ideal_force(g);
    const double E_cas = units::ideal_energy(g);
    const units::ThermalState vacuum = units::thermal_state(0.0);

    const double eta_F = thermal::force_matsubara(g, mirror, thermal, config).force / F_cas;
    const double eta_F_P = thermal::force_vacuum(g, mirror, config).force / F_cas;
    const double eta_F_T = thermal::force_perfect_thermal(g, thermal, config).force / F_cas;

    const double eta_E = energy::free_energy(g, mirror, thermal, config).energy / E_cas;
    const double eta_E_P = energy::free_energy(g, mirror, vacuum, config).energy / E_cas;
    const double eta_E_T =
        energy::free_energy(g, Mirror::perfect(), thermal, config).energy / E_cas;

    return detail::assemble_report(L, thermal.lambda_T, eta_F, eta_F_P, eta_F_T, eta_E,
                                   eta_E_P, eta_E_T, mirror.lambda_P);
}

double delta_rescaled_analytic(double L, const ThermalState& thermal, Quantity which,
                               double phi, const QuadratureConfig& config) {
    if (thermal.is_vacuum()) {
        throw DomainError("delta_rescaled_analytic: requires T > 0");
    }
    const CavityGeometry g{L, 1.0};
    double eta_T, coef;
    if (which == Quantity::Force) {
        eta_T = thermal::force_perfect_thermal(g, thermal, config).force / units::ideal_force(g);
        coef = coef_force;
    } else {
        eta_T = energy::free_energy(g, Mirror::perfect(), thermal, config).energy /
                units::ideal_energy(g);
        coef = coef_energy;
    }
    const double x = thermal.lambda_T / L;
    return coef * x * (eta_T - 1.0) / eta_T + x * phi / eta_T;
}

CollapseResult scaling_collapse(const std::vector<double>& L_grid,
                                const std::vector<double>& lambda_P_list,
                                const ThermalState& thermal, const QuadratureConfig& config) {
    if (thermal.is_vacuum()) {
        throw DomainError("scaling_collapse: requires T > 0");
    }
    if (L_grid.empty()) {
        throw DomainError("scaling_collapse: empty L grid");
    }
    for (double lp : lambda_P_list) {
        if (!(lp > 0.0) || lp > thermal.lambda_T / 10.0) {
            throw DomainError(
                "scaling_collapse: every lambda_P must satisfy lambda_P <= lambda_T / 10");
        }
    }

    CollapseResult out{0.0, L_grid.front(), 0.0, 0.0, Quantity::Force};
    if (lambda_P_list.size() < 2) return out;

    const detail::PerfectBaseline baseline = detail::perfect_baseline(L_grid, thermal, config);

    const std::size_t n = L_grid.size();
    std::vector<std::vector<double>> dF(lambda_P_list.size()), dE(lambda_P_list.size());
    for (std::size_t j = 0; j < lambda_P_list.size(); ++j) {
        const auto reports = detail::batch_reports(L_grid, Mirror::plasma(lambda_P_list[j]),
                                                   thermal, config, baseline);
        dF[j].resize(n);
        dE[j].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            dF[j][i] = reports[i].Delta_F;
            dE[j][i] = reports[i].Delta_E;
        }
    }

    auto scan = [&](const std::vector<std::vector<double>>& curves, Quantity q) {
        double amplitude = 0.0;
        for (const auto& curve : curves)
            for (double v : curve) amplitude = std::max(amplitude, std::abs(v));
        if (amplitude == 0.0) return;
        for (std::size_t a = 0; a < curves.size(); ++a) {
            for (std::size_t b = a + 1; b < curves.size(); ++b) {
                for (std::size_t i = 0; i < n; ++i) {
                    const double spread = std::abs(curves[a][i] - curves[b][i]) / amplitude;
                    if (spread > out.statistic) {
                        out = {spread, L_grid[i], lambda_P_list[a], lambda_P_list[b], q};
                    }
                }
            }
        }
    };
    scan(dF, Quantity::Force);
    scan(dE, Quantity::Energy);
    return out;
}

SpherePlaneForce sphere_plane_force_pfa(double R, double L, const Mirror& mirror,
                                        const ThermalState& thermal,
                                        const QuadratureConfig& config) {
    if (!(R > 0.0)) {
        throw DomainError("sphere_plane_force_pfa: R must be > 0");
    }
    const CavityGeometry g{L, 1.0}; // unit area: E is then energy per area
    const double energy_per_area = energy::free_energy(g, mirror, thermal, config).energy;
    return {2.0 * std::numbers::pi * R * energy_per_area, R >= 100.0 * L};
}

} // namespace casimir::factors
