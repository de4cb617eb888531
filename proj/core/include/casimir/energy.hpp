#pragma once

#include <vector>

#include "casimir/config.hpp"
#include "casimir/units.hpp"

namespace casimir::energy {

struct EnergyResult {
    double energy;           // [J], > 0 (binding energy)
    double upper_limit_used; // [m], >= energy_upper_factor * L
    // Relative change of the energy when the integration range is extended by
    // energy_extension_factor; must stay below energy_convergence_limit.
    double convergence_delta;
};

// E(L) = integral_L^X F(x) dx + analytic tail beyond X, X = energy_upper_factor * L.
// T > 0 integrates the Matsubara force, T = 0 the vacuum force. The range
// extension is evaluated, not assumed: convergence_delta is measured.
[[nodiscard]] EnergyResult free_energy(const units::CavityGeometry& geometry,
                                       const units::Mirror& mirror,
                                       const units::ThermalState& thermal,
                                       const QuadratureConfig& config);

// eta_E = E / E_Cas.
[[nodiscard]] double eta_energy(const units::CavityGeometry& geometry,
                                const units::Mirror& mirror,
                                const units::ThermalState& thermal,
                                const QuadratureConfig& config);

// Energies for an ascending grid of separations sharing one integration of
// the force: E(L_i) = E(L_top) + sum of segment integrals (suffix sums). The
// shared upper limit 1e4 * L_top dominates every row's requirement.
[[nodiscard]] std::vector<EnergyResult> free_energy_batch(const std::vector<double>& L_grid,
                                                          double area,
                                                          const units::Mirror& mirror,
                                                          const units::ThermalState& thermal,
                                                          const QuadratureConfig& config);

} // namespace casimir::energy
