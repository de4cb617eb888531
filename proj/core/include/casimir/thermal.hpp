#pragma once

#include "casimir/config.hpp"
#include "casimir/units.hpp"

namespace casimir::thermal {

enum class Representation { Matsubara, Poisson, VacuumOnly };

struct ForceResult {
    double force; // [N], > 0 means attraction
    Representation representation;
    int terms_used;        // Matsubara/Poisson terms, or evaluations for VacuumOnly
    double error_estimate; // [N], truncation + quadrature bound
};

// Two-sided Matsubara sum folded by parity: F = omega_T (F[0]/2 + sum_{k>=1} F[k omega_T]).
// Reference representation. Requires T > 0.
[[nodiscard]] ForceResult force_matsubara(const units::CavityGeometry& geometry,
                                          const units::Mirror& mirror,
                                          const units::ThermalState& thermal,
                                          const QuadratureConfig& config);

// Vacuum (T = 0) force F^P = integral over xi of F[xi]; the m = 0 Poisson term.
[[nodiscard]] ForceResult force_vacuum(const units::CavityGeometry& geometry,
                                       const units::Mirror& mirror,
                                       const QuadratureConfig& config);

// Poisson resummation F = Ftilde(0) + 2 sum_{m>=1} Ftilde(m lambda_T), with
// Ftilde(x) = integral over xi of cos(xi x / c) F[xi]. Validation path.
[[nodiscard]] ForceResult force_poisson(const units::CavityGeometry& geometry,
                                        const units::Mirror& mirror,
                                        const units::ThermalState& thermal,
                                        const QuadratureConfig& config);

// F^T: Matsubara force for perfect reflectors at temperature T.
[[nodiscard]] ForceResult force_perfect_thermal(const units::CavityGeometry& geometry,
                                                const units::ThermalState& thermal,
                                                const QuadratureConfig& config);

} // namespace casimir::thermal
