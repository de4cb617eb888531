#pragma once

#include <vector>

#include "casimir/config.hpp"
#include "casimir/units.hpp"

namespace casimir::factors {

// Every correction quantity at one (L, mirror, T) point. By construction
// delta = eta / (eta^P eta^T) - 1 and Delta = (lambda_T / lambda_P) delta.
struct CorrectionReport {
    double L; // [m]

    double eta_F;   // F / F_Cas
    double eta_F_P; // conductivity alone (T = 0)
    double eta_F_T; // temperature alone (perfect mirrors)
    double delta_F;
    double Delta_F;

    double eta_E;
    double eta_E_P;
    double eta_E_T;
    double delta_E;
    double Delta_E;

    double phi_F; // numerically extracted first-order coefficients
    double phi_E;
};

enum class Quantity { Force, Energy };

// Full report; requires a plasma mirror and T > 0.
[[nodiscard]] CorrectionReport correction_report(double L, const units::Mirror& mirror,
                                                 const units::ThermalState& thermal,
                                                 const QuadratureConfig& config);

// First-order rescaled deviation:
//   force:  Delta_F = (8/3pi)(lambda_T/L)(eta_F^T - 1)/eta_F^T + (lambda_T/L) phi_F / eta_F^T
//   energy: Delta_E = (2/pi) (lambda_T/L)(eta_E^T - 1)/eta_E^T + (lambda_T/L) phi_E / eta_E^T
// With phi = 0 this is the leading term alone; eta^T is computed numerically.
[[nodiscard]] double delta_rescaled_analytic(double L, const units::ThermalState& thermal,
                                             Quantity which, double phi,
                                             const QuadratureConfig& config);

struct CollapseResult {
    double statistic;  // max |Delta(a) - Delta(b)| / max |Delta| over grid and pairs
    double L_at_max;   // [m]
    double lambda_P_a; // the pair realizing the maximum [m]
    double lambda_P_b;
    Quantity quantity_at_max;
};

// Scaling-law collapse of the rescaled deviations; every lambda_P must
// satisfy lambda_P <= lambda_T / 10. Both force and energy deviations are
// examined; the worse one is reported.
[[nodiscard]] CollapseResult scaling_collapse(const std::vector<double>& L_grid,
                                              const std::vector<double>& lambda_P_list,
                                              const units::ThermalState& thermal,
                                              const QuadratureConfig& config);

struct SpherePlaneForce {
    double force;   // [N]
    bool pfa_valid; // R >= 100 L
};

// Proximity-force approximation: F_sphere = 2 pi R * E(L) / A.
[[nodiscard]] SpherePlaneForce sphere_plane_force_pfa(double R, double L,
                                                      const units::Mirror& mirror,
                                                      const units::ThermalState& thermal,
                                                      const QuadratureConfig& config);

namespace detail {

// Assemble a report from precomputed correction factors (single source for
// the delta/Delta/phi algebra, shared with the sweep driver).
[[nodiscard]] CorrectionReport assemble_report(double L, double lambda_T, double eta_F,
                                               double eta_F_P, double eta_F_T, double eta_E,
                                               double eta_E_P, double eta_E_T,
                                               double lambda_P);

// Perfect-mirror factors over a grid, reusable across materials at fixed T.
struct PerfectBaseline {
    std::vector<double> eta_F_T;
    std::vector<double> eta_E_T;
};

[[nodiscard]] PerfectBaseline perfect_baseline(const std::vector<double>& L_grid,
                                               const units::ThermalState& thermal,
                                               const QuadratureConfig& config);

// Reports over an ascending grid with batched (telescoped) energy chains.
[[nodiscard]] std::vector<CorrectionReport> batch_reports(
    const std::vector<double>& L_grid, const units::Mirror& mirror,
    const units::ThermalState& thermal, const QuadratureConfig& config,
    const PerfectBaseline& baseline);

} // namespace detail

} // namespace casimir::factors
