#pragma once

#include <limits>
#include <numbers>
#include <string>
#include <string_view>

namespace casimir::units {

// CODATA 2018 exact values (SI). Frozen at build time, never recomputed.
struct PhysicalConstants {
    double hbar; // reduced Planck constant [J s]
    double c;    // speed of light [m/s]
    double k_B;  // Boltzmann constant [J/K]
};

inline constexpr double planck_h = 6.62607015e-34; // [J s], exact
inline constexpr PhysicalConstants codata2018{
    planck_h / (2.0 * std::numbers::pi),
    299792458.0,
    1.380649e-23,
};

// Temperature with its derived Matsubara frequency and thermal wavelength.
// T = 0 encodes the pure-vacuum case: omega_T = 0, lambda_T = infinity.
struct ThermalState {
    double T;        // [K]
    double omega_T;  // 2 pi k_B T / hbar [rad/s]
    double lambda_T; // 2 pi c / omega_T = hbar c / (k_B T) [m]

    [[nodiscard]] bool is_vacuum() const noexcept { return T == 0.0; }
};

[[nodiscard]] ThermalState thermal_state(double T_kelvin);

enum class MirrorModel { PerfectReflector, PlasmaMetal };

// One plate: either a perfect reflector or a plasma-model metal
// characterized by its plasma wavelength lambda_P (omega_P = 2 pi c / lambda_P).
struct Mirror {
    MirrorModel model;
    double lambda_P; // [m], meaningful only for PlasmaMetal
    double omega_P;  // [rad/s], derived

    [[nodiscard]] static Mirror perfect() noexcept {
        return {MirrorModel::PerfectReflector, 0.0, 0.0};
    }
    [[nodiscard]] static Mirror plasma(double lambda_P_m);

    [[nodiscard]] bool is_perfect() const noexcept {
        return model == MirrorModel::PerfectReflector;
    }
};

// Presets: "Al" (107 nm), "CuAu" (136 nm), "Perfect".
[[nodiscard]] Mirror material_preset(std::string_view name);

// Plate separation and area. All per-area quantities are independent of A.
struct CavityGeometry {
    double L; // [m]
    double A; // [m^2]
};

[[nodiscard]] double ideal_force(const CavityGeometry& g);  // hbar c A pi^2 / (240 L^4)
[[nodiscard]] double ideal_energy(const CavityGeometry& g); // hbar c A pi^2 / (720 L^3)

} // namespace casimir::units
