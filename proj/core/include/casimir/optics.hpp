#pragma once

#include "casimir/units.hpp"

namespace casimir::optics {

// Point of the (imaginary frequency, wavevector) integration domain of the
// force formula; the propagative sector requires kappa >= xi/c.
struct SpectralPoint {
    double xi;    // imaginary angular frequency [rad/s], >= 0
    double kappa; // longitudinal wavevector [1/m]
};

// Squared amplitude reflectivities of one thick vacuum-metal interface.
struct ReflectivityPair {
    double r2_perp; // TE
    double r2_par;  // TM
};

// Same, extended with the exactly-computed complements 1 - r^2. The cavity
// denominator e^{2 kappa L} - r^2 is evaluated as expm1(2 kappa L) + (1 - r^2),
// which stays accurate when kappa L is small and r^2 is close to 1.
struct LoopReflectivity {
    double r2_perp;
    double co_perp; // 1 - r2_perp
    double r2_par;
    double co_par; // 1 - r2_par
};

// Plasma dielectric function on the imaginary axis: eps(i xi) = 1 + omega_P^2/xi^2.
// xi = 0 is a domain error; callers must use the dedicated zero-frequency
// limits built into reflectivities().
[[nodiscard]] double epsilon_plasma(double xi, const units::Mirror& mirror);

[[nodiscard]] ReflectivityPair reflectivities(const SpectralPoint& point,
                                              const units::Mirror& mirror);

[[nodiscard]] LoopReflectivity loop_reflectivity(const SpectralPoint& point,
                                                 const units::Mirror& mirror);

} // namespace casimir::optics
