#include "casimir/units.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir::units {

ThermalState thermal_state(double T_kelvin) {
    if (T_kelvin < 0.0 || !std::isfinite(T_kelvin)) {
        throw DomainError("thermal_state: temperature must be finite and >= 0 K");
    }
    if (T_kelvin == 0.0) {
        return {0.0, 0.0, std::numeric_limits<double>::infinity()};
    }
    const double omega_T = 2.0 * std::numbers::pi * codata2018.k_B * T_kelvin / codata2018.hbar;
    const double lambda_T = 2.0 * std::numbers::pi * codata2018.c / omega_T;
    return {T_kelvin, omega_T, lambda_T};
}

Mirror Mirror::plasma(double lambda_P_m) {
    if (!(lambda_P_m > 0.0) || !std::isfinite(lambda_P_m)) {
        throw DomainError("Mirror::plasma: lambda_P must be finite and > 0");
    }
    const double omega_P = 2.0 * std::numbers::pi * codata2018.c / lambda_P_m;
    return {MirrorModel::PlasmaMetal, lambda_P_m, omega_P};
}

Mirror material_preset(std::string_view name) {
    if (name == "Al") return Mirror::plasma(107e-9);
    if (name == "CuAu") return Mirror::plasma(136e-9);
    if (name == "Perfect") return Mirror::perfect();
    throw LookupError("unknown material preset '" + std::string(name) +
                      "'; valid presets: Al, CuAu, Perfect");
}

namespace {

void check_geometry(const CavityGeometry& g) {
    if (!(g.L > 0.0) || !std::isfinite(g.L)) {
        throw DomainError("CavityGeometry: L must be finite and > 0");
    }
    if (!(g.A > 0.0) || !std::isfinite(g.A)) {
        throw DomainError("CavityGeometry: A must be finite and > 0");
    }
}

} // namespace

double ideal_force(const CavityGeometry& g) {
    check_geometry(g);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return codata2018.hbar * codata2018.c * g.A * pi2 / (240.0 * std::pow(g.L, 4));
}

double ideal_energy(const CavityGeometry& g) {
    check_geometry(g);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    return codata2018.hbar * codata2018.c * g.A * pi2 / (720.0 * std::pow(g.L, 3));
}

} // namespace casimir::units
