#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/config.hpp"
#include "casimir/factors.hpp"
#include "casimir/units.hpp"

namespace casimir::report {

// A named mirror for tabulation; presets keep their preset name, custom
// plasma wavelengths are labeled like "lp500nm".
struct NamedMirror {
    std::string name;
    units::Mirror mirror;
};

[[nodiscard]] NamedMirror named_preset(std::string_view preset);
[[nodiscard]] NamedMirror named_plasma(double lambda_P_m);

struct SweepSpec {
    double L_min = 0.1e-6; // [m]
    double L_max = 10e-6;  // [m]
    int points_per_decade = 50;
    std::vector<NamedMirror> materials; // plasma metals only
    double T = 300.0;                   // [K]
    // Output filter for plotting; empty means "all". Rows always carry the
    // full column schema regardless.
    std::vector<std::string> quantities;
};

struct SweepRow {
    std::string material;
    factors::CorrectionReport rep;
};

struct SweepTable {
    std::vector<SweepRow> rows; // sorted by (material, L)
    double T = 0.0;
    std::string constants_version;
    std::uint64_t config_hash = 0;
    SweepSpec spec;
};

// Log-spaced grid, points_per_decade per decade, both endpoints included.
[[nodiscard]] std::vector<double> log_grid(double L_min, double L_max, int points_per_decade);

[[nodiscard]] SweepTable run_sweep(const SweepSpec& spec, const QuadratureConfig& config);

// CSV schema (fixed):
// L_um,material,eta_F,eta_F_P,eta_F_T,delta_F,Delta_F,eta_E,eta_E_P,eta_E_T,delta_E,Delta_E,phi_F,phi_E
// '#'-prefixed metadata header; 12 significant digits, scientific notation;
// UTF-8, LF. Written atomically (temp file + rename).
void emit_csv(const SweepTable& table, const std::filesystem::path& destination);

// Minimal SVG line plot, log-x. `quantities` is a comma-separated list of
// column names; the derived tokens eta_F_PT / eta_E_PT select the product
// eta^P * eta^T. One polyline per (material, quantity).
void emit_svg(const SweepTable& table, std::string_view quantities,
              const std::filesystem::path& destination);

} // namespace casimir::report
