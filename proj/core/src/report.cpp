#include "casimir/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "casimir/errors.hpp"
#include "report_detail.hpp"

namespace casimir::report {

using factors::CorrectionReport;

NamedMirror named_preset(std::string_view preset) {
    return {std::string(preset), units::material_preset(preset)};
}

NamedMirror named_plasma(double lambda_P_m) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "lp%.0fnm", lambda_P_m * 1e9);
    return {buf, units::Mirror::plasma(lambda_P_m)};
}

std::vector<double> log_grid(double L_min, double L_max, int points_per_decade) {
    if (!(L_min > 0.0) || !(L_max > L_min)) {
        throw DomainError("log_grid: need 0 < L_min < L_max");
    }
    if (points_per_decade < 1) {
        throw DomainError("log_grid: points_per_decade must be >= 1");
    }
    const double decades = std::log10(L_max / L_min);
    const int n = static_cast<int>(std::lround(decades * points_per_decade));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        grid.push_back(L_min * std::pow(10.0, static_cast<double>(i) / points_per_decade));
    }
    grid.push_back(L_max); // exact endpoint
    return grid;
}

SweepTable run_sweep(const SweepSpec& spec, const QuadratureConfig& config) {
    config.validate();
    if (spec.materials.empty()) {
        throw DomainError("run_sweep: no materials given");
    }
    for (const auto& m : spec.materials) {
        if (m.mirror.is_perfect()) {
            throw DomainError("run_sweep: material '" + m.name +
                              "' is a perfect reflector; sweeps need plasma mirrors "
                              "(delta/Delta are undefined otherwise)");
        }
    }

    const units::ThermalState thermal = units::thermal_state(spec.T);
    if (thermal.is_vacuum()) {
        throw DomainError("run_sweep: T must be > 0");
    }
    const std::vector<double> grid = log_grid(spec.L_min, spec.L_max, spec.points_per_decade);

    SweepTable table;
    table.T = spec.T;
    table.constants_version = "CODATA2018";
    table.config_hash = config_hash(config);
    table.spec = spec;

    const factors::detail::PerfectBaseline baseline =
        factors::detail::perfect_baseline(grid, thermal, config);

    for (const auto& material : spec.materials) {
        std::vector<CorrectionReport> reports;
        try {
            reports =
                factors::detail::batch_reports(grid, material.mirror, thermal, config, baseline);
        } catch (const ConvergenceError& e) {
            throw ConvergenceError("run_sweep: material '" + material.name +
                                       "' failed to converge: " + e.what(),
                                   e.achieved_error());
        }
        for (const auto& rep : reports) {
            table.rows.push_back({material.name, rep});
        }
    }

    std::sort(table.rows.begin(), table.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.material != b.material) return a.material < b.material;
        return a.rep.L < b.rep.L;
    });
    return table;
}

namespace detail {

namespace {

// Column accessors shared by the CSV and SVG writers.
constexpr Column columns[] = {
    {"eta_F", [](const CorrectionReport& r) { return r.eta_F; }},
    {"eta_F_P", [](const CorrectionReport& r) { return r.eta_F_P; }},
    {"eta_F_T", [](const CorrectionReport& r) { return r.eta_F_T; }},
    {"delta_F", [](const CorrectionReport& r) { return r.delta_F; }},
    {"Delta_F", [](const CorrectionReport& r) { return r.Delta_F; }},
    {"eta_E", [](const CorrectionReport& r) { return r.eta_E; }},
    {"eta_E_P", [](const CorrectionReport& r) { return r.eta_E_P; }},
    {"eta_E_T", [](const CorrectionReport& r) { return r.eta_E_T; }},
    {"delta_E", [](const CorrectionReport& r) { return r.delta_E; }},
    {"Delta_E", [](const CorrectionReport& r) { return r.Delta_E; }},
    {"phi_F", [](const CorrectionReport& r) { return r.phi_F; }},
    {"phi_E", [](const CorrectionReport& r) { return r.phi_E; }},
    // Derived plot-only tokens.
    {"eta_F_PT", [](const CorrectionReport& r) { return r.eta_F_P * r.eta_F_T; }},
    {"eta_E_PT", [](const CorrectionReport& r) { return r.eta_E_P * r.eta_E_T; }},
};

} // namespace

const Column* find_column(std::string_view name) {
    for (const auto& c : columns) {
        if (name == c.name) return &c;
    }
    return nullptr;
}

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

// Write-all-then-rename so failures never leave a partial file behind.
void atomic_write(const std::filesystem::path& destination, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path dir = destination.parent_path();
    std::error_code ec;
    if (!dir.empty() && !fs::exists(dir, ec)) {
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create directory", dir.string());
    }
    const fs::path tmp = destination.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing", tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw IoError("short write", tmp.string());
        }
    }
    fs::rename(tmp, destination, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename into place", destination.string());
    }
}

} // namespace detail

void emit_csv(const SweepTable& table, const std::filesystem::path& destination) {
    if (table.rows.empty()) {
        throw DomainError("emit_csv: empty table");
    }
    std::string out;
    out.reserve(table.rows.size() * 256 + 512);

    char meta[256];
    std::snprintf(meta, sizeof(meta),
                  "# casimir plane-mirror sweep\n"
                  "# constants: %s\n"
                  "# config_hash: %016llx\n"
                  "# temperature_k: %s\n",
                  table.constants_version.c_str(),
                  static_cast<unsigned long long>(table.config_hash),
                  detail::format_sci(table.T).c_str());
    out += meta;
    std::snprintf(meta, sizeof(meta), "# grid: lmin_um=%s lmax_um=%s points_per_decade=%d\n",
                  detail::format_sci(table.spec.L_min * 1e6).c_str(),
                  detail::format_sci(table.spec.L_max * 1e6).c_str(),
                  table.spec.points_per_decade);
    out += meta;

    out += "L_um,material,eta_F,eta_F_P,eta_F_T,delta_F,Delta_F,"
           "eta_E,eta_E_P,eta_E_T,delta_E,Delta_E,phi_F,phi_E\n";
    for (const auto& row : table.rows) {
        const auto& r = row.rep;
        out += detail::format_sci(r.L * 1e6);
        out += ',';
        out += row.material;
        for (double v : {r.eta_F, r.eta_F_P, r.eta_F_T, r.delta_F, r.Delta_F, r.eta_E,
                         r.eta_E_P, r.eta_E_T, r.delta_E, r.Delta_E, r.phi_F, r.phi_E}) {
            out += ',';
            out += detail::format_sci(v);
        }
        out += '\n';
    }

    detail::atomic_write(destination, out);
}

} // namespace casimir::report
