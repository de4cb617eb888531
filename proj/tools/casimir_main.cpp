#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/factors.hpp"
#include "casimir/report.hpp"
#include "casimir/thermal.hpp"
#include "casimir/units.hpp"

namespace {

namespace units = casimir::units;
namespace thermal = casimir::thermal;
namespace energy = casimir::energy;
namespace factors = casimir::factors;
namespace report = casimir::report;

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("CASIMIR_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

void print_field(const char* name, double value, const char* unit) {
    std::printf("%-14s = %.12g %s\n", name, value, unit);
}

struct MirrorArgs {
    std::string material;   // preset name; empty if --lambda-p-nm used
    double lambda_p_nm = 0; // 0 = unset
};

report::NamedMirror resolve_mirror(const MirrorArgs& args) {
    if (args.lambda_p_nm > 0) {
        return report::named_plasma(args.lambda_p_nm * 1e-9);
    }
    if (args.material.empty()) {
        throw casimir::DomainError("specify a mirror with --material or --lambda-p-nm");
    }
    return report::named_preset(args.material);
}

struct PointArgs {
    MirrorArgs mirror;
    double l_um = 1.0;
    double temperature_k = 300.0;
    double rel_tol = 1e-9;
    std::string representation = "matsubara";
};

int cmd_point(const PointArgs& args) {
    casimir::QuadratureConfig config;
    config.rel_tol = args.rel_tol;
    config.validate();

    const report::NamedMirror named = resolve_mirror(args.mirror);
    const units::Mirror& mirror = named.mirror;
    const units::ThermalState ts = units::thermal_state(args.temperature_k);
    const double L = args.l_um * 1e-6;
    const units::CavityGeometry geometry{L, 1.0};

    std::printf("# casimir point evaluation\n");
    if (mirror.is_perfect()) {
        std::printf("%-14s = %s\n", "material", named.name.c_str());
    } else {
        std::printf("%-14s = %s (plasma, lambda_P = %.6g um)\n", "material", named.name.c_str(),
                    mirror.lambda_P * 1e6);
    }
    print_field("temperature", ts.T, "K");
    print_field("L", args.l_um, "um");
    if (!ts.is_vacuum()) {
        print_field("lambda_T", ts.lambda_T * 1e6, "um");
    }

    const double F_cas = units::ideal_force(geometry);
    const double E_cas = units::ideal_energy(geometry);
    print_field("F_Cas/A", F_cas, "Pa");
    print_field("E_Cas/A", E_cas, "J/m^2");

    // Representation cross-check first: with "both", the Matsubara and
    // Poisson forces must agree within their combined error estimates.
    if (!ts.is_vacuum() && args.representation != "matsubara") {
        const thermal::ForceResult fm = mirror.is_perfect()
                                            ? thermal::force_perfect_thermal(geometry, ts, config)
                                            : thermal::force_matsubara(geometry, mirror, ts, config);
        const thermal::ForceResult fp = thermal::force_poisson(geometry, mirror, ts, config);
        print_field("F_matsubara/A", fm.force, "Pa");
        print_field("F_poisson/A", fp.force, "Pa");
        if (args.representation == "both") {
            const double diff = std::fabs(fm.force - fp.force);
            const double combined = fm.error_estimate + fp.error_estimate;
            print_field("rel_difference", diff / fm.force, "");
            print_field("rel_error_budget", combined / fm.force, "");
            if (diff > combined) {
                char msg[160];
                std::snprintf(msg, sizeof(msg),
                              "representation mismatch: |dF| = %.3e Pa exceeds combined error "
                              "estimate %.3e Pa",
                              diff, combined);
                throw casimir::ConvergenceError(msg, diff / fm.force);
            }
        }
    }

    if (mirror.is_perfect() && ts.is_vacuum()) {
        // Closed form: the ideal Casimir expressions themselves.
        print_field("F/A", F_cas, "Pa");
        print_field("E/A", E_cas, "J/m^2");
        print_field("eta_F", 1.0, "");
        print_field("eta_E", 1.0, "");
        return 0;
    }

    if (mirror.is_perfect()) {
        // Temperature correction only.
        const thermal::ForceResult f = thermal::force_perfect_thermal(geometry, ts, config);
        const energy::EnergyResult e = energy::free_energy(geometry, mirror, ts, config);
        print_field("F/A", f.force, "Pa");
        print_field("E/A", e.energy, "J/m^2");
        print_field("eta_F_T", f.force / F_cas, "");
        print_field("eta_E_T", e.energy / E_cas, "");
        return 0;
    }

    if (ts.is_vacuum()) {
        // Conductivity correction only.
        const thermal::ForceResult f = thermal::force_vacuum(geometry, mirror, config);
        const energy::EnergyResult e = energy::free_energy(geometry, mirror, ts, config);
        print_field("F/A", f.force, "Pa");
        print_field("E/A", e.energy, "J/m^2");
        print_field("eta_F_P", f.force / F_cas, "");
        print_field("eta_E_P", e.energy / E_cas, "");
        return 0;
    }

    const factors::CorrectionReport rep = factors::correction_report(L, mirror, ts, config);
    print_field("F/A", rep.eta_F * F_cas, "Pa");
    print_field("E/A", rep.eta_E * E_cas, "J/m^2");
    print_field("eta_F", rep.eta_F, "");
    print_field("eta_F_P", rep.eta_F_P, "");
    print_field("eta_F_T", rep.eta_F_T, "");
    print_field("delta_F", rep.delta_F, "");
    print_field("Delta_F", rep.Delta_F, "");
    print_field("eta_E", rep.eta_E, "");
    print_field("eta_E_P", rep.eta_E_P, "");
    print_field("eta_E_T", rep.eta_E_T, "");
    print_field("delta_E", rep.delta_E, "");
    print_field("Delta_E", rep.Delta_E, "");
    print_field("phi_F", rep.phi_F, "");
    print_field("phi_E", rep.phi_E, "");
    return 0;
}

struct SweepArgs {
    std::vector<std::string> materials;
    std::vector<double> lambda_p_nm;
    double temperature_k = 300.0;
    double lmin_um = 0.1;
    double lmax_um = 10.0;
    int points_per_decade = 50;
    double rel_tol = 1e-9;
    std::string output;
    std::string format = "csv";
    std::string quantities = "eta_F,eta_E";
    std::string representation = "matsubara";
};

report::SweepSpec build_spec(const SweepArgs& args) {
    report::SweepSpec spec;
    spec.L_min = args.lmin_um * 1e-6;
    spec.L_max = args.lmax_um * 1e-6;
    spec.points_per_decade = args.points_per_decade;
    spec.T = args.temperature_k;
    std::vector<std::string> materials = args.materials;
    if (materials.empty() && args.lambda_p_nm.empty()) {
        materials = {"Al", "CuAu"};
    }
    for (const auto& m : materials) {
        spec.materials.push_back(report::named_preset(m));
    }
    for (double nm : args.lambda_p_nm) {
        spec.materials.push_back(report::named_plasma(nm * 1e-9));
    }
    return spec;
}

int cmd_sweep(const SweepArgs& args) {
    if (args.representation != "matsubara") {
        throw casimir::DomainError(
            "sweep evaluates forces in the Matsubara representation; use "
            "'point --representation both' for the cross-check");
    }
    casimir::QuadratureConfig config;
    config.rel_tol = args.rel_tol;
    config.validate();

    const report::SweepSpec spec = build_spec(args);
    std::filesystem::path destination = args.output.empty()
                                            ? default_out_dir() / ("sweep." + args.format)
                                            : std::filesystem::path(args.output);
    const report::SweepTable table = report::run_sweep(spec, config);
    if (args.format == "svg") {
        report::emit_svg(table, args.quantities, destination);
    } else {
        report::emit_csv(table, destination);
    }
    std::printf("wrote %s (%zu rows, %zu materials)\n", destination.string().c_str(),
                table.rows.size(), spec.materials.size());
    return 0;
}

struct FiguresArgs {
    std::string out;
    double temperature_k = 300.0;
    int points_per_decade = 16;
    double rel_tol = 1e-9;
};

report::SweepTable subset(const report::SweepTable& table,
                          const std::vector<std::string>& materials) {
    report::SweepTable out;
    out.T = table.T;
    out.constants_version = table.constants_version;
    out.config_hash = table.config_hash;
    out.spec = table.spec;
    out.spec.materials.clear();
    for (const auto& named : table.spec.materials) {
        for (const auto& wanted : materials) {
            if (named.name == wanted) out.spec.materials.push_back(named);
        }
    }
    for (const auto& row : table.rows) {
        for (const auto& wanted : materials) {
            if (row.material == wanted) out.rows.push_back(row);
        }
    }
    return out;
}

int cmd_figures(const FiguresArgs& args) {
    casimir::QuadratureConfig config;
    config.rel_tol = args.rel_tol;
    config.validate();

    const std::filesystem::path dir =
        args.out.empty() ? default_out_dir() : std::filesystem::path(args.out);

    // One master sweep covers all four panels.
    report::SweepSpec spec;
    spec.points_per_decade = args.points_per_decade;
    spec.T = args.temperature_k;
    spec.materials = {report::named_preset("Al"), report::named_preset("CuAu"),
                      report::named_plasma(300e-9), report::named_plasma(500e-9)};
    const report::SweepTable table = report::run_sweep(spec, config);

    const std::vector<std::string> metals = {"Al", "CuAu"};
    const std::vector<std::string> all = {"Al", "CuAu", "lp300nm", "lp500nm"};
    const std::vector<std::string> rescaled = {"Al", "CuAu", "lp300nm"};

    struct Panel {
        const char* stem;
        const std::vector<std::string>* materials;
        const char* quantities;
    };
    const Panel panels[] = {
        {"fig1", &metals, "eta_F,eta_F_P,eta_F_T,eta_F_PT"},
        {"fig2", &metals, "eta_E,eta_E_P,eta_E_T,eta_E_PT"},
        {"fig3", &all, "delta_F,delta_E"},
        {"fig4", &rescaled, "Delta_F,Delta_E"},
    };
    for (const Panel& p : panels) {
        const report::SweepTable slice = subset(table, *p.materials);
        report::emit_csv(slice, dir / (std::string(p.stem) + ".csv"));
        report::emit_svg(slice, p.quantities, dir / (std::string(p.stem) + ".svg"));
        std::printf("wrote %s/%s.{csv,svg}\n", dir.string().c_str(), p.stem);
    }
    return 0;
}

struct Check {
    const char* name;
    double measured;
    double threshold;
};

int cmd_validate(double rel_tol) {
    casimir::QuadratureConfig config;
    config.rel_tol = rel_tol;
    config.validate();

    std::vector<Check> checks;
    const units::Mirror al = units::material_preset("Al");
    const units::Mirror perfect = units::Mirror::perfect();
    const units::ThermalState t300 = units::thermal_state(300.0);
    const units::ThermalState t0 = units::thermal_state(0.0);

    // Thermal wavelength against the tabulated constants.
    checks.push_back(
        {"thermal_wavelength_300K", std::fabs(t300.lambda_T * 1e6 - 7.63), 0.01});

    // Perfect mirrors at T = 0 must reproduce the ideal closed forms.
    double worst_ideal = 0.0;
    for (double L_um : {0.1, 1.0, 10.0}) {
        const units::CavityGeometry g{L_um * 1e-6, 1.0};
        const double eta_F = thermal::force_vacuum(g, perfect, config).force / units::ideal_force(g);
        const double eta_E =
            energy::free_energy(g, perfect, t0, config).energy / units::ideal_energy(g);
        worst_ideal = std::max({worst_ideal, std::fabs(eta_F - 1.0), std::fabs(eta_E - 1.0)});
    }
    checks.push_back({"ideal_limits", worst_ideal, 1e-6});

    // Matsubara and Poisson representations must agree.
    double worst_rep = 0.0;
    for (double L_um : {0.3, 1.0, 3.0}) {
        const units::CavityGeometry g{L_um * 1e-6, 1.0};
        const double fm = thermal::force_matsubara(g, al, t300, config).force;
        const double fp = thermal::force_poisson(g, al, t300, config).force;
        worst_rep = std::max(worst_rep, std::fabs(fm - fp) / fm);
    }
    checks.push_back({"representation_equivalence", worst_rep, 1e-4});

    // Thermodynamic consistency: F = -dE/dL by central difference.
    {
        const double L = 1e-6, h = 1e-3 * L;
        const auto energies =
            energy::free_energy_batch({L - h, L + h}, 1.0, al, t300, config);
        const double dF = (energies[0].energy - energies[1].energy) / (2.0 * h);
        const double F = thermal::force_matsubara({L, 1.0}, al, t300, config).force;
        checks.push_back({"derivative_consistency", std::fabs(dF - F) / F, 1e-3});
    }

    // Measured effect of extending the energy integration range.
    {
        const energy::EnergyResult e = energy::free_energy({1e-6, 1.0}, al, t300, config);
        checks.push_back({"energy_range_convergence", e.convergence_delta, 1e-7});
    }

    bool all_pass = true;
    for (const Check& c : checks) {
        const bool pass = c.measured <= c.threshold;
        all_pass = all_pass && pass;
        std::printf("CHECK %-28s measured=%.3e threshold=%.3e %s\n", c.name, c.measured,
                    c.threshold, pass ? "PASS" : "FAIL");
    }
    std::printf("validate: %s\n", all_pass ? "all checks passed" : "FAILURES present");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"casimir: plane-mirror Casimir force and free energy, plasma model"};
    app.require_subcommand(1);

    PointArgs point_args;
    CLI::App* point = app.add_subcommand("point", "Evaluate one separation and print the report");
    auto* mat_opt = point->add_option("--material", point_args.mirror.material,
                                      "Mirror preset: Al, CuAu, Perfect");
    point->add_option("--lambda-p-nm", point_args.mirror.lambda_p_nm,
                      "Plasma wavelength in nm (instead of a preset)")
        ->check(CLI::PositiveNumber)
        ->excludes(mat_opt);
    point->add_option("--l-um", point_args.l_um, "Mirror separation in um")
        ->required()
        ->check(CLI::PositiveNumber);
    point->add_option("--temperature-k", point_args.temperature_k, "Temperature in K")
        ->check(CLI::NonNegativeNumber);
    point->add_option("--rel-tol", point_args.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    point->add_option("--representation", point_args.representation,
                      "Force representation: matsubara, poisson, or both (cross-check)")
        ->check(CLI::IsMember({"matsubara", "poisson", "both"}));

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep separations and write CSV or SVG");
    sweep->add_option("--material", sweep_args.materials,
                      "Mirror preset(s); default Al and CuAu");
    sweep->add_option("--lambda-p-nm", sweep_args.lambda_p_nm,
                      "Additional plasma wavelength(s) in nm");
    sweep->add_option("--temperature-k", sweep_args.temperature_k, "Temperature in K")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--lmin-um", sweep_args.lmin_um, "Smallest separation in um")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--lmax-um", sweep_args.lmax_um, "Largest separation in um")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--points-per-decade", sweep_args.points_per_decade, "Grid density")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--rel-tol", sweep_args.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--output", sweep_args.output,
                      "Output path (default $CASIMIR_OUT_DIR/sweep.<format>)");
    sweep->add_option("--format", sweep_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg"}));
    sweep->add_option("--quantities", sweep_args.quantities,
                      "Comma-separated column list for SVG output");
    sweep->add_option("--representation", sweep_args.representation,
                      "Force representation (sweep supports matsubara)")
        ->check(CLI::IsMember({"matsubara", "poisson", "both"}));

    FiguresArgs figures_args;
    CLI::App* figures =
        app.add_subcommand("figures", "Reproduce the four correction-factor figures");
    figures->add_option("--out", figures_args.out,
                        "Output directory (default $CASIMIR_OUT_DIR or .)");
    figures->add_option("--temperature-k", figures_args.temperature_k, "Temperature in K")
        ->check(CLI::PositiveNumber);
    figures->add_option("--points-per-decade", figures_args.points_per_decade, "Grid density")
        ->check(CLI::PositiveNumber);
    figures->add_option("--rel-tol", figures_args.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);

    double validate_rel_tol = 1e-9;
    CLI::App* validate = app.add_subcommand("validate", "Run the built-in consistency checks");
    validate->add_option("--rel-tol", validate_rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (point->parsed()) return cmd_point(point_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (figures->parsed()) return cmd_figures(figures_args);
        if (validate->parsed()) return cmd_validate(validate_rel_tol);
    } catch (const casimir::ConvergenceError& e) {
        std::fprintf(stderr, "casimir: convergence failure: %s\n", e.what());
        return 3;
    } catch (const casimir::IoError& e) {
        std::fprintf(stderr, "casimir: I/O error: %s\n", e.what());
        return 4;
    } catch (const casimir::Error& e) {
        std::fprintf(stderr, "casimir: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "casimir: unexpected error: %s\n", e.what());
        return 1;
    }
    return 0;
}
