#include <doctest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/thermal.hpp"
#include "casimir/units.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {
const units::Mirror al = units::material_preset("Al");
const units::Mirror cuau = units::material_preset("CuAu");
const units::Mirror perfect = units::Mirror::perfect();
const units::ThermalState t300 = units::thermal_state(300.0);
const units::ThermalState t600 = units::thermal_state(600.0);
const QuadratureConfig cfg{};

double eta(const thermal::ForceResult& r, const units::CavityGeometry& g) {
    return r.force / units::ideal_force(g);
}
} // namespace

TEST_CASE("matsubara force at frozen reference points") {
    const units::CavityGeometry g1{1e-6, 1e-4};
    const auto f1 = thermal::force_matsubara(g1, al, t300, cfg);
    CHECK(f1.force == doctest::Approx(oracle::F_Al_1um_300K).epsilon(1e-8));
    CHECK(std::abs(f1.force - oracle::F_Al_1um_300K) <=
          std::max(f1.error_estimate, 1e-9 * f1.force));
    CHECK(f1.representation == thermal::Representation::Matsubara);
    CHECK(f1.terms_used > 10);

    const units::CavityGeometry g2{0.5e-6, 1e-4};
    const auto f2 = thermal::force_matsubara(g2, cuau, t300, cfg);
    CHECK(f2.force == doctest::Approx(oracle::F_CuAu_05um_300K).epsilon(1e-8));
}

TEST_CASE("vacuum force at frozen reference points") {
    const units::CavityGeometry g1{1e-6, 1e-4};
    const auto f1 = thermal::force_vacuum(g1, al, cfg);
    CHECK(f1.force == doctest::Approx(oracle::F_vac_Al_1um).epsilon(1e-8));
    CHECK(eta(f1, g1) == doctest::Approx(oracle::eta_F_P_Al_1um).epsilon(1e-8));
    CHECK(f1.representation == thermal::Representation::VacuumOnly);

    const units::CavityGeometry g2{0.5e-6, 1e-4};
    const auto f2 = thermal::force_vacuum(g2, cuau, cfg);
    CHECK(f2.force == doctest::Approx(oracle::F_vac_CuAu_05um).epsilon(1e-8));
    CHECK(eta(f2, g2) == doctest::Approx(oracle::eta_F_P_CuAu_05um).epsilon(1e-8));
}

TEST_CASE("perfect-mirror thermal factor against the frozen grid") {
    struct Row {
        double L, T, eta;
    };
    const Row rows[] = {
        {1e-6, 300.0, oracle::eta_F_T_1um_300K},
        {3e-6, 300.0, oracle::eta_F_T_3um_300K},
        {7e-6, 300.0, oracle::eta_F_T_7um_300K},
        {1e-6, 600.0, oracle::eta_F_T_1um_600K},
    };
    for (const Row& row : rows) {
        const units::CavityGeometry g{row.L, 1e-4};
        const auto f = thermal::force_perfect_thermal(g, units::thermal_state(row.T), cfg);
        CHECK(eta(f, g) == doctest::Approx(row.eta).epsilon(1e-8));
    }
}

TEST_CASE("perfect-mirror thermal force against the 50-digit Poisson oracle") {
    // Not one of the frozen grid points: the oracle recomputes the full
    // image-sum representation in extended precision.
    const units::CavityGeometry g{2e-6, 1e-4};
    const auto f = thermal::force_perfect_thermal(g, t300, cfg);
    const double ref = static_cast<double>(oracle::force_perfect_bf(300.0, g.L, g.A));
    CHECK(f.force == doctest::Approx(ref).epsilon(1e-8));
}

TEST_CASE("closed-form Ftilde agrees with its independent image-sum series") {
    // Cross-validates the two oracle implementations against each other;
    // this is the backbone of every perfect-mirror reference in the suite.
    for (double x_um : {1.0, 4.0, 11.0}) {
        const oracle::bf closed = oracle::ftilde_perfect_bf(x_um * 1e-6, 1e-6, 1e-4);
        const oracle::bf series =
            oracle::ftilde_perfect_series_bf(x_um * 1e-6, 1e-6, 1e-4, 8000);
        const double rel = static_cast<double>((series - closed) / closed);
        CHECK(std::abs(rel) <= 1e-8);
    }
}

TEST_CASE("Ftilde tends to the Casimir force at small argument") {
    // Relative deviation is -(20/63) y^2 + O(y^4) with y = pi x / 2L; at
    // x = L/1000 that is -7.8e-7, so a 2e-6 band is tight but safe.
    const double L = 1e-6;
    const double x = L / 1000.0;
    const double f = static_cast<double>(oracle::ftilde_perfect_bf(x, L, 1e-4));
    const double f_cas = static_cast<double>(oracle::ideal_force_bf(L, 1e-4));
    CHECK(std::abs(f / f_cas - 1.0) < 2e-6);
}

TEST_CASE("poisson and matsubara representations agree within their budgets") {
    for (double L_um : {0.5, 1.0, 3.0}) {
        const units::CavityGeometry g{L_um * 1e-6, 1e-4};
        const auto fm = thermal::force_matsubara(g, al, t300, cfg);
        const auto fp = thermal::force_poisson(g, al, t300, cfg);
        CHECK(fp.representation == thermal::Representation::Poisson);
        const double diff = std::abs(fm.force - fp.force);
        CHECK(diff <= fm.error_estimate + fp.error_estimate);
        CHECK(diff / fm.force <= 1e-4);
    }
}

TEST_CASE("poisson representation for perfect mirrors matches the closed form") {
    const units::CavityGeometry g{3e-6, 1e-4};
    const auto fp = thermal::force_poisson(g, perfect, t300, cfg);
    const double ref = static_cast<double>(oracle::force_perfect_bf(300.0, g.L, g.A));
    CHECK(fp.force == doctest::Approx(ref).epsilon(1e-6));
}

TEST_CASE("thermal representations require T > 0") {
    const units::CavityGeometry g{1e-6, 1e-4};
    const auto vac = units::thermal_state(0.0);
    CHECK_THROWS_AS(thermal::force_matsubara(g, al, vac, cfg), DomainError);
    CHECK_THROWS_AS(thermal::force_poisson(g, al, vac, cfg), DomainError);
    CHECK_THROWS_AS(thermal::force_perfect_thermal(g, vac, cfg), DomainError);
}

TEST_CASE("physical orderings between the force variants") {
    const units::CavityGeometry g{3e-6, 1e-4};

    // Imperfect reflectivity reduces the force.
    const double f_al = thermal::force_matsubara(g, al, t300, cfg).force;
    const double f_perf = thermal::force_perfect_thermal(g, t300, cfg).force;
    CHECK(f_al < f_perf);

    // Thermal photons increase it.
    const double f_hot = thermal::force_matsubara(g, al, t600, cfg).force;
    CHECK(f_hot > f_al);

    // The vacuum force is below the ideal Casimir force, and decreases when
    // the plasma wavelength grows (more penetrable mirrors).
    const auto v_al = thermal::force_vacuum(g, al, cfg);
    CHECK(v_al.force < units::ideal_force(g));
    const auto v_soft = thermal::force_vacuum(g, units::Mirror::plasma(500e-9), cfg);
    CHECK(v_soft.force < v_al.force);
}
