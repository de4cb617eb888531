#include <doctest.h>

#include <cmath>
#include <vector>

#include "casimir/energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/factors.hpp"
#include "casimir/units.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {
const units::Mirror al = units::material_preset("Al");
const units::ThermalState t300 = units::thermal_state(300.0);
const QuadratureConfig cfg{};
} // namespace

TEST_CASE("report satisfies its defining identities") {
    const auto r = factors::correction_report(1e-6, al, t300, cfg);

    CHECK(r.L == 1e-6);
    CHECK(r.delta_F ==
          doctest::Approx(r.eta_F / (r.eta_F_P * r.eta_F_T) - 1.0).epsilon(1e-12));
    CHECK(r.delta_E ==
          doctest::Approx(r.eta_E / (r.eta_E_P * r.eta_E_T) - 1.0).epsilon(1e-12));
    CHECK(r.Delta_F == doctest::Approx(t300.lambda_T / al.lambda_P * r.delta_F).epsilon(1e-12));
    CHECK(r.Delta_E == doctest::Approx(t300.lambda_T / al.lambda_P * r.delta_E).epsilon(1e-12));

    // phi is defined as the residue after removing the analytic leading term;
    // substituting it back must reproduce the measured Delta.
    const double back_F =
        factors::delta_rescaled_analytic(r.L, t300, factors::Quantity::Force, r.phi_F, cfg);
    const double back_E =
        factors::delta_rescaled_analytic(r.L, t300, factors::Quantity::Energy, r.phi_E, cfg);
    CHECK(back_F == doctest::Approx(r.Delta_F).epsilon(1e-10));
    CHECK(back_E == doctest::Approx(r.Delta_E).epsilon(1e-10));
}

TEST_CASE("report components match their frozen references") {
    const auto r = factors::correction_report(1e-6, al, t300, cfg);
    CHECK(r.eta_F_P == doctest::Approx(oracle::eta_F_P_Al_1um).epsilon(1e-8));
    CHECK(r.eta_F_T == doctest::Approx(oracle::eta_F_T_1um_300K).epsilon(1e-8));
    CHECK(r.eta_E_T == doctest::Approx(oracle::eta_E_T_1um_300K).epsilon(5e-8));
    CHECK(r.eta_E == doctest::Approx(oracle::eta_E_Al_1um_300K).epsilon(1e-7));
    CHECK(r.eta_E_P == doctest::Approx(oracle::eta_E_P_Al_1um).epsilon(5e-7));
}

TEST_CASE("correlations of thermal and conductivity corrections are positive") {
    for (double L_um : {0.3, 1.0, 3.0}) {
        const auto r = factors::correction_report(L_um * 1e-6, al, t300, cfg);
        CHECK(r.delta_F > 0.0);
        CHECK(r.delta_E > 0.0);
    }
}

TEST_CASE("reports require a plasma mirror and T > 0") {
    CHECK_THROWS_AS(factors::correction_report(1e-6, units::Mirror::perfect(), t300, cfg),
                    DomainError);
    CHECK_THROWS_AS(factors::correction_report(1e-6, al, units::thermal_state(0.0), cfg),
                    DomainError);
    CHECK_THROWS_AS(factors::correction_report(-1e-6, al, t300, cfg), DomainError);
}

TEST_CASE("phi stays small where first-order factorization holds") {
    // At separations well below lambda_T the deviation is dominated by the
    // analytic leading term, so the extracted residue is a small fraction
    // of it (the leading coefficients are 8/3pi ~ 0.85 and 2/pi ~ 0.64).
    const auto r = factors::correction_report(0.2e-6, al, t300, cfg);
    CHECK(std::abs(r.phi_F) < 1e-3);
    CHECK(std::abs(r.phi_E) < 1e-3);
}

TEST_CASE("rescaled deviations collapse across plasma wavelengths") {
    std::vector<double> grid;
    for (double L = 1e-6; L < 4.01e-6; L *= std::pow(10.0, 0.25)) grid.push_back(L);
    const std::vector<double> lps{107e-9, 200e-9};
    const auto c = factors::scaling_collapse(grid, lps, t300, cfg);
    CHECK(c.statistic > 0.0);
    CHECK(c.statistic <= 0.05);
    CHECK(c.L_at_max >= grid.front());
    CHECK(c.L_at_max <= grid.back());
    const bool pair_ok = (c.lambda_P_a == 107e-9 && c.lambda_P_b == 200e-9) ||
                         (c.lambda_P_a == 200e-9 && c.lambda_P_b == 107e-9);
    CHECK(pair_ok);
}

TEST_CASE("collapse input validation") {
    const std::vector<double> grid{1e-6, 2e-6};
    // lambda_P beyond lambda_T/10 breaks the scale separation the law needs.
    CHECK_THROWS_AS(factors::scaling_collapse(grid, {107e-9, 1e-6}, t300, cfg), DomainError);
    CHECK_THROWS_AS(factors::scaling_collapse({}, {107e-9, 136e-9}, t300, cfg), DomainError);
    // A single wavelength has no pairs to compare: the spread is zero.
    const auto c = factors::scaling_collapse(grid, {107e-9}, t300, cfg);
    CHECK(c.statistic == 0.0);
}

TEST_CASE("sphere-plane force is the PFA transcription of the plane energy") {
    const double L = 1e-6;
    const double R = 150.0 * L;
    const auto sp = factors::sphere_plane_force_pfa(R, L, al, t300, cfg);
    CHECK(sp.pfa_valid);

    // Exact transcription of the plane-plane energy per area...
    const units::CavityGeometry g{L, 1e-4};
    const double pi = 3.14159265358979323846;
    const double e_per_area = energy::free_energy(g, al, t300, cfg).energy / g.A;
    CHECK(sp.force == doctest::Approx(2.0 * pi * R * e_per_area).epsilon(1e-10));
    // ...which itself sits on the frozen reference.
    CHECK(sp.force ==
          doctest::Approx(2.0 * pi * R * oracle::E_Al_1um_300K / g.A).epsilon(1e-6));

    CHECK_FALSE(factors::sphere_plane_force_pfa(99.0 * L, L, al, t300, cfg).pfa_valid);
    CHECK(factors::sphere_plane_force_pfa(100.0 * L, L, al, t300, cfg).pfa_valid);
    CHECK_THROWS_AS(factors::sphere_plane_force_pfa(0.0, L, al, t300, cfg), DomainError);
}

TEST_CASE("batched grid reports agree with single-point reports") {
    const std::vector<double> grid{0.5e-6, 1e-6, 2e-6};
    const auto baseline = factors::detail::perfect_baseline(grid, t300, cfg);
    REQUIRE(baseline.eta_F_T.size() == grid.size());
    const auto rows = factors::detail::batch_reports(grid, al, t300, cfg, baseline);
    REQUIRE(rows.size() == grid.size());

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto single = factors::correction_report(grid[i], al, t300, cfg);
        CHECK(rows[i].eta_F == doctest::Approx(single.eta_F).epsilon(1e-9));
        CHECK(rows[i].eta_E == doctest::Approx(single.eta_E).epsilon(1e-7));
        CHECK(std::abs(rows[i].delta_F - single.delta_F) < 1e-8);
        CHECK(std::abs(rows[i].delta_E - single.delta_E) < 1e-7);
    }
}
