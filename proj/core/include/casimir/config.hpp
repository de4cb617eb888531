#pragma once

#include <cstdint>

namespace casimir {

// Tolerances, truncation rules and substitution parameters for every
// integral and sum in the library. One instance is threaded through all
// evaluations so a run is fully described by (inputs, config).
struct QuadratureConfig {
    // kappa-integral (spectral density) and xi-integral (vacuum force)
    double rel_tol = 1e-9;

    // u = u_scale * L * (kappa - xi/c); integration truncated at
    // u = u_max * u_scale / 2 so the physical cutoff kappa <= xi/c + u_max/(2L)
    // does not depend on the substitution.
    double u_max = 60.0;
    double u_scale = 2.0;

    // Matsubara sum: stop once term < matsubara_term_rel * partial_sum.
    double matsubara_term_rel = 1e-10;
    int matsubara_max_terms = 100000;

    // Poisson sum over m: stop after two consecutive terms below
    // poisson_rel_tol * |partial_sum|.
    double poisson_rel_tol = 1e-7;
    int poisson_max_m = 4096;

    // Free energy: integrate force from L to energy_upper_factor * L, then
    // verify that extending the range by energy_extension_factor changes the
    // result by less than energy_convergence_limit (relative).
    double energy_upper_factor = 1e4;
    double energy_extension_factor = 100.0;
    double energy_convergence_limit = 1e-7;

    // Adaptive-subdivision budget per 1D integral.
    int max_panels = 4000;

    // Throws DomainError if any knob is out of range.
    void validate() const;
};

// FNV-1a over the canonical text rendering of every knob; used to stamp
// outputs so identical configs are recognizable.
[[nodiscard]] std::uint64_t config_hash(const QuadratureConfig& cfg) noexcept;

} // namespace casimir
