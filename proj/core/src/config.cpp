#include "casimir/config.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "casimir/errors.hpp"

namespace casimir {

void QuadratureConfig::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(rel_tol) || rel_tol > 1e-2)
        throw DomainError("QuadratureConfig: rel_tol must lie in (0, 1e-2]");
    if (!positive(u_max) || u_max < 10.0)
        throw DomainError("QuadratureConfig: u_max must be >= 10 for a credible truncation");
    if (!positive(u_scale))
        throw DomainError("QuadratureConfig: u_scale must be > 0");
    if (!positive(matsubara_term_rel) || matsubara_max_terms < 10)
        throw DomainError("QuadratureConfig: bad Matsubara truncation parameters");
    if (!positive(poisson_rel_tol) || poisson_max_m < 2)
        throw DomainError("QuadratureConfig: bad Poisson truncation parameters");
    if (!(energy_upper_factor >= 1e4))
        throw DomainError("QuadratureConfig: energy_upper_factor must be >= 1e4");
    if (!(energy_extension_factor >= 10.0))
        throw DomainError("QuadratureConfig: energy_extension_factor must be >= 10");
    if (!positive(energy_convergence_limit))
        throw DomainError("QuadratureConfig: energy_convergence_limit must be > 0");
    if (max_panels < 16)
        throw DomainError("QuadratureConfig: max_panels must be >= 16");
}

std::uint64_t config_hash(const QuadratureConfig& cfg) noexcept {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "rel_tol=%.17g;u_max=%.17g;u_scale=%.17g;mats=%.17g/%d;"
                  "poisson=%.17g/%d;energy=%.17g/%.17g/%.17g;panels=%d",
                  cfg.rel_tol, cfg.u_max, cfg.u_scale, cfg.matsubara_term_rel,
                  cfg.matsubara_max_terms, cfg.poisson_rel_tol, cfg.poisson_max_m,
                  cfg.energy_upper_factor, cfg.energy_extension_factor,
                  cfg.energy_convergence_limit, cfg.max_panels);

    std::uint64_t h = 1469598103934665603ull; // FNV offset basis
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 1099511628211ull; // FNV prime
    }
    return h;
}

} // namespace casimir
