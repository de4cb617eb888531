#include <benchmark/benchmark.h>

#include "casimir/energy.hpp"
#include "casimir/optics.hpp"
#include "casimir/spectral.hpp"
#include "casimir/thermal.hpp"
#include "casimir/units.hpp"

namespace {

using namespace casimir;

const units::Mirror al = units::material_preset("Al");
const units::ThermalState t300 = units::thermal_state(300.0);
const units::CavityGeometry cavity{1e-6, 1.0};
const QuadratureConfig config;

void BM_loop_reflectivity(benchmark::State& state) {
    const optics::SpectralPoint point{1e15, 5e6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(optics::loop_reflectivity(point, al));
    }
}
BENCHMARK(BM_loop_reflectivity);

void BM_spectral_density(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectral::spectral_density(t300.omega_T, al, cavity, config));
    }
}
BENCHMARK(BM_spectral_density);

void BM_force_matsubara(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal::force_matsubara(cavity, al, t300, config));
    }
}
BENCHMARK(BM_force_matsubara);

void BM_force_vacuum(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal::force_vacuum(cavity, al, config));
    }
}
BENCHMARK(BM_force_vacuum);

void BM_force_poisson(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermal::force_poisson(cavity, al, t300, config));
    }
}
BENCHMARK(BM_force_poisson);

void BM_free_energy(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy::free_energy(cavity, al, t300, config));
    }
}
BENCHMARK(BM_free_energy);

} // namespace

BENCHMARK_MAIN();
