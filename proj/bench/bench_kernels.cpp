#include "jastrow1d/energy_kernels.hpp"
#include "jastrow1d/jastrow.hpp"

#include <benchmark/benchmark.h>

using namespace jastrow1d;

namespace {

const JastrowAnsatz &ansatz() {
    static const JastrowAnsatz a(3, Statistics::bosons, 0.95,
                                 solve_relative(Interaction::make(InteractionKind::quasi1d_coulomb, 0.5, 0.1), 15,
                                                Parity::even));
    return a;
}

void kinetic(benchmark::State &state, Backend backend) {
    const auto gh = gauss_hermite_rule(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::kinetic_sums(ansatz(), gh, 4.3, backend));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}

void pair_potential(benchmark::State &state, Backend backend) {
    const auto gh = gauss_hermite_rule(static_cast<int>(state.range(0)));
    const auto radial = kernels::pair_radial_rule(ansatz());
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::pair_potential_sums(ansatz(), gh, radial, backend));
    }
}

void full_energy(benchmark::State &state, Backend backend) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(energy_at_order(ansatz(), static_cast<int>(state.range(0)), backend));
    }
}

} // namespace

BENCHMARK_CAPTURE(kinetic, serial, Backend::serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(kinetic, parallel, Backend::parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pair_potential, serial, Backend::serial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pair_potential, parallel, Backend::parallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_energy, serial, Backend::serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(full_energy, parallel, Backend::parallel)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
