#include <benchmark/benchmark.h>

#include "shockprof/profile.hpp"

using namespace shockprof;

namespace {

const BarotropicEos &rad() {
    static const auto eos = BarotropicEos::radiation();
    return eos;
}

ShockData shock(double s) { return end_states(shock_from_strength(3.0, s, rad()), rad()); }

void BM_EndStates(benchmark::State &state) {
    const FluxConstants q = shock_from_strength(3.0, 0.5, rad());
    for (auto _ : state) benchmark::DoNotOptimize(end_states(q, rad()));
}
BENCHMARK(BM_EndStates);

void BM_EndStatesPowerSum(benchmark::State &state) {
    const auto eos = BarotropicEos::power_sum({{1.0 / 3.0, 4.0}, {0.5, 3.0}});
    const FluxConstants q = shock_from_strength(3.0, 0.5, eos);
    for (auto _ : state) benchmark::DoNotOptimize(end_states(q, eos));
}
BENCHMARK(BM_EndStatesPowerSum);

void BM_CharSpeeds(benchmark::State &state) {
    const FluidState s = FluidState::from_temperature_velocity(1.2, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(char_speeds(s, rad()));
}
BENCHMARK(BM_CharSpeeds);

void BM_ScalarProfile(benchmark::State &state) {
    const ShockData sh = shock(0.01 * static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(scalar_profile_ft(sh, rad(), {1.0, 0.0, 0.0}));
}
BENCHMARK(BM_ScalarProfile)->Arg(5)->Arg(50)->Arg(95)->Unit(benchmark::kMillisecond);

void BM_PlanarShootingFt(benchmark::State &state) {
    const ShockData sh = shock(0.01 * static_cast<double>(state.range(0)));
    const auto model = DissipationModel::ft({1.0, 0.0, 0.5});
    for (auto _ : state) benchmark::DoNotOptimize(shoot_heteroclinic(model, sh, rad()));
}
BENCHMARK(BM_PlanarShootingFt)->Arg(5)->Arg(50)->Arg(95)->Unit(benchmark::kMillisecond);

void BM_PlanarShootingBdn(benchmark::State &state) {
    const ShockData sh = shock(0.01 * static_cast<double>(state.range(0)));
    const auto model = DissipationModel::bdn({1.0, 4.0 / 3.0, 4.0});
    for (auto _ : state) benchmark::DoNotOptimize(shoot_heteroclinic(model, sh, rad()));
}
BENCHMARK(BM_PlanarShootingBdn)->Arg(5)->Arg(50)->Arg(95)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
