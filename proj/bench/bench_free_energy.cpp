// Serial reference vs OpenMP Matsubara summation. With one core the two
// should run at about the same speed; the parallel path pays for the
// reduction bookkeeping only.

#include <benchmark/benchmark.h>

#include "casimir/lifshitz.hpp"
#include "casimir/thermo.hpp"

using namespace casimir;

namespace {

const Reflector& drude() {
  static const Reflector r(PermittivityModel(au::drude()));
  return r;
}

void BM_FreeEnergy(benchmark::State& state, Execution exec) {
  const auto sys = make_plate_system(1e-6, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(free_energy(drude(), sys, {}, exec).value);
  state.counters["l_max"] = static_cast<double>(free_energy(drude(), sys, {}, exec).l_max_used);
}

void BM_Serial(benchmark::State& s) { BM_FreeEnergy(s, Execution::Serial); }
void BM_Parallel(benchmark::State& s) { BM_FreeEnergy(s, Execution::Parallel); }

void BM_Pressure(benchmark::State& state, Execution exec) {
  for (auto _ : state) benchmark::DoNotOptimize(pressure(drude(), 1e-6, 30.0, {}, {}, exec).value);
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(3)->Arg(30)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Arg(3)->Arg(30)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pressure, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Pressure, parallel, Execution::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
