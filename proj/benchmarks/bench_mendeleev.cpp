#include <benchmark/benchmark.h>

#include "mendeleev/chemistry.hpp"
#include "mendeleev/ladders.hpp"
#include "mendeleev/quantum_address.hpp"

using namespace mendeleev;

static void BM_ZFromAddress(benchmark::State& state) {
  const auto houses = oracle_enumerate(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AtomicNumber sum = 0;
    for (const auto& e : houses) sum += z_from_address(e.address);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(houses.size()));
}
BENCHMARK(BM_ZFromAddress)->Arg(12)->Arg(24);

static void BM_AddressFromZ(benchmark::State& state) {
  const auto max_z = state.range(0);
  for (auto _ : state) {
    for (AtomicNumber z = 1; z <= max_z; ++z) benchmark::DoNotOptimize(address_from_z(z));
  }
  state.SetItemsProcessed(state.iterations() * max_z);
}
BENCHMARK(BM_AddressFromZ)->Arg(1000)->Arg(10000);

static void BM_OracleEnumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_enumerate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OracleEnumerate)->Arg(12)->Arg(30);

static void BM_Taxi(benchmark::State& state) {
  const HouseAddress from(1, 0, 1, -1);
  const HouseAddress to(static_cast<int>(state.range(0)), 3, 7, 7);
  for (auto _ : state) benchmark::DoNotOptimize(taxi(from, to));
}
BENCHMARK(BM_Taxi)->Arg(4)->Arg(16);

static void BM_Configuration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_configuration(state.range(0)));
}
BENCHMARK(BM_Configuration)->Arg(118)->Arg(1000);
BENCHMARK_MAIN();
