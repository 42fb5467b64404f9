#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "ccindex/game_file.hpp"
#include "ccindex/indices.hpp"
#include "ccindex/oracle.hpp"
#include "ccindex/random_instance.hpp"

namespace {

using namespace ccindex;

ConfiguredGame example35() { return validate(3, {1, 2, 2, 1}, {{0, 1, 2}, {1, 2}, {2, 3}}); }

ConfiguredGame eu28() {
  return to_configured_game(read_game_file(std::string(CCINDEX_BENCH_DATA_DIR) + "/eu28.json"));
}

ConfiguredGame random_case(std::size_t p, std::size_t c) {
  std::mt19937_64 rng(1000 * p + c);
  return random_instance(
      InstanceShape{p, c, 20, 1.0 / static_cast<double>(c + 1)}, rng);
}

void BM_EngineExample35(benchmark::State& state) {
  const auto cg = example35();
  for (auto _ : state) {
    benchmark::DoNotOptimize(banzhaf_coleman_cc(cg));
    benchmark::DoNotOptimize(configuration_index(cg));
  }
}
BENCHMARK(BM_EngineExample35);

void BM_OracleExample35(benchmark::State& state) {
  const auto cg = example35();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::oracle_banzhaf_cc(cg));
    benchmark::DoNotOptimize(oracle::oracle_configuration_index(cg));
  }
}
BENCHMARK(BM_OracleExample35);

void BM_EngineEu28(benchmark::State& state) {
  const auto cg = eu28();
  for (auto _ : state) {
    benchmark::DoNotOptimize(banzhaf_coleman_cc(cg));
    benchmark::DoNotOptimize(configuration_index(cg));
  }
}
BENCHMARK(BM_EngineEu28)->Unit(benchmark::kMillisecond);

void BM_EngineRandom(benchmark::State& state) {
  const auto cg = random_case(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(configuration_index(cg));
}
BENCHMARK(BM_EngineRandom)
    ->ArgsProduct({{8, 12, 16}, {3, 5}})
    ->ArgsProduct({{28}, {7}})
    ->Unit(benchmark::kMicrosecond);

void BM_OracleRandom(benchmark::State& state) {
  const auto cg = random_case(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_configuration_index(cg));
}
BENCHMARK(BM_OracleRandom)->ArgsProduct({{8, 12}, {3, 5}})->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
