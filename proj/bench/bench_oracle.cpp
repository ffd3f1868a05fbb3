// Serial reference against the OpenMP bracket table, plus the reduction engine.

#include "catalan/coeff.hpp"
#include "catalan/kauffman.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace catalan;

void BM_BracketSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_table_serial(m, n));
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << (m * n)));
}

void BM_BracketParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(bracket_table(m, n));
  state.SetItemsProcessed(state.iterations() * (int64_t{1} << (m * n)));
}

void BM_EngineSweep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  auto states = enumerate_catalan(m, n);
  OracleOptions no_oracle;
  no_oracle.budget_bits = 0;
  for (auto _ : state) {
    CoefficientEngine engine(no_oracle);
    for (const auto& c : states) {
      try {
        benchmark::DoNotOptimize(engine.value(c));
      } catch (const BudgetExceeded&) {
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(states.size()));
}

}  // namespace

BENCHMARK(BM_BracketSerial)->Args({3, 3})->Args({4, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BracketParallel)->Args({3, 3})->Args({4, 4})->Args({4, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EngineSweep)->Args({4, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
