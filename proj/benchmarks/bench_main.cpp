#include <benchmark/benchmark.h>

#include "mlspec/admissible.hpp"
#include "mlspec/dimension.hpp"
#include "mlspec/spectra_facts.hpp"
#include "mlspec/symbolic.hpp"
#include "mlspec/tower.hpp"

using namespace mlspec;

static void BM_Continuant(benchmark::State& state) {
  Word w = Word::repeat(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(continuant(w));
}
BENCHMARK(BM_Continuant)->Arg(20)->Arg(200)->Arg(2000);

static void BM_WindowBoundsAll(benchmark::State& state) {
  Word w = power(Word{2, 1, 1, 2}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(window_bounds_all(w, 3));
}
BENCHMARK(BM_WindowBoundsAll)->Arg(4)->Arg(16);

static void BM_EnumerateOver(benchmark::State& state) {
  QuadraticSurd t = QuadraticSurd::sqrt(Rational(12));
  EnumerationOptions o;
  o.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(t, static_cast<unsigned>(state.range(0)), FamilyMode::Over, o));
  }
}
BENCHMARK(BM_EnumerateOver)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_CantorBracket(benchmark::State& state) {
  std::vector<Word> blocks{Word{1}, Word{2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor_bracket(blocks, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_CantorBracket)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SpectrumDimension(benchmark::State& state) {
  QuadraticSurd t = 3 + QuadraticSurd(Rational(1, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_dimension(t, static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_SpectrumDimension)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_HallCoverage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hall_coverage(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_HallCoverage)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_TowerCompare(benchmark::State& state) {
  Rational bound = pow(Rational(21), 6);
  for (auto _ : state) benchmark::DoNotOptimize(tower_compare(tower(20), bound));
}
BENCHMARK(BM_TowerCompare);

BENCHMARK_MAIN();
