// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "palstar/counting.hpp"
#include "palstar/enumeration.hpp"
#include "palstar/factorizer.hpp"
#include "palstar/gf_analysis.hpp"
#include "palstar/words.hpp"

namespace {

using namespace palstar;

bool unbordered(SymbolSpan w) { return is_unbordered(w); }

void BM_CountUnbordered_Serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::count_words_if(Alphabet(2), n, unbordered));
  }
}

void BM_CountUnbordered_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_words_if(Alphabet(2), n, unbordered));
  }
}

void BM_CountPalstars_Serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::count_words_if(
        Alphabet(2), 2 * n, [](SymbolSpan w) { return is_palstar(w); }));
  }
}

void BM_CountPalstars_Parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        count_words_if(Alphabet(2), 2 * n, [](SymbolSpan w) { return is_palstar(w); }));
  }
}

void BM_CauchyProduct_Serial(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const CountSequence u = u_sequence(3, N);
  const CountSequence p = p_sequence(3, N);
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::cauchy_product(u.terms, p.terms, N));
  }
}

void BM_CauchyProduct_Parallel(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const CountSequence u = u_sequence(3, N);
  const CountSequence p = p_sequence(3, N);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_product(u.terms, p.terms, N));
  }
}

void BM_CircleScan_Serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::circle_scan(2, static_cast<int>(state.range(0))));
  }
}

void BM_CircleScan_Parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(circle_scan(2, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_CountUnbordered_Serial)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountUnbordered_Parallel)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPalstars_Serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountPalstars_Parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyProduct_Serial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CauchyProduct_Parallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircleScan_Serial)->Arg(360)->Arg(1440)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircleScan_Parallel)->Arg(360)->Arg(1440)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
