// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ppk/analysis.hpp"
#include "ppk/oracle.hpp"
#include "ppk/synth.hpp"

namespace {

void BM_build_Pj_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::build_Pj_serial(2, static_cast<unsigned>(state.range(0))));
}
void BM_build_Pj_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::build_Pj(2, static_cast<unsigned>(state.range(0))));
}

void BM_verify_rows_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::verify_rows_serial(3, state.range(0)));
}
void BM_verify_rows_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::verify_rows(3, state.range(0)));
}

void BM_scan_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::scan_convergent_words_serial(static_cast<unsigned>(state.range(0))));
}
void BM_scan_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::scan_convergent_words(static_cast<unsigned>(state.range(0))));
}

void BM_column_histogram_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::column_histogram_serial(37, 4, state.range(0)));
}
void BM_column_histogram_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ppk::column_histogram(37, 4, state.range(0)));
}

}  // namespace

BENCHMARK(BM_build_Pj_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_build_Pj_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_rows_serial)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_rows_parallel)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_column_histogram_serial)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_column_histogram_parallel)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
