#include <benchmark/benchmark.h>

#include "qwiso/fourier.hpp"
#include "qwiso/oracle.hpp"
#include "qwiso/recovery.hpp"
#include "qwiso/spectral.hpp"
#include "qwiso/walk.hpp"

namespace {

using namespace qwiso;

CirculantGraph paley(const benchmark::State& state) {
  return CirculantGraph(paley_connection_set(static_cast<int>(state.range(0))));
}

void BM_WalkOperator(benchmark::State& state) {
  const auto g = paley(state);
  for (auto _ : state) benchmark::DoNotOptimize(walk_operator(g));
}

void BM_BlockDecompose(benchmark::State& state) {
  const auto w = walk_operator(paley(state));
  for (auto _ : state) benchmark::DoNotOptimize(block_decompose(w));
}

void BM_BlocksDirect(benchmark::State& state) {
  const auto g = paley(state);
  for (auto _ : state) benchmark::DoNotOptimize(blocks_direct(g));
}

void BM_GlobalCharPoly(benchmark::State& state) {
  const auto blocks = blocks_direct(paley(state));
  for (auto _ : state) benchmark::DoNotOptimize(global_char_poly(blocks));
}

void BM_SpectralRoundTrip(benchmark::State& state) {
  const auto g = paley(state);
  for (auto _ : state) benchmark::DoNotOptimize(full_pipeline_from_spectra(g));
}

void BM_DenseOracle(benchmark::State& state) {
  const auto w = walk_operator(paley(state));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::char_poly_oracle(w));
}

#define PALEY_ARGS Arg(13)->Arg(17)->Arg(29)->Arg(41)->Unit(benchmark::kMillisecond)

BENCHMARK(BM_WalkOperator)->PALEY_ARGS;
BENCHMARK(BM_BlockDecompose)->PALEY_ARGS;
BENCHMARK(BM_BlocksDirect)->PALEY_ARGS;
BENCHMARK(BM_GlobalCharPoly)->PALEY_ARGS;
BENCHMARK(BM_SpectralRoundTrip)->PALEY_ARGS;
BENCHMARK(BM_DenseOracle)->PALEY_ARGS;

}  // namespace
BENCHMARK_MAIN();
