#include <benchmark/benchmark.h>

#include <nashkit/counting.hpp>

using namespace nashkit;

namespace {

Format binary(int n) { return Format(std::vector<int>(static_cast<std::size_t>(n), 2)); }

void BM_ChowBinary(benchmark::State& state) {
  Format f = binary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c_chow(f));
}
BENCHMARK(BM_ChowBinary)->DenseRange(4, 12, 4);

void BM_GenfunBinary(benchmark::State& state) {
  Format f = binary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c_genfun(f));
}
BENCHMARK(BM_GenfunBinary)->Arg(4)->Arg(8)->Arg(10);

void BM_DerangeBinary(benchmark::State& state) {
  Format f = binary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c_derangements(f));
}
BENCHMARK(BM_DerangeBinary)->DenseRange(4, 8, 2);

void BM_ChowCube(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  Format f{d, d, d};
  for (auto _ : state) benchmark::DoNotOptimize(c_chow(f));
}
BENCHMARK(BM_ChowCube)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
