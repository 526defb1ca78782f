#include <benchmark/benchmark.h>

#include <nashkit/random_game.hpp>
#include <nashkit/resultant.hpp>

using namespace nashkit;

namespace {

void BM_Expand224(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nash_resultant_expand(Format{2, 2, 4}).terms);
}
BENCHMARK(BM_Expand224)->Unit(benchmark::kMillisecond);

void BM_PartialXDet(benchmark::State& state) {
  Game g = random_game(Format{2, 3, 5}, 4, 10);
  for (auto _ : state) benchmark::DoNotOptimize(partial_x_det(g));
}
BENCHMARK(BM_PartialXDet);

}  // namespace
