#include <benchmark/benchmark.h>

#include <nashkit/homotopy.hpp>
#include <nashkit/random_game.hpp>

using namespace nashkit;

namespace {

void solve_format(benchmark::State& state, const Format& f) {
  Game g = random_game(f, 11, 10);
  std::size_t paths = 0;
  for (auto _ : state) {
    SolveResult r = solve(g);
    paths += static_cast<std::size_t>(r.report.paths);
    benchmark::DoNotOptimize(r.solutions.data());
  }
  state.counters["paths/s"] = benchmark::Counter(static_cast<double>(paths), benchmark::Counter::kIsRate);
}

void BM_Solve222(benchmark::State& state) { solve_format(state, Format{2, 2, 2}); }
void BM_Solve333(benchmark::State& state) { solve_format(state, Format{3, 3, 3}); }
void BM_Solve2222(benchmark::State& state) { solve_format(state, Format{2, 2, 2, 2}); }
void BM_Solve444(benchmark::State& state) { solve_format(state, Format{4, 4, 4}); }
BENCHMARK(BM_Solve222);
BENCHMARK(BM_Solve333);
BENCHMARK(BM_Solve2222);
BENCHMARK(BM_Solve444);

void BM_StartSystem(benchmark::State& state) {
  Format f{3, 3, 3};
  for (auto _ : state) benchmark::DoNotOptimize(build_start_system(f, 1).solutions.size());
}
BENCHMARK(BM_StartSystem);

}  // namespace
