// Serial vs OpenMP kernels. Arg 0 is the thread count (0 = all).

#include <benchmark/benchmark.h>

#include "affcurve/affine_perm.hpp"
#include "affcurve/oracle.hpp"

using namespace affcurve;

namespace {

void BM_NeighborhoodBfs(benchmark::State& state) {
  OracleOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  const auto id = AffinePerm::identity(4);
  const Degree d(std::vector<Int>{2, 2, 1, 1});
  std::size_t states = 0;
  for (auto _ : state) {
    auto run = neighborhood_bfs(id, d, opts);
    states = run.state_count();
    benchmark::DoNotOptimize(run.result().elements.data());
  }
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_NeighborhoodBfs)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

// Candidates: every element of length <= 6 in rank 3.
std::vector<AffinePerm> bruhat_input() {
  std::vector<AffinePerm> all{AffinePerm::identity(3)};
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k].length() >= 6) continue;
    for (int i = 0; i < 3; ++i) {
      if (all[k].has_right_descent(i)) continue;
      auto next = all[k].times_simple(i);
      if (std::find(all.begin(), all.end(), next) == all.end()) all.push_back(std::move(next));
    }
  }
  return all;
}

void BM_BruhatMaximal(benchmark::State& state) {
  const auto input = bruhat_input();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto top = bruhat_maximal(input, threads);
    benchmark::DoNotOptimize(top.data());
  }
  state.counters["inputs"] = static_cast<double>(input.size());
}
BENCHMARK(BM_BruhatMaximal)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
