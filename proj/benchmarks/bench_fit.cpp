#include <benchmark/benchmark.h>

#include <cmath>
#include <set>

#include "sgsvd/simulate.hpp"
#include "sgsvd/solver.hpp"

using namespace sgsvd;

namespace {

PriorGraph random_graph(Index n, Index edge_count, Rng& rng) {
  std::set<Edge> edges;
  while (static_cast<Index>(edges.size()) < edge_count) {
    const Index i = rng.index(n);
    const Index j = rng.index(n);
    if (i != j) edges.insert({std::min(i, j), std::max(i, j)});
  }
  return PriorGraph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

struct Problem {
  DenseMatrix x;
  PriorGraph rows;
  PriorGraph cols;
};

Problem make_problem(Index n) {
  SimSpec spec;
  spec.n = spec.p = n;
  spec.support_u = spec.support_v = n / 10;
  spec.p11 = spec.p12 = 0.0;
  spec.seed = 5;
  Rng rng(static_cast<std::uint64_t>(n));
  // Mean degree 10.
  PriorGraph rows = random_graph(n, 5 * n, rng);
  PriorGraph cols = random_graph(n, 5 * n, rng);
  return {gen_dataset(spec).x, std::move(rows), std::move(cols)};
}

// Fixed iteration count, so time per run is per-iteration cost times 20.
void BM_FitRankOneFixedIterations(benchmark::State& state) {
  const Index n = state.range(0);
  const Problem problem = make_problem(n);
  SolverConfig cfg;
  cfg.k_u = cfg.k_v = n / 10;
  cfg.sigma_u = cfg.sigma_v = 0.1;
  cfg.epsilon = 1e-300;
  cfg.max_iter = 20;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_rank_one(problem.x, problem.rows, problem.cols, cfg));
  }
  state.SetComplexityN(n * n);
}
BENCHMARK(BM_FitRankOneFixedIterations)
    ->Arg(125)
    ->Arg(250)
    ->Arg(500)
    ->Arg(1000)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_UpdateL0(benchmark::State& state) {
  const Index p = state.range(0);
  Rng rng(1);
  Vector z(p);
  for (Index j = 0; j < p; ++j) z[j] = rng.normal();
  const PriorGraph g = random_graph(p, 5 * p, rng);
  const Vector prev = Vector::Ones(p) / std::sqrt(static_cast<double>(p));
  for (auto _ : state) {
    benchmark::DoNotOptimize(update_l0(z, g, prev, p / 10, 0.1, {}));
  }
  state.SetComplexityN(p);
}
BENCHMARK(BM_UpdateL0)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

}  // namespace
BENCHMARK_MAIN();
