// Microbenchmarks for the kernels the solvers lean on. Instances are
// generated outside the timed loop; sizes are picked so a full run stays
// under a minute on one core.
#include <benchmark/benchmark.h>

#include <numeric>
#include <utility>
#include <vector>

#include "rcover/cuts.hpp"
#include "rcover/fractional.hpp"
#include "rcover/gen.hpp"
#include "rcover/lp.hpp"
#include "rcover/maxflow.hpp"
#include "rcover/oracle.hpp"
#include "rcover/setcover.hpp"
#include "rcover/solve.hpp"
#include "rcover/steiner.hpp"

using namespace rcover;

namespace {

Instance graph_instance(ProblemKind kind, int n, int demands, std::uint64_t seed) {
  GenConfig cfg;
  cfg.kind = kind;
  cfg.n = n;
  cfg.demands = demands;
  cfg.k = 2;
  cfg.edge_probability = Rat(1, 4);
  return generate_instance(cfg, seed);
}

void bm_shortest_paths(benchmark::State& state) {
  Instance inst = graph_instance(ProblemKind::steiner_tree, int(state.range(0)), 4, 11);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_paths(inst.graph, {0}));
}
BENCHMARK(bm_shortest_paths)->Arg(16)->Arg(64)->Arg(256);

void bm_max_flow(benchmark::State& state) {
  Instance inst = graph_instance(ProblemKind::min_cut, int(state.range(0)), 3, 12);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_flow_min_cut(inst.graph, {0}, {inst.graph.n - 1}));
}
BENCHMARK(bm_max_flow)->Arg(16)->Arg(48);

void bm_gomory_hu(benchmark::State& state) {
  Instance inst = graph_instance(ProblemKind::min_cut, int(state.range(0)), 3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(gomory_hu_tree(inst.graph));
}
BENCHMARK(bm_gomory_hu)->Arg(12)->Arg(24);

void bm_covering_lp(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = int(state.range(0));
  cfg.sets = int(state.range(0));
  Instance inst = generate_instance(cfg, 14);
  std::vector<std::vector<int>> rows(inst.universe);
  for (int s = 0; s < int(inst.sets.size()); ++s)
    for (int e : inst.sets[s]) rows[e].push_back(s);
  for (auto _ : state) benchmark::DoNotOptimize(solve_covering_lp(inst.set_cost, rows));
}
BENCHMARK(bm_covering_lp)->Arg(8)->Arg(16)->Arg(32);

void bm_greedy_cover(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = int(state.range(0));
  cfg.sets = int(state.range(0));
  Instance inst = generate_instance(cfg, 15);
  std::vector<int> all(inst.universe);
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(greedy_set_cover(inst, all, CostField::second));
}
BENCHMARK(bm_greedy_cover)->Arg(16)->Arg(64);

void bm_gw_forest(benchmark::State& state) {
  Instance inst =
      graph_instance(ProblemKind::steiner_forest, int(state.range(0)), int(state.range(0)) / 4, 16);
  for (auto _ : state) benchmark::DoNotOptimize(gw_steiner_forest(inst.graph, inst.pairs));
}
BENCHMARK(bm_gw_forest)->Arg(16)->Arg(32);

// The multiplicative-weights inner loop pays for its (1+eps_f) guarantee in
// shortest-path iterations, so this one is kept tiny.
void bm_fractional_multicut(benchmark::State& state) {
  Instance inst = graph_instance(ProblemKind::multicut, int(state.range(0)), 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(fractional_multicut(inst.graph, inst.pairs));
}
BENCHMARK(bm_fractional_multicut)->Arg(5)->Arg(7);

// One discriminating run at a representative threshold.
void bm_discriminating(benchmark::State& state, ProblemKind kind, int n, int demands) {
  Instance inst = kind == ProblemKind::set_cover
                      ? generate_instance(
                            [&] {
                              GenConfig cfg;
                              cfg.n = n;
                              cfg.sets = n;
                              cfg.k = 2;
                              return cfg;
                            }(),
                            18)
                      : graph_instance(kind, n, demands, 18);
  DiscriminatingAlgorithm algo = discriminating_algorithm(inst);
  Rat T = items_cost(inst, {0});
  for (auto _ : state) benchmark::DoNotOptimize(algo(inst, T));
}
void bm_disc_setcover(benchmark::State& s) { bm_discriminating(s, ProblemKind::set_cover, 24, 0); }
void bm_disc_tree(benchmark::State& s) { bm_discriminating(s, ProblemKind::steiner_tree, 24, 6); }
void bm_disc_forest(benchmark::State& s) {
  bm_discriminating(s, ProblemKind::steiner_forest, 24, 6);
}
void bm_disc_mincut(benchmark::State& s) { bm_discriminating(s, ProblemKind::min_cut, 24, 6); }
void bm_disc_multicut(benchmark::State& s) { bm_discriminating(s, ProblemKind::multicut, 10, 3); }
BENCHMARK(bm_disc_setcover);
BENCHMARK(bm_disc_tree);
BENCHMARK(bm_disc_forest);
BENCHMARK(bm_disc_mincut);
BENCHMARK(bm_disc_multicut);

// Full sweep including the threshold grid.
void bm_solve_robust_setcover(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = int(state.range(0));
  cfg.sets = int(state.range(0));
  cfg.k = 2;
  cfg.lambda = 2;
  Instance inst = generate_instance(cfg, 19);
  for (auto _ : state) benchmark::DoNotOptimize(solve_robust(inst, Rat(1, 10)));
}
BENCHMARK(bm_solve_robust_setcover)->Arg(10)->Arg(20);

void bm_exact_robust_opt(benchmark::State& state) {
  GenConfig cfg;
  cfg.n = 8;
  cfg.sets = int(state.range(0));
  cfg.k = 2;
  Instance inst = generate_instance(cfg, 20);
  for (auto _ : state) benchmark::DoNotOptimize(exact_robust_opt(inst));
}
BENCHMARK(bm_exact_robust_opt)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
