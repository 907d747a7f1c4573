#include <algorithm>
#include <tuple>

#include "doctest.h"
#include "helpers.hpp"
#include "rcover/gen.hpp"
#include "rcover/oracle.hpp"

using namespace rcover;

namespace {

bool is_cut_kind(ProblemKind kind) {
  return kind == ProblemKind::min_cut || kind == ProblemKind::multicut;
}

// Exact residual cover cost of `demands` once `chosen` items are free,
// derived independently of the oracle: brute force over item subsets with the
// chosen costs zeroed out.
Rat brute_residual(const Instance& inst, const std::vector<int>& chosen,
                   const std::vector<int>& demands) {
  if (inst.kind == ProblemKind::set_cover) {
    int m = (int)inst.sets.size();
    Rat best = -1;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
      Rat cost = 0;
      std::vector<char> covered(inst.universe, 0);
      for (int j = 0; j < m; ++j)
        if (mask >> j & 1) {
          if (!std::binary_search(chosen.begin(), chosen.end(), j)) cost += inst.set_cost[j];
          for (int e : inst.sets[j]) covered[e] = 1;
        }
      bool ok = true;
      for (int d : demands)
        if (!covered[d]) ok = false;
      if (ok && (best < 0 || cost < best)) best = cost;
    }
    return best;
  }
  WeightedGraph g = inst.graph;
  for (int e : chosen) g.edges[e].cost = 0;
  std::vector<std::pair<int, int>> want;
  for (int d : demands) {
    if (inst.kind == ProblemKind::steiner_tree)
      want.emplace_back(steiner_root(inst), inst.terminals[d]);
    else if (inst.kind == ProblemKind::min_cut)
      want.emplace_back(inst.root, inst.terminals[d]);
    else
      want.push_back(inst.pairs[d]);
  }
  return is_cut_kind(inst.kind) ? test::brute_force_separating_cost(g, want)
                                : test::brute_force_connecting_cost(g, want);
}

// The whole robust objective from scratch: every first-stage subset against
// every scenario.
Rat brute_robust_objective(const Instance& inst) {
  int m = item_count(inst);
  auto scenarios = k_subsets(demand_count(inst), inst.k, 100000);
  Rat best = -1;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> items;
    for (int j = 0; j < m; ++j)
      if (mask >> j & 1) items.push_back(j);
    Rat worst = 0;
    for (const auto& d : scenarios) {
      Rat r = brute_residual(inst, items, d);
      if (r > worst) worst = r;
    }
    Rat obj = items_first_cost(inst, items) + inst.lambda * worst;
    if (best < 0 || obj < best) best = obj;
  }
  return best;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("k_subsets enumerates lexicographically and refuses past the cap") {
  auto s = k_subsets(4, 2, 100);
  std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(s == want);
  CHECK(k_subsets(4, 2, 6).size() == 6);
  CHECK_THROWS_AS(k_subsets(4, 2, 5), OracleRefusal);
  CHECK_THROWS_AS(k_subsets(20, 10, 1000), OracleRefusal);
}

TEST_CASE("exact Steiner tree against edge-subset brute force") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenConfig cfg;
    cfg.kind = ProblemKind::steiner_tree;
    cfg.n = 6;
    cfg.demands = 3;
    Instance inst = generate_instance(cfg, seed);
    if (inst.graph.edges.size() > 12) continue;
    std::vector<int> terms = inst.terminals;
    terms.push_back(inst.root);
    std::vector<std::pair<int, int>> want;
    for (size_t i = 1; i < terms.size(); ++i) want.emplace_back(terms[0], terms[i]);
    CHECK(exact_steiner_tree_cost(inst.graph, terms) ==
          test::brute_force_connecting_cost(inst.graph, want));
  }
  // duplicate terminals collapse
  WeightedGraph g = make_graph(3, {{0, 1, Rat(2)}, {1, 2, Rat(3)}});
  CHECK(exact_steiner_tree_cost(g, {0, 2, 0, 2}) == Rat(5));
}

TEST_CASE("exact forest and multicut against brute force") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.demands = 3;
    cfg.kind = ProblemKind::steiner_forest;
    Instance forest = generate_instance(cfg, seed);
    if (forest.graph.edges.size() <= 12)
      CHECK(exact_steiner_forest_cost(forest.graph, forest.pairs) ==
            test::brute_force_connecting_cost(forest.graph, forest.pairs));

    cfg.kind = ProblemKind::multicut;
    Instance cut = generate_instance(cfg, seed);
    if (cut.graph.edges.size() <= 12)
      CHECK(exact_multicut_cost(cut.graph, cut.pairs) ==
            test::brute_force_separating_cost(cut.graph, cut.pairs));
  }
}

TEST_CASE("exact cover returns a certified witness") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (ProblemKind kind :
         {ProblemKind::set_cover, ProblemKind::steiner_tree, ProblemKind::steiner_forest,
          ProblemKind::min_cut, ProblemKind::multicut}) {
      GenConfig cfg;
      cfg.kind = kind;
      cfg.n = 5;
      cfg.sets = 5;
      cfg.demands = 2;
      cfg.k = 2;
      Instance inst = generate_instance(cfg, seed);
      if (item_count(inst) > 10) continue;
      std::vector<int> d = demand_count(inst) >= 2 ? std::vector<int>{0, 1}
                                                   : std::vector<int>{0};
      ExactCover cover = exact_cover(inst, d);
      CHECK(covers(inst, cover.items, d));
      CHECK(items_cost(inst, cover.items) == cover.cost);
      CHECK(cover.cost == brute_residual(inst, {}, d));
    }
  }
}

TEST_CASE("exact robust optimum re-derived from scratch") {
  int ran = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (ProblemKind kind :
         {ProblemKind::set_cover, ProblemKind::steiner_tree, ProblemKind::steiner_forest,
          ProblemKind::min_cut, ProblemKind::multicut}) {
      GenConfig cfg;
      cfg.kind = kind;
      cfg.n = 5;
      cfg.sets = 5;
      cfg.demands = 2;
      cfg.k = 1 + int(seed % 2);
      cfg.lambda = Rat(1 + (long)(seed % 2));
      cfg.nonuniform = kind == ProblemKind::set_cover && seed == 4;
      if (cfg.nonuniform) cfg.lambda = 1;
      Instance inst = generate_instance(cfg, seed);
      if (item_count(inst) > 7) continue;
      ExactRobustResult opt = exact_robust_opt(inst);
      CHECK(opt.objective == brute_robust_objective(inst));
      ran++;
    }
  }
  CHECK(ran >= 10);
}

TEST_CASE("oracle bookkeeping ties its own fields together") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (ProblemKind kind : {ProblemKind::set_cover, ProblemKind::steiner_tree,
                             ProblemKind::min_cut, ProblemKind::multicut}) {
      GenConfig cfg;
      cfg.kind = kind;
      cfg.n = 5;
      cfg.sets = 6;
      cfg.demands = 3;
      cfg.k = 2;
      cfg.lambda = Rat(2);
      Instance inst = generate_instance(cfg, seed);
      ExactRobustResult opt = exact_robust_opt(inst);
      CHECK(opt.objective == opt.first_stage_cost + inst.lambda * opt.worst_augment_cost);
      CHECK(opt.first_stage_cost == items_first_cost(inst, opt.first_stage));
      CHECK((int)opt.worst_scenario.size() <= inst.k);
      if (item_count(inst) <= 10)
        CHECK(opt.worst_augment_cost == brute_residual(inst, opt.first_stage, opt.worst_scenario));
    }
  }
}

TEST_CASE("robust optimum equals the max-min value at lambda = 1") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (ProblemKind kind :
         {ProblemKind::set_cover, ProblemKind::steiner_tree, ProblemKind::steiner_forest,
          ProblemKind::min_cut, ProblemKind::multicut}) {
      GenConfig cfg;
      cfg.kind = kind;
      cfg.n = 5;
      cfg.sets = 5;
      cfg.demands = 2;
      cfg.k = 1 + int(seed % 2);
      Instance inst = generate_instance(cfg, seed);
      CHECK(exact_robust_opt(inst).objective == exact_maxmin_value(inst).value);
    }
  }
}

TEST_CASE("max-min value: witnesses, monotonicity, saturation") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GenConfig cfg;
    cfg.kind = ProblemKind::min_cut;
    cfg.n = 6;
    cfg.demands = 4;
    cfg.k = 2;
    Instance inst = generate_instance(cfg, seed);
    ExactMaxMinResult r = exact_maxmin_value(inst);
    CHECK((int)r.scenario.size() <= inst.k);
    CHECK(exact_cover_cost(inst, r.scenario) == r.value);
    CHECK(std::is_sorted(r.scenario.begin(), r.scenario.end()));

    // lexicographically first maximizer
    bool seen_own = false;
    for (const auto& d : k_subsets(demand_count(inst), inst.k, 1000)) {
      if (d == r.scenario) {
        seen_own = true;
        break;
      }
      CHECK(exact_cover_cost(inst, d) < r.value);
    }
    CHECK(seen_own);

    Instance bigger = inst;
    bigger.k = 3;
    CHECK(exact_maxmin_value(bigger).value >= r.value);

    Instance all = inst;
    all.k = demand_count(inst);
    std::vector<int> every(demand_count(inst));
    for (int i = 0; i < (int)every.size(); ++i) every[i] = i;
    CHECK(exact_maxmin_value(all).value == exact_cover_cost(inst, every));
  }
}

TEST_CASE("oracles refuse instances beyond their caps") {
  // Steiner tree: too many terminals, then too many vertices
  std::vector<std::tuple<int, int, Rat>> star;
  for (int v = 1; v <= 14; ++v) star.emplace_back(0, v, Rat(1));
  WeightedGraph star_g = make_graph(15, star);
  std::vector<int> terms;
  for (int v = 1; v <= 14; ++v) terms.push_back(v);
  CHECK_THROWS_AS(exact_steiner_tree_cost(star_g, terms), OracleRefusal);

  std::vector<std::tuple<int, int, Rat>> path;
  for (int v = 0; v + 1 < 70; ++v) path.emplace_back(v, v + 1, Rat(1));
  WeightedGraph path_g = make_graph(70, path);
  CHECK_THROWS_AS(exact_steiner_tree_cost(path_g, {0, 69}), OracleRefusal);

  // unreachable terminals are an input error, not a size refusal
  WeightedGraph split = make_graph(4, {{0, 1, Rat(1)}, {2, 3, Rat(1)}});
  CHECK_THROWS_AS(exact_steiner_tree_cost(split, {0, 2}), std::invalid_argument);

  // forest: pair cap
  std::vector<std::pair<int, int>> many_pairs;
  for (int v = 1; v <= 14; v += 2) many_pairs.emplace_back(v, v + 1);
  CHECK_THROWS_AS(exact_steiner_forest_cost(star_g, many_pairs), OracleRefusal);

  // multicut: edge cap
  std::vector<std::tuple<int, int, Rat>> dense;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v)
      if ((int)dense.size() < 19) dense.emplace_back(u, v, Rat(1));
  WeightedGraph dense_g = make_graph(7, dense);
  CHECK(dense_g.edges.size() == 19);
  CHECK_THROWS_AS(exact_multicut_cost(dense_g, {{0, 6}}), OracleRefusal);

  // robust oracle: scenario explosion on an 18-edge star
  std::vector<std::tuple<int, int, Rat>> wide;
  for (int v = 1; v <= 18; ++v) wide.emplace_back(0, v, Rat(1));
  WeightedGraph wide_g = make_graph(19, wide);
  std::vector<int> wide_terms;
  for (int v = 1; v <= 18; ++v) wide_terms.push_back(v);
  Instance big_cut = test::mincut_instance(wide_g, 0, wide_terms, 9);
  CHECK_THROWS_AS(exact_robust_opt(big_cut), OracleRefusal);

  // robust oracle: multicut has the tighter edge cap
  std::vector<std::tuple<int, int, Rat>> fifteen;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) fifteen.emplace_back(u, v, Rat(1));
  WeightedGraph fifteen_g = make_graph(6, fifteen);
  Instance mc = test::multicut_instance(fifteen_g, {{0, 5}}, 1);
  CHECK_THROWS_AS(exact_robust_opt(mc), OracleRefusal);
  Instance rc = test::mincut_instance(fifteen_g, 0, {5}, 1);
  CHECK(exact_robust_opt(rc).objective >= Rat(0));  // 15 edges fit the general cap
}

TEST_SUITE_END();
