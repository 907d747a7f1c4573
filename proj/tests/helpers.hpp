#pragma once
// Shared test utilities: the driver's threshold sweep reconstructed from
// public pieces, and small exhaustive reference computations the suites use
// to cross-check library results.
#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rcover/framework.hpp"
#include "rcover/graph.hpp"
#include "rcover/instance.hpp"
#include "rcover/rational.hpp"

namespace rcover::test {

inline Instance make_setcover(int universe, std::vector<std::pair<Rat, std::vector<int>>> sets,
                              int k, const Rat& lambda = Rat(1)) {
  Instance inst;
  inst.kind = ProblemKind::set_cover;
  inst.universe = universe;
  for (auto& [cost, elems] : sets) {
    std::sort(elems.begin(), elems.end());
    inst.sets.push_back(elems);
    inst.set_cost.push_back(cost);
  }
  inst.k = k;
  inst.lambda = lambda;
  validate_instance(inst);
  return inst;
}

inline Instance graph_instance(ProblemKind kind, WeightedGraph g, int root,
                               std::vector<int> terminals, std::vector<std::pair<int, int>> pairs,
                               int k, const Rat& lambda = Rat(1)) {
  Instance inst;
  inst.kind = kind;
  inst.graph = std::move(g);
  inst.root = root;
  inst.terminals = std::move(terminals);
  inst.pairs = std::move(pairs);
  inst.k = k;
  inst.lambda = lambda;
  validate_instance(inst);
  return inst;
}

inline Instance tree_instance(const WeightedGraph& g, int root, std::vector<int> terminals, int k,
                              const Rat& lambda = Rat(1)) {
  return graph_instance(ProblemKind::steiner_tree, g, root, std::move(terminals), {}, k, lambda);
}

inline Instance mincut_instance(const WeightedGraph& g, int root, std::vector<int> terminals,
                                int k, const Rat& lambda = Rat(1)) {
  return graph_instance(ProblemKind::min_cut, g, root, std::move(terminals), {}, k, lambda);
}

inline Instance forest_instance(const WeightedGraph& g, std::vector<std::pair<int, int>> pairs,
                                int k, const Rat& lambda = Rat(1)) {
  return graph_instance(ProblemKind::steiner_forest, g, -1, {}, std::move(pairs), k, lambda);
}

inline Instance multicut_instance(const WeightedGraph& g, std::vector<std::pair<int, int>> pairs,
                                  int k, const Rat& lambda = Rat(1)) {
  return graph_instance(ProblemKind::multicut, g, -1, {}, std::move(pairs), k, lambda);
}

// First per-threshold invariant a DiscriminatingOutput violates, or "" when
// it is sound: recorded costs match the item lists, every augmentation fits
// under beta*T/k, and first stage + own augmentation covers each demand.
inline std::string discriminating_violation(const Instance& inst,
                                            const DiscriminatingOutput& out) {
  int d = demand_count(inst);
  if ((int)out.singleton_augment.size() != d || (int)out.augment_cost.size() != d)
    return "wrong demand arity";
  if (items_first_cost(inst, out.first_stage) != out.first_stage_cost)
    return "first stage cost mismatch";
  Rat bar = out.beta * out.T / inst.k;
  for (int i = 0; i < d; ++i) {
    if (items_cost(inst, out.singleton_augment[i]) != out.augment_cost[i])
      return "augment cost mismatch at " + demand_label(inst, i);
    if (out.augment_cost[i] > bar) return "augment above beta*T/k at " + demand_label(inst, i);
    std::vector<int> both = merge_edge_sets({&out.first_stage, &out.singleton_augment[i]});
    if (!covers(inst, both, {i})) return "uncovered " + demand_label(inst, i);
  }
  return "";
}

// {0} followed by the geometric grid on costs scaled to integers, i.e. the
// thresholds run_guess_and_verify visits.
inline std::vector<Rat> sweep_thresholds(const Instance& inst, const Rat& epsilon = Rat(1, 10)) {
  std::vector<Rat> costs = item_costs(inst);
  Int scale = common_denominator(costs);
  Rat maxc = 0;
  for (const Rat& c : costs)
    if (c > maxc) maxc = c;
  std::vector<Rat> out;
  out.push_back(0);
  if (maxc == 0) return out;
  Rat scaled = maxc * Rat(scale);
  ThresholdGrid grid = build_threshold_grid((int)costs.size(), scaled.get_num(), epsilon);
  for (const Rat& v : grid.values) out.push_back(Rat(v / scale));
  return out;
}

// Minimum cost over all edge subsets that connect every listed vertex pair
// (-1 when no subset does). Exponential in |E|; test graphs stay tiny.
inline Rat brute_force_connecting_cost(const WeightedGraph& g,
                                       const std::vector<std::pair<int, int>>& want) {
  int m = (int)g.edges.size();
  Rat best = -1;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> ids;
    Rat cost = 0;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ids.push_back(e);
        cost += g.edges[e].cost;
      }
    if (best >= 0 && cost >= best) continue;
    std::vector<int> comp = subset_components(g, ids);
    bool ok = true;
    for (const auto& [u, v] : want)
      if (comp[u] != comp[v]) {
        ok = false;
        break;
      }
    if (ok) best = cost;
  }
  return best;
}

// Minimum cost over all edge subsets whose removal separates every pair.
inline Rat brute_force_separating_cost(const WeightedGraph& g,
                                       const std::vector<std::pair<int, int>>& pairs) {
  int m = (int)g.edges.size();
  std::vector<int> all(m);
  for (int e = 0; e < m; ++e) all[e] = e;
  Rat best = -1;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    std::vector<int> keep;
    Rat cost = 0;
    for (int e = 0; e < m; ++e) {
      if (mask >> e & 1)
        cost += g.edges[e].cost;
      else
        keep.push_back(e);
    }
    if (best >= 0 && cost >= best) continue;
    std::vector<int> comp = subset_components(g, keep);
    bool ok = true;
    for (const auto& [u, v] : pairs)
      if (comp[u] == comp[v]) {
        ok = false;
        break;
      }
    if (ok) best = cost;
  }
  return best;
}

// Minimum s-t cut by enumerating vertex bipartitions.
inline Rat brute_force_cut_value(const WeightedGraph& g, int s, int t) {
  Rat best = -1;
  for (unsigned long mask = 0; mask < (1ul << g.n); ++mask) {
    if (!(mask >> s & 1) || (mask >> t & 1)) continue;
    Rat cost = 0;
    for (const auto& e : g.edges)
      if ((mask >> e.u & 1) != (mask >> e.v & 1)) cost += e.cost;
    if (best < 0 || cost < best) best = cost;
  }
  return best;
}

// All-pairs distances after explicitly merging the given vertex classes,
// for checking the contracted Dijkstra.
inline std::vector<std::vector<Rat>> contracted_floyd_warshall(const WeightedGraph& g,
                                                               const std::vector<int>& cls) {
  int n = g.n;
  const Rat inf(-1);
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, inf));
  auto relax = [&](int a, int b, const Rat& w) {
    if (d[a][b] < 0 || w < d[a][b]) d[a][b] = w;
  };
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (cls[u] == cls[v]) relax(u, v, Rat(0));
  for (const auto& e : g.edges) {
    relax(e.u, e.v, e.cost);
    relax(e.v, e.u, e.cost);
  }
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (d[u][w] < 0 || d[w][v] < 0) continue;
        Rat via = d[u][w] + d[w][v];
        if (d[u][v] < 0 || via < d[u][v]) d[u][v] = via;
      }
  return d;
}

}  // namespace rcover::test
