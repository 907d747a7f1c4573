#include "rcover/cuts.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "rcover/maxflow.hpp"

namespace rcover {

Rat mincut_beta() { return ten_e_over_e_minus_one_upper(); }

DiscriminatingOutput discriminating_mincut(const Instance& inst, const Rat& T) {
  if (T < 0) throw std::invalid_argument("negative threshold");
  const WeightedGraph& g = inst.graph;
  Rat beta = mincut_beta();

  DiscriminatingOutput out;
  out.T = T;
  out.beta = beta;
  out.alpha1 = 3;
  out.alpha2 = beta / 2;

  Rat bar = beta * T / inst.k;
  std::vector<char> well_connected(inst.terminals.size(), 0);
  std::vector<int> cut_now;
  for (size_t i = 0; i < inst.terminals.size(); ++i) {
    if (min_cut_value(g, inst.root, inst.terminals[i]) >= bar) {
      well_connected[i] = 1;
      cut_now.push_back(inst.terminals[i]);
    }
  }
  if (!cut_now.empty()) {
    MinCutResult first = max_flow_min_cut(g, {inst.root}, cut_now);
    out.first_stage = first.cut_edges;
    out.first_stage_cost = first.value;
  }

  // Cheap terminals are cut on arrival, in what the first stage left behind.
  std::vector<char> enabled(g.edges.size(), 1);
  for (int e : out.first_stage) enabled[e] = 0;
  out.singleton_augment.resize(inst.terminals.size());
  out.augment_cost.assign(inst.terminals.size(), Rat(0));
  for (size_t i = 0; i < inst.terminals.size(); ++i) {
    if (well_connected[i]) continue;
    MinCutResult res = max_flow_min_cut(g, {inst.root}, {inst.terminals[i]}, &enabled);
    out.singleton_augment[i] = res.cut_edges;
    out.augment_cost[i] = res.value;
    // Removing edges never raises a cut value, so this stays under the filter.
    assert(out.augment_cost[i] < bar);
  }
  return out;
}

GreedyMaxMin maxmin_mincut_greedy(const Instance& inst) {
  const WeightedGraph& g = inst.graph;
  GreedyMaxMin res;
  res.value = 0;
  std::vector<char> chosen(inst.terminals.size(), 0);
  for (int round = 0; round < inst.k && round < int(inst.terminals.size()); ++round) {
    int best = -1;
    Rat best_value;
    for (size_t i = 0; i < inst.terminals.size(); ++i) {
      if (chosen[i]) continue;
      std::vector<int> trial;
      for (size_t j = 0; j < inst.terminals.size(); ++j)
        if (chosen[j] || j == i) trial.push_back(inst.terminals[j]);
      Rat value = max_flow_min_cut(g, {inst.root}, trial).value;
      if (best < 0 || value > best_value) {
        best = int(i);
        best_value = value;
      }
    }
    chosen[best] = 1;
    res.value = best_value;
    res.demands.push_back(best);
  }
  std::sort(res.demands.begin(), res.demands.end());
  return res;
}

Rat multicut_default_beta(int n) {
  if (n < 4)
    throw std::invalid_argument("default multicut filter constant needs n >= 4");
  Rat ln_n = ln_upper(Rat(n));
  return 256 * ln_n * ln_n / ln_upper(ln_n);
}

DiscriminatingOutput discriminating_multicut(const Instance& inst, const Rat& T,
                                             std::optional<Rat> beta,
                                             MulticutRunInfo* info) {
  if (T < 0) throw std::invalid_argument("negative threshold");
  const WeightedGraph& g = inst.graph;
  Rat b = beta ? *beta : multicut_default_beta(g.n);
  if (b <= 0) throw std::invalid_argument("filter constant must be positive");

  DiscriminatingOutput out;
  out.T = T;
  out.beta = b;
  // First-stage guarantee chain: the cut of the filtered pairs costs at most
  // 4*ln(kappa+1)*(1+eps_f) times their fractional optimum, and that LP is at
  // most Phi* + kappa*T* (each filtered pair is cut for <= T* on top of the
  // optimal first stage). kappa = total pair count bounds both factors.
  int kappa = int(inst.pairs.size());
  Rat eps_f(1, 20);
  out.alpha1 = 4 * ln_upper(Rat(kappa + 1)) * (1 + eps_f);
  out.alpha2 = out.alpha1 * kappa;

  Rat bar = b * T / inst.k;
  std::vector<char> well_connected(inst.pairs.size(), 0);
  std::vector<std::pair<int, int>> filtered;
  std::vector<int> filtered_idx;
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    if (min_cut_value(g, inst.pairs[i].first, inst.pairs[i].second) >= bar) {
      well_connected[i] = 1;
      filtered.push_back(inst.pairs[i]);
      filtered_idx.push_back(int(i));
    }
  }

  if (!filtered.empty()) {
    FractionalMulticut frac = fractional_multicut(g, filtered, eps_f);
    GvyResult regions = gvy_region_growing(g, filtered, frac.x, frac.value);
    out.first_stage = regions.cut_edges;
    out.first_stage_cost = regions.cut_cost;
    if (info) {
      info->filtered = filtered_idx;
      info->fractional = frac;
      info->rounding_bound = 4 * regions.log_bound;
      info->cut_cost = regions.cut_cost;
    }
  } else if (info) {
    *info = MulticutRunInfo{};
  }

  out.singleton_augment.resize(inst.pairs.size());
  out.augment_cost.assign(inst.pairs.size(), Rat(0));
  for (size_t i = 0; i < inst.pairs.size(); ++i) {
    if (well_connected[i]) continue;  // already separated by the first stage
    MinCutResult res = max_flow_min_cut(g, {inst.pairs[i].first}, {inst.pairs[i].second});
    // A cut in the full graph still separates inside any subgraph of it.
    out.singleton_augment[i] = res.cut_edges;
    out.augment_cost[i] = res.value;
    assert(out.augment_cost[i] < bar);
  }
  return out;
}

}  // namespace rcover
