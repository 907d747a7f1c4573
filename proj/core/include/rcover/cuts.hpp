#pragma once
// k-robust minimum cut (filter by root-connectivity, cut the well-connected
// terminals upfront) and k-robust multicut (fractional relaxation + region
// growing on the well-connected pairs).
#include <optional>

#include "rcover/fractional.hpp"
#include "rcover/framework.hpp"
#include "rcover/instance.hpp"

namespace rcover {

// Filter constant 10*e/(e-1) (certified rational upper bound). Parameters
// (3, beta/2, beta).
Rat mincut_beta();

DiscriminatingOutput discriminating_mincut(const Instance& inst, const Rat& T);

struct GreedyMaxMin {
  std::vector<int> demands;  // |demands| <= k, sorted
  Rat value;                 // exact min cut separating them from the root
};

// Greedy max-min for cuts: k rounds, each adding the terminal that maximizes
// the exact cut value of the chosen set (ties toward the lower index). The
// cut value of a vertex set against the root is monotone submodular, so the
// greedy value is within (1 - 1/e) of the best k-set.
GreedyMaxMin maxmin_mincut_greedy(const Instance& inst);

// Default multicut filter constant 256*ln(n)^2 / ln(ln(n)); requires n >= 4
// (below that the instance must supply an explicit constant).
Rat multicut_default_beta(int n);

struct MulticutRunInfo {
  std::vector<int> filtered;  // pair indices routed through the cut stage
  FractionalMulticut fractional;
  Rat rounding_bound;  // region-growing guarantee 4*ln(|filtered|+1)
  Rat cut_cost;        // first-stage cut cost (<= rounding_bound * fractional.value)
};

// First stage: fractional multicut + region growing on the pairs whose
// pairwise min cut is >= beta*T/k; augmentation: the exact min cut of an
// unfiltered pair in the full graph. `beta` overrides the default filter
// constant; `info` (optional) receives the relaxation and rounding numbers.
DiscriminatingOutput discriminating_multicut(const Instance& inst, const Rat& T,
                                             std::optional<Rat> beta = std::nullopt,
                                             MulticutRunInfo* info = nullptr);

}  // namespace rcover
