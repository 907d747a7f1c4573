#pragma once
// Exact reference solvers for desk-scale instances: exhaustive first-stage
// enumeration for the robust objective, subset-table Steiner costs, and
// exact scenario maxima. These exist to check the approximation algorithms,
// so they are deliberately independent of them: plain dynamic programs and
// enumerations over integer-scaled costs.
//
// Everything here refuses (OracleRefusal) instead of running forever when an
// instance exceeds the documented caps; callers downgrade to feasibility-only
// checks in that case.
#include <stdexcept>
#include <string>
#include <vector>

#include "rcover/graph.hpp"
#include "rcover/instance.hpp"
#include "rcover/rational.hpp"

namespace rcover {

struct OracleRefusal : std::runtime_error {
  explicit OracleRefusal(const std::string& what) : std::runtime_error(what) {}
};

// All k-subsets of {0..n-1} in lexicographic order; refuses when there are
// more than `cap`.
std::vector<std::vector<int>> k_subsets(int n, int k, long cap);

// Minimum-cost tree spanning `terminals` (duplicates allowed). Subset dynamic
// program over the terminal set; caps: <= 13 distinct terminals, <= 64
// vertices. Unreachable terminal sets throw std::invalid_argument.
Rat exact_steiner_tree_cost(const WeightedGraph& g, const std::vector<int>& terminals);

// Minimum-cost forest connecting every pair, via the optimal partition of
// pairs into shared trees. Caps: <= 6 pairs.
Rat exact_steiner_forest_cost(const WeightedGraph& g,
                              const std::vector<std::pair<int, int>>& pairs);

// Minimum-cost edge set whose removal separates every pair. Cap: <= 18 edges.
Rat exact_multicut_cost(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs);

struct ExactCover {
  Rat cost;
  std::vector<int> items;  // a witness achieving the cost, sorted
};

// Exact cheapest second-stage cover of a demand subset (base costs c), with a
// witness item set. Graph witnesses come from contract-or-delete
// self-reduction on the subset tables, so they are certified optimal.
ExactCover exact_cover(const Instance& inst, const std::vector<int>& demands);

Rat exact_cover_cost(const Instance& inst, const std::vector<int>& demands);

struct ExactRobustResult {
  Rat objective;                    // first cost + lambda * worst augmentation
  std::vector<int> first_stage;     // optimal items to pre-buy
  Rat first_stage_cost;             // in first-stage costs
  Rat worst_augment_cost;           // the max residual scenario cost it pays
  std::vector<int> worst_scenario;  // demand indices attaining the max
};

// Exhaustive optimum of the k-robust objective. Caps per problem (set cover:
// universe <= 16, <= 64 sets; graphs: <= 18 edges, multicut <= 14; forest:
// <= 6 pairs; tree: <= 12 terminals) and <= 20000 scenarios.
ExactRobustResult exact_robust_opt(const Instance& inst);

struct ExactMaxMinResult {
  Rat value;                  // max over k-subsets of the exact cover cost
  std::vector<int> scenario;  // a maximizing subset, lexicographically first
};

ExactMaxMinResult exact_maxmin_value(const Instance& inst);

}  // namespace rcover
