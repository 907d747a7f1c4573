#pragma once
// k-robust Steiner tree (net-based first stage) and Steiner forest
// (real/fake pair selection + primal-dual forest), plus their max-min
// witness extractors.
#include <array>

#include "rcover/framework.hpp"
#include "rcover/graph.hpp"
#include "rcover/instance.hpp"

namespace rcover {

// Tree filter constant 2 - 1/lambda + sqrt(4 + 1/lambda^2), as a certified
// rational upper bound on the square root.
Rat steiner_tree_beta(const Rat& lambda);

struct TerminalNet {
  int root;
  Rat threshold;            // admission bar beta*T/k
  std::vector<int> members; // root first, then admissions in input scan order
  ShortestPaths to_net;     // multi-source distances from the finished net
};

// Greedy net: scan terminals in input order, admit any vertex strictly
// farther than `threshold` from the current net. On return every terminal is
// within `threshold` of the net and members are pairwise farther apart.
TerminalNet build_terminal_net(const WeightedGraph& g, const std::vector<int>& terminals,
                               int root, const Rat& threshold);

// First stage: metric-closure MST over the net; augmentation: shortest path
// to the net. Parameters (2*beta/(beta-2), 2, beta).
DiscriminatingOutput discriminating_steiner_tree(const Instance& inst, const Rat& T);

WitnessResult maxmin_steiner_tree_witness(const Instance& inst, const Rat& T);

struct GwForest {
  std::vector<int> edges;  // after reverse-delete, sorted
  Rat cost;
  Rat dual;  // total moat growth: dual <= LP <= OPT and cost <= 2*dual
};

// Synchronized moat growing with exact rational event times (ties by lowest
// edge id) followed by reverse-delete.
GwForest gw_steiner_forest(const WeightedGraph& g, const std::vector<std::pair<int, int>>& pairs);

// Forest selection constant gamma = 2 + 2*(1 - 1/lambda), floored at 9/4 so
// the guarantee parameters 4*gamma/(gamma-2) stay finite at lambda = 1 (the
// analysis is parametric in gamma > 2 with beta = 2*gamma).
Rat steiner_forest_gamma(const Rat& lambda);

struct PairClassification {
  Rat T, beta, gamma;
  // Admitted ("real") pairs in admission order, with the contracted distance
  // that triggered admission (> beta*T/k).
  std::vector<int> real_pairs;
  std::vector<Rat> admitted_distance;
  // Per real pair: which endpoints entered W (-1 = blocked). Cases: 2 fresh
  // endpoints, 1, or 0.
  std::vector<std::array<int, 2>> fresh;
  std::vector<int> witnesses;  // W in insertion order, pairwise >= gamma*T/k apart
  struct FakePair {
    int endpoint, blocker;  // blocker == endpoint when it was already in W
    int source_pair;
  };
  std::vector<FakePair> fake_pairs;
  VertexContraction contraction;  // over all real and fake pairs
  // One auxiliary edge per real pair between the W-vertices standing in for
  // its endpoints (the endpoint itself, or its blocker). Acyclicity is
  // asserted at every insertion; it is what bounds |W| >= |S_r| >= |S_f|.
  std::vector<std::pair<int, int>> aux_edges;

  explicit PairClassification(int n) : contraction(n) {}
};

// Requires gamma <= beta/2. Scan order is the input pair order, restarting
// from the beginning after each admission; endpoints are classified against
// the witness set as it was before the pair (s before t). Blocker = nearest
// witness strictly within gamma*T/k, ties by lowest vertex index; an endpoint
// already in W blocks on itself.
PairClassification steiner_forest_select(const WeightedGraph& g,
                                         const std::vector<std::pair<int, int>>& pairs, int k,
                                         const Rat& T, const Rat& beta, const Rat& gamma);

// First stage: primal-dual forest on the real pairs plus a shortest path per
// fake pair; augmentation: shortest path in the pair-contracted graph.
// Parameters (4g/(g-2), 4g/(g-2), 2g) with g = steiner_forest_gamma(lambda).
DiscriminatingOutput discriminating_steiner_forest(const Instance& inst, const Rat& T);

// Same with explicit constants (the max-min pipeline runs gamma=3, beta=6).
DiscriminatingOutput discriminating_steiner_forest_params(const Instance& inst, const Rat& T,
                                                          const Rat& gamma, const Rat& beta);

WitnessResult maxmin_steiner_forest_witness(const Instance& inst, const Rat& T);

}  // namespace rcover
