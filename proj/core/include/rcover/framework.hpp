#pragma once
// Problem-agnostic two-stage machinery: the geometric threshold grid, the
// guess-and-verify robust driver, exact objective evaluation, and the max-min
// driver that turns per-threshold witnesses into a certified lower bound.
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcover/instance.hpp"
#include "rcover/rational.hpp"

namespace rcover {

struct ThresholdGrid {
  Rat epsilon;
  std::vector<Rat> values;  // (1+eps)^0 .. (1+eps)^N, strictly increasing from 1
};

// Grid covering [1, m*c_max] with one spare step: N = ceil(log_{1+eps}(m*c_max)) + 1.
// Costs are assumed pre-scaled to integers, so c_max >= 1 unless everything is
// free. Rejects eps outside (0,1) and c_max < 1.
ThresholdGrid build_threshold_grid(int item_count, const Int& c_max, const Rat& epsilon);

struct DiscriminatingOutput {
  Rat T;
  std::vector<int> first_stage;
  Rat first_stage_cost;  // measured in first-stage costs (b for nonuniform set cover)
  // Per demand: items added if that single demand shows up, and their
  // second-stage base cost. Invariants: first_stage + singleton_augment[i]
  // covers demand i, and augment_cost[i] <= beta*T/k.
  std::vector<std::vector<int>> singleton_augment;
  std::vector<Rat> augment_cost;
  Rat alpha1, alpha2, beta;
};

using DiscriminatingAlgorithm = std::function<DiscriminatingOutput(const Instance&, const Rat& T)>;

struct RobustSolution {
  DiscriminatingOutput chosen;  // chosen.T is the winning threshold
  Rat objective_upper;          // first cost + lambda * (sum of k largest augment costs)
  std::optional<Rat> objective_exact;
  bool from_trivial = false;    // produced by trivial_second_stage_solution
};

// (1+eps) * max{alpha1, beta + alpha2/lambda}: the driver's guarantee
// relative to the optimal robust objective.
Rat robust_ratio_bound(const DiscriminatingOutput& params, const Rat& lambda, const Rat& epsilon);

// Runs the algorithm at T = 0 and at every grid threshold (grid built on
// costs scaled to integers by their common denominator), picks the T
// minimizing first_stage_cost + lambda*beta*T, ties toward smaller T.
RobustSolution run_guess_and_verify(const Instance& inst, const DiscriminatingAlgorithm& algo,
                                    const Rat& epsilon);

enum class EvalMode { bound, exact };

// Objective c(E0) + lambda * max_{|D|<=k} c(augment(D)) of a solution whose
// augment(D) is the union of singleton augmentations. bound mode uses the sum
// of the k most expensive singletons (valid upper bound); exact mode
// enumerates all C(n,k) scenarios and is rejected above `enumeration_cap`.
Rat evaluate_robust_objective(const Instance& inst, const RobustSolution& sol, EvalMode mode,
                              long enumeration_cap = 200000);

// Empty first stage; every singleton covered from scratch by its exact
// cheapest cover. The better-of step of the cut/forest/tree solvers compares
// against this (second stage only pays lambda times the k worst demands).
RobustSolution trivial_second_stage_solution(const Instance& inst);

struct WitnessResult {
  std::vector<int> demands;  // |demands| <= k
  Rat certificate;           // proven lower bound on the exact cover cost of demands
  std::string note;          // e.g. "unrounded" when a randomized step fell back
};

// Extracts a witness k-set at threshold T; called by the max-min driver only
// at thresholds where the first stage was expensive (c(Phi_T) > alpha2*T).
using WitnessExtractor =
    std::function<WitnessResult(const Instance& inst, const Rat& T, std::uint64_t seed)>;

struct MaxMinResult {
  std::vector<int> witness;
  Rat certified_lower;  // exact cover cost of witness is >= this
  Rat universal_upper;  // every k-set covers for <= this
  Rat witness_T = 0;    // threshold the witness was extracted at (t_{p-1})
  int p = -1;           // grid index whose first stage passed the alpha2 test
  bool weakened = false;  // witness certificate fell short of witness_T
  std::string note;
};

// Max-min driver (lambda must be 1): smallest grid index p with
// c(Phi(t_p)) <= alpha2*t_p gives universal_upper = (alpha2+beta)*t_p and a
// witness at t_{p-1}. When the test already passes at the first grid point,
// the single most expensive demand (exact cheapest-cover costs) is the
// witness, with its exact cost as the certified lower bound.
MaxMinResult run_maxmin_driver(const Instance& inst, const DiscriminatingAlgorithm& algo,
                               const WitnessExtractor& extract, const Rat& epsilon,
                               std::uint64_t seed);

// Runs fn(0..n-1) across threads (RCOVER_WORKERS overrides the thread count).
// fn must only touch its own index's state; exceptions are rethrown.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace rcover
