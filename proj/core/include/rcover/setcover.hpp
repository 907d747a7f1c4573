#pragma once
// k-robust set cover: expensive-element filter + greedy first stage, the
// set-dependent-inflation (b,c) variant, and the randomized dual-rounding
// witness for the max-min driver.
#include <cstdint>

#include "rcover/framework.hpp"
#include "rcover/instance.hpp"

namespace rcover {

// Filter constant: a rational upper bound on 36*ln(m), m = number of sets.
Rat setcover_beta(int set_count);

enum class CostField { first, second };

struct GreedyCover {
  std::vector<int> sets;
  Rat cost;  // under the selected cost field
};

// Classic cost-per-new-element greedy restricted to `targets`; ties broken by
// lowest set index. Guarantee (tested): cost <= H_n * covering-LP optimum.
GreedyCover greedy_set_cover(const Instance& inst, const std::vector<int>& targets,
                             CostField field);

// Per-threshold first stage: S = elements whose cheapest covering set (c-cost)
// is >= beta*T/k, bought via greedy (b-cost when nonuniform); every element
// outside S gets its cheapest covering set as the singleton augmentation.
// Parameters (alpha1, alpha2, beta) = (H_n, 12*H_n, 36 ln m).
DiscriminatingOutput discriminating_set_cover(const Instance& inst, const Rat& T);

struct SetcoverWitnessStats {
  int trials = 0;
  int infeasible_samples = 0;  // Y/3 violated some coarse dual constraint
  int low_sum_samples = 0;     // feasible but the top-k sum fell below k
  bool unrounded = false;      // retries exhausted; deterministic fallback used
};

// Max-min witness at threshold T (lambda = 1): solves the coarse-cost
// covering LP over the expensive elements exactly, rounds the dual y to
// integers Y (floor + Bernoulli on the fraction), accepts when Y/3 is
// dual-feasible and the top-k elements carry total Y >= k, and returns those
// top-k elements. The certificate is the exact real-cost covering LP value of
// the returned elements, which the accepted sample guarantees is >= T
// whenever every coarse cost is >= 2. After `max_retries` rejected samples
// the top-k by fractional y is returned, flagged "unrounded".
WitnessResult maxmin_setcover_witness(const Instance& inst, const Rat& T, std::uint64_t seed,
                                      int max_retries = 64,
                                      SetcoverWitnessStats* stats = nullptr);

}  // namespace rcover
