#pragma once
// One roof over the five problem-specific solvers: pick the per-threshold
// algorithm for an instance kind, run the robust driver (keeping the better
// of it and the trivial all-second-stage solution), or run the max-min
// driver with the matching witness extractor.
#include <cstdint>

#include "rcover/framework.hpp"
#include "rcover/instance.hpp"

namespace rcover {

// The discriminating algorithm for the instance's kind. With `maxmin` set,
// Steiner forest switches to the gamma = 3, beta = 6 parameterization the
// witness extraction relies on; the other kinds are unaffected.
DiscriminatingAlgorithm discriminating_algorithm(const Instance& inst, bool maxmin = false);

// Guess-and-verify over the threshold grid, then keep whichever of that and
// trivial_second_stage_solution has the smaller bound-mode objective (ties
// keep the driver's solution). The trivial side is what caps the ratio at
// lambda*k when the threshold route's constants are too coarse.
RobustSolution solve_robust(const Instance& inst, const Rat& epsilon);

// Certified max-min value (lambda must be 1). Set cover and the Steiner
// problems run the threshold driver with their witness extractors; min-cut
// runs the greedy submodular maximizer whose value is exact for the returned
// set and within 1-1/e of the best. Multicut has no supported witness.
MaxMinResult solve_maxmin(const Instance& inst, const Rat& epsilon, std::uint64_t seed);

}  // namespace rcover
