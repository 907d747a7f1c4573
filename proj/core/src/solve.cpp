#include "rcover/solve.hpp"

#include <stdexcept>

#include "rcover/cuts.hpp"
#include "rcover/rational.hpp"
#include "rcover/setcover.hpp"
#include "rcover/steiner.hpp"

namespace rcover {

DiscriminatingAlgorithm discriminating_algorithm(const Instance& inst, bool maxmin) {
  switch (inst.kind) {
    case ProblemKind::set_cover:
      return discriminating_set_cover;
    case ProblemKind::steiner_tree:
      return discriminating_steiner_tree;
    case ProblemKind::steiner_forest:
      if (maxmin)
        return [](const Instance& i, const Rat& T) {
          return discriminating_steiner_forest_params(i, T, Rat(3), Rat(6));
        };
      return discriminating_steiner_forest;
    case ProblemKind::min_cut:
      return discriminating_mincut;
    case ProblemKind::multicut:
      return [](const Instance& i, const Rat& T) { return discriminating_multicut(i, T); };
  }
  throw std::logic_error("unknown problem kind");
}

RobustSolution solve_robust(const Instance& inst, const Rat& epsilon) {
  RobustSolution sol = run_guess_and_verify(inst, discriminating_algorithm(inst), epsilon);
  if (inst.kind == ProblemKind::set_cover) return sol;
  RobustSolution trivial = trivial_second_stage_solution(inst);
  return trivial.objective_upper < sol.objective_upper ? trivial : sol;
}

MaxMinResult solve_maxmin(const Instance& inst, const Rat& epsilon, std::uint64_t seed) {
  if (inst.lambda != 1)
    throw std::invalid_argument("max-min solving requires lambda = 1");
  switch (inst.kind) {
    case ProblemKind::set_cover:
      return run_maxmin_driver(
          inst, discriminating_algorithm(inst, true),
          [](const Instance& i, const Rat& T, std::uint64_t s) {
            return maxmin_setcover_witness(i, T, s);
          },
          epsilon, seed);
    case ProblemKind::steiner_tree:
      return run_maxmin_driver(
          inst, discriminating_algorithm(inst, true),
          [](const Instance& i, const Rat& T, std::uint64_t) {
            return maxmin_steiner_tree_witness(i, T);
          },
          epsilon, seed);
    case ProblemKind::steiner_forest:
      return run_maxmin_driver(
          inst, discriminating_algorithm(inst, true),
          [](const Instance& i, const Rat& T, std::uint64_t) {
            return maxmin_steiner_forest_witness(i, T);
          },
          epsilon, seed);
    case ProblemKind::min_cut: {
      GreedyMaxMin greedy = maxmin_mincut_greedy(inst);
      MaxMinResult res;
      res.witness = greedy.demands;
      res.certified_lower = greedy.value;  // exact cut value of the chosen set
      res.universal_upper = greedy.value / one_minus_inv_e_lower();
      res.note = "greedy";
      return res;
    }
    case ProblemKind::multicut:
      throw std::invalid_argument("max-min multicut has no witness extractor");
  }
  throw std::logic_error("unknown problem kind");
}

}  // namespace rcover
