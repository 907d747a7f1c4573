#include <atomic>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rcover/framework.hpp"
#include "rcover/gen.hpp"
#include "rcover/setcover.hpp"

using namespace rcover;

TEST_SUITE_BEGIN("framework");

TEST_CASE("threshold grid covers the cost range geometrically") {
  // m*c_max = 32: (3/2)^9 is the first step past it, plus one spare
  ThresholdGrid g = build_threshold_grid(4, Int(8), Rat(1, 2));
  CHECK(g.values.size() == 11);
  CHECK(g.values.front() == Rat(1));
  CHECK(g.values[1] == Rat(3, 2));
  CHECK(g.values[8] < Rat(32));
  CHECK(g.values[9] >= Rat(32));

  // trivial range still gets the spare step
  g = build_threshold_grid(1, Int(1), Rat(1, 2));
  CHECK(g.values == std::vector<Rat>{Rat(1), Rat(3, 2)});

  // default eps on a wider range
  g = build_threshold_grid(10, Int(100), Rat(1, 10));
  CHECK(g.values.size() == 75);
  CHECK(g.values.front() == Rat(1));
  CHECK(g.values.back() >= Rat(1000));
  for (size_t i = 1; i < g.values.size(); ++i)
    CHECK(g.values[i] == g.values[i - 1] * Rat(11, 10));
}

TEST_CASE("threshold grid rejects bad parameters") {
  CHECK_THROWS_AS(build_threshold_grid(4, Int(8), Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(build_threshold_grid(4, Int(8), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_threshold_grid(4, Int(8), Rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(build_threshold_grid(4, Int(0), Rat(1, 10)), std::invalid_argument);
}

TEST_CASE("ratio bound formula") {
  DiscriminatingOutput out;
  out.alpha1 = Rat(2);
  out.alpha2 = Rat(3);
  out.beta = Rat(4);
  CHECK(robust_ratio_bound(out, Rat(1), Rat(1, 10)) == Rat(77, 10));
  CHECK(robust_ratio_bound(out, Rat(2), Rat(1, 10)) == Rat(121, 20));
  out.alpha1 = Rat(10);
  CHECK(robust_ratio_bound(out, Rat(1), Rat(1, 10)) == Rat(11));
}

TEST_CASE("trivial solution pays for the k worst demands") {
  // three disjoint singleton sets: the objective is modular
  Instance inst = test::make_setcover(
      3, {{Rat(5), {0}}, {Rat(3), {1}}, {Rat(2), {2}}}, 2);
  RobustSolution sol = trivial_second_stage_solution(inst);
  CHECK(sol.from_trivial);
  CHECK(sol.chosen.first_stage.empty());
  CHECK(sol.chosen.first_stage_cost == Rat(0));
  CHECK(sol.chosen.augment_cost == std::vector<Rat>{Rat(5), Rat(3), Rat(2)});
  CHECK(sol.objective_upper == Rat(8));
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::bound) == Rat(8));
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::exact) == Rat(8));

  Instance scaled = test::make_setcover(
      3, {{Rat(5), {0}}, {Rat(3), {1}}, {Rat(2), {2}}}, 2, Rat(2));
  RobustSolution sol2 = trivial_second_stage_solution(scaled);
  CHECK(sol2.objective_upper == Rat(16));
  CHECK(evaluate_robust_objective(scaled, sol2, EvalMode::exact) == Rat(16));
}

TEST_CASE("exact evaluation credits shared augmentation items") {
  // one set covers both elements, so the two singleton augments coincide
  Instance inst = test::make_setcover(2, {{Rat(6), {0, 1}}}, 2);
  RobustSolution sol = trivial_second_stage_solution(inst);
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::bound) == Rat(12));
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::exact) == Rat(6));
}

TEST_CASE("exact evaluation refuses oversized scenario spaces") {
  Instance inst = test::make_setcover(5, {{Rat(1), {0, 1, 2, 3, 4}}}, 2);
  RobustSolution sol = trivial_second_stage_solution(inst);
  // C(5,2) = 10 scenarios
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::exact, 10) == Rat(1));
  CHECK_THROWS_AS(evaluate_robust_objective(inst, sol, EvalMode::exact, 9),
                  std::invalid_argument);
  CHECK(evaluate_robust_objective(inst, sol, EvalMode::bound, 1) == Rat(2));
}

TEST_CASE("guess-and-verify minimizes the threshold proxy over the sweep") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenConfig cfg;
    cfg.kind = ProblemKind::set_cover;
    cfg.n = 5;
    cfg.sets = 5;
    cfg.k = 2;
    cfg.lambda = Rat(2);
    Instance inst = generate_instance(cfg, seed);
    RobustSolution sol = run_guess_and_verify(inst, discriminating_set_cover, Rat(1, 10));
    CHECK(test::discriminating_violation(inst, sol.chosen) == "");
    CHECK(sol.objective_upper == evaluate_robust_objective(inst, sol, EvalMode::bound));

    Rat chosen_proxy = sol.chosen.first_stage_cost + inst.lambda * sol.chosen.beta * sol.chosen.T;
    bool seen = false;
    for (const Rat& t : test::sweep_thresholds(inst)) {
      DiscriminatingOutput out = discriminating_set_cover(inst, t);
      Rat proxy = out.first_stage_cost + inst.lambda * out.beta * t;
      CHECK(chosen_proxy <= proxy);
      if (proxy == chosen_proxy) CHECK(sol.chosen.T <= t);
      if (t == sol.chosen.T) seen = true;
    }
    CHECK(seen);
  }
}

TEST_CASE("parallel_for touches every index once and rethrows") {
  std::vector<int> hits(100, 0);
  parallel_for(100, [&](int i) { hits[i]++; });
  for (int h : hits) CHECK(h == 1);

  std::atomic<int> ran{0};
  auto boom = [&](int i) {
    ran++;
    if (i == 3) throw std::runtime_error("boom");
  };
  CHECK_THROWS_AS(parallel_for(8, boom), std::runtime_error);
  CHECK(ran.load() >= 1);
}

TEST_SUITE_END();
