#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "rcover/gen.hpp"
#include "rcover/lp.hpp"
#include "rcover/oracle.hpp"
#include "rcover/setcover.hpp"
#include "rcover/solve.hpp"

using namespace rcover;

namespace {

// Covering-LP rows for a list of elements: which sets contain each.
std::vector<std::vector<int>> element_rows(const Instance& inst, const std::vector<int>& elems) {
  std::vector<std::vector<int>> rows;
  for (int e : elems) {
    std::vector<int> row;
    for (int s = 0; s < (int)inst.sets.size(); ++s)
      if (std::binary_search(inst.sets[s].begin(), inst.sets[s].end(), e)) row.push_back(s);
    rows.push_back(row);
  }
  return rows;
}

std::vector<int> all_demands(const Instance& inst) {
  std::vector<int> d(demand_count(inst));
  for (int i = 0; i < (int)d.size(); ++i) d[i] = i;
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("setcover");

TEST_CASE("filter constant upper-bounds 36 ln m") {
  for (int m : {2, 3, 10, 64}) {
    double want = 36.0 * std::log(double(m));
    double got = setcover_beta(m).get_d();
    CHECK(got >= want - 1e-9);
    CHECK(got <= want + 1e-4);
  }
}

TEST_CASE("greedy walks the classic trace") {
  Instance inst = test::make_setcover(
      3, {{Rat(2), {0, 1}}, {Rat(2), {1, 2}}, {Rat(1), {2}}}, 1);
  GreedyCover g = greedy_set_cover(inst, {0, 1, 2}, CostField::second);
  CHECK(g.sets == std::vector<int>{0, 2});
  CHECK(g.cost == Rat(3));
  CHECK(covers(inst, g.sets, {0, 1, 2}));

  CoveringLpResult lp = solve_covering_lp(inst.set_cost, element_rows(inst, {0, 1, 2}));
  CHECK(lp.value == Rat(3));
  CHECK(g.cost <= harmonic(3) * lp.value);
}

TEST_CASE("greedy stays within H_n of the covering LP") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.sets = 6;
    Instance inst = generate_instance(cfg, seed);
    std::vector<int> targets = all_demands(inst);
    GreedyCover g = greedy_set_cover(inst, targets, CostField::second);
    CHECK(covers(inst, g.sets, targets));
    CHECK(items_cost(inst, g.sets) == g.cost);
    CoveringLpResult lp = solve_covering_lp(inst.set_cost, element_rows(inst, targets));
    CHECK(g.cost <= harmonic((int)targets.size()) * lp.value);
  }
}

TEST_CASE("exact singleton cover picks the cheapest containing set") {
  Instance inst = test::make_setcover(1, {{Rat(7), {0}}, {Rat(4), {0}}}, 1);
  SingletonCover c = exact_singleton_cover(inst, 0);
  CHECK(c.cost == Rat(4));
  CHECK(c.items == std::vector<int>{1});
}

TEST_CASE("T = 0 buys full coverage upfront") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.sets = 6;
    cfg.k = 2;
    Instance inst = generate_instance(cfg, seed);
    DiscriminatingOutput out = discriminating_set_cover(inst, Rat(0));
    CHECK(covers(inst, out.first_stage, all_demands(inst)));
    for (const auto& aug : out.singleton_augment) CHECK(aug.empty());
    CHECK(test::discriminating_violation(inst, out) == "");
  }
}

TEST_CASE("a threshold above every cover cost defers everything") {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.sets = 6;
    cfg.k = 2;
    Instance inst = generate_instance(cfg, seed);
    DiscriminatingOutput out = discriminating_set_cover(inst, Rat(100000));
    CHECK(out.first_stage.empty());
    for (int i = 0; i < demand_count(inst); ++i) {
      SingletonCover c = exact_singleton_cover(inst, i);
      CHECK(out.augment_cost[i] == c.cost);
      CHECK(out.singleton_augment[i] == c.items);
    }
  }
}

TEST_CASE("per-threshold outputs are sound across the whole sweep") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    GenConfig cfg;
    cfg.n = 5 + int(seed % 3);
    cfg.sets = 6;
    cfg.k = 1 + int(seed % 3);
    cfg.lambda = Rat(1 + (int)(seed % 2));
    cfg.nonuniform = seed % 2 == 0;
    if (cfg.nonuniform) cfg.lambda = 1;
    Instance inst = generate_instance(cfg, seed);
    for (const Rat& t : test::sweep_thresholds(inst)) {
      DiscriminatingOutput out = discriminating_set_cover(inst, t);
      CHECK(test::discriminating_violation(inst, out) == "");
      CHECK(out.alpha1 == harmonic(inst.universe));
      CHECK(out.alpha2 == 12 * harmonic(inst.universe));
      CHECK(out.beta == setcover_beta((int)inst.sets.size()));
    }
  }
}

TEST_CASE("dual-rounding witness on disjoint singletons") {
  Instance inst = test::make_setcover(
      3, {{Rat(5), {0}}, {Rat(3), {1}}, {Rat(2), {2}}}, 2);
  // bar = beta*T/k ~ 1.98: every element is expensive, coarse costs >= 2
  SetcoverWitnessStats stats;
  WitnessResult w = maxmin_setcover_witness(inst, Rat(1, 10), 42, 64, &stats);
  std::sort(w.demands.begin(), w.demands.end());
  CHECK(w.demands == std::vector<int>{0, 1});
  CHECK(w.certificate == Rat(8));
  CHECK(!stats.unrounded);
  CHECK(stats.trials >= 1);
}

TEST_CASE("witness certificate equals the real-cost covering LP of its demands") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.sets = 6;
    cfg.k = 1 + int(seed % 3);
    Instance inst = generate_instance(cfg, seed);
    Rat min_cover = exact_singleton_cover(inst, 0).cost;
    for (int i = 1; i < demand_count(inst); ++i) {
      Rat c = exact_singleton_cover(inst, i).cost;
      if (c < min_cover) min_cover = c;
    }
    // bar lands exactly on the cheapest cover: every element is in play
    Rat T = Rat(inst.k) * min_cover / setcover_beta((int)inst.sets.size());
    WitnessResult w = maxmin_setcover_witness(inst, T, seed);
    REQUIRE(!w.demands.empty());
    CHECK((int)w.demands.size() <= inst.k);
    CoveringLpResult lp = solve_covering_lp(inst.set_cost, element_rows(inst, w.demands));
    CHECK(w.certificate == lp.value);
    CHECK(w.certificate <= exact_cover_cost(inst, w.demands));
  }
}

TEST_CASE("max-min pipeline brackets the exact value") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    GenConfig cfg;
    cfg.n = 6;
    cfg.sets = 6;
    cfg.k = 1 + int(seed % 3);
    Instance inst = generate_instance(cfg, seed);
    MaxMinResult res = solve_maxmin(inst, Rat(1, 10), seed);
    ExactMaxMinResult exact = exact_maxmin_value(inst);
    CHECK(res.certified_lower <= exact.value);
    CHECK(exact.value <= res.universal_upper);
    REQUIRE(!res.witness.empty());
    CHECK(exact_cover_cost(inst, res.witness) >= res.certified_lower);
  }
}

TEST_CASE("singleton fallback when the smallest threshold already passes") {
  Instance inst = test::make_setcover(
      3, {{Rat(5), {0}}, {Rat(3), {1}}, {Rat(2), {2}}}, 2);
  MaxMinResult res = solve_maxmin(inst, Rat(1, 10), 7);
  CHECK(res.p == 0);
  CHECK(res.witness == std::vector<int>{0});
  CHECK(res.certified_lower == Rat(5));
  CHECK(res.note == "singleton fallback");
  CHECK(res.universal_upper == Rat(22) + setcover_beta(3));
  // exact max-min over pairs is 5 + 3
  CHECK(exact_maxmin_value(inst).value == Rat(8));
  CHECK(res.universal_upper >= Rat(8));
}

TEST_CASE("all-zero costs short-circuit the max-min scan") {
  Instance inst = test::make_setcover(2, {{Rat(0), {0, 1}}}, 1);
  MaxMinResult res = solve_maxmin(inst, Rat(1, 10), 1);
  CHECK(res.certified_lower == Rat(0));
  CHECK(res.universal_upper == Rat(0));
  CHECK(res.witness == std::vector<int>{0});
}

TEST_SUITE_END();
