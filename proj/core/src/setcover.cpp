#include "rcover/setcover.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>

#include "rcover/lp.hpp"

namespace rcover {

Rat setcover_beta(int set_count) {
  if (set_count < 1) throw std::invalid_argument("set count must be positive");
  return 36 * ln_upper(Rat(set_count));
}

GreedyCover greedy_set_cover(const Instance& inst, const std::vector<int>& targets,
                             CostField field) {
  const std::vector<Rat>& costs =
      (field == CostField::first && inst.nonuniform) ? inst.set_first_cost : inst.set_cost;
  GreedyCover out;
  out.cost = 0;
  std::vector<char> uncovered(inst.universe, 0);
  int remaining = 0;
  for (int e : targets)
    if (!uncovered[e]) {
      uncovered[e] = 1;
      ++remaining;
    }
  while (remaining > 0) {
    int best = -1;
    long best_gain = 0;
    for (int r = 0; r < (int)inst.sets.size(); ++r) {
      long gain = 0;
      for (int e : inst.sets[r])
        if (uncovered[e]) ++gain;
      if (gain == 0) continue;
      // cost[r]/gain < cost[best]/best_gain, cross-multiplied exactly
      if (best < 0 || costs[r] * best_gain < costs[best] * gain) {
        best = r;
        best_gain = gain;
      }
    }
    if (best < 0) {
      int e = 0;
      while (e < inst.universe && !uncovered[e]) ++e;
      throw std::invalid_argument("element " + std::to_string(e) + " is covered by no set");
    }
    out.sets.push_back(best);
    out.cost += costs[best];
    for (int e : inst.sets[best])
      if (uncovered[e]) {
        uncovered[e] = 0;
        --remaining;
      }
  }
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

namespace {

// Cheapest covering set per element under second-stage costs, ties by lowest
// set index. -1 never happens on validated instances.
std::vector<int> cheapest_cover(const Instance& inst) {
  std::vector<int> best(inst.universe, -1);
  for (int r = 0; r < (int)inst.sets.size(); ++r)
    for (int e : inst.sets[r])
      if (best[e] < 0 || inst.set_cost[r] < inst.set_cost[best[e]]) best[e] = r;
  return best;
}

}  // namespace

DiscriminatingOutput discriminating_set_cover(const Instance& inst, const Rat& T) {
  if (T < 0) throw std::invalid_argument("threshold must be nonnegative");
  DiscriminatingOutput out;
  out.T = T;
  out.beta = setcover_beta((int)inst.sets.size());
  out.alpha1 = harmonic(inst.universe);
  out.alpha2 = 12 * out.alpha1;
  Rat threshold = out.beta * T / inst.k;

  std::vector<int> best = cheapest_cover(inst);
  std::vector<int> expensive;
  for (int e = 0; e < inst.universe; ++e)
    if (inst.set_cost[best[e]] >= threshold) expensive.push_back(e);

  GreedyCover greedy = greedy_set_cover(inst, expensive, CostField::first);
  out.first_stage = greedy.sets;
  out.first_stage_cost = greedy.cost;

  out.singleton_augment.resize(inst.universe);
  out.augment_cost.assign(inst.universe, Rat(0));
  std::vector<char> in_s(inst.universe, 0);
  for (int e : expensive) in_s[e] = 1;
  for (int e = 0; e < inst.universe; ++e) {
    if (in_s[e]) continue;
    out.singleton_augment[e] = {best[e]};
    out.augment_cost[e] = inst.set_cost[best[e]];
    assert(out.augment_cost[e] <= threshold);
  }
  return out;
}

WitnessResult maxmin_setcover_witness(const Instance& inst, const Rat& T, std::uint64_t seed,
                                      int max_retries, SetcoverWitnessStats* stats) {
  if (T <= 0) throw std::invalid_argument("witness extraction needs a positive threshold");
  const int m = (int)inst.sets.size();
  Rat beta = setcover_beta(m);
  Rat threshold = beta * T / inst.k;

  std::vector<int> best = cheapest_cover(inst);
  std::vector<int> expensive;  // S'
  for (int e = 0; e < inst.universe; ++e)
    if (inst.set_cost[best[e]] >= threshold) expensive.push_back(e);

  WitnessResult out;
  out.certificate = 0;
  if (expensive.empty()) return out;  // nothing expensive; driver never asks here

  // Residual system: sets meeting S', restricted to S'; coarse integer costs
  // in units of 6T/k.
  std::vector<int> pos(inst.universe, -1);
  for (int i = 0; i < (int)expensive.size(); ++i) pos[expensive[i]] = i;
  Rat unit = 6 * T / inst.k;
  std::vector<int> residual_sets;
  std::vector<std::vector<int>> rows(expensive.size());
  std::vector<Rat> coarse;
  bool coarse_all_two = true;
  for (int r = 0; r < m; ++r) {
    std::vector<int> hit;
    for (int e : inst.sets[r])
      if (pos[e] >= 0) hit.push_back(pos[e]);
    if (hit.empty()) continue;
    int col = (int)residual_sets.size();
    residual_sets.push_back(r);
    Rat chat(rat_ceil(inst.set_cost[r] / unit));
    // Every residual set covers an expensive element, so its cost is at least
    // beta*T/k and the coarse value is at least beta/6; the upper half of the
    // bracket needs cost > 6T/k, i.e. beta > 6 (any m >= 2 once ln m > 1/6).
    assert(chat >= beta / 6);
    if (beta > 6) assert(chat * unit >= inst.set_cost[r] && chat * unit < 2 * inst.set_cost[r]);
    if (chat < 2) coarse_all_two = false;
    coarse.push_back(chat);
    for (int i : hit) rows[i].push_back(col);
  }

  CoveringLpResult lp = solve_covering_lp(coarse, rows);

  const int want = std::min<int>(inst.k, (int)expensive.size());
  auto top_by = [&](const std::vector<Rat>& val) {
    std::vector<int> order(expensive.size());
    for (int i = 0; i < (int)order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return val[a] > val[b]; });
    order.resize(want);
    return order;  // positions into `expensive`
  };

  std::mt19937_64 rng(seed);
  auto bernoulli = [&](const Rat& p) {
    // exact-to-2^-64 draw: r*den < num*2^64
    Int r((unsigned long)rng());
    return r * p.get_den() < (p.get_num() << 64);
  };

  std::vector<int> chosen;
  bool accepted = false;
  std::vector<Rat> y_int(expensive.size());
  for (int attempt = 0; attempt < max_retries && !accepted; ++attempt) {
    if (stats) ++stats->trials;
    for (std::size_t i = 0; i < expensive.size(); ++i) {
      Int fl = rat_floor(lp.y[i]);
      Rat frac = lp.y[i] - Rat(fl);
      y_int[i] = Rat(fl) + (frac > 0 && bernoulli(frac) ? 1 : 0);
    }
    bool feasible = true;
    for (std::size_t c = 0; c < coarse.size(); ++c) {
      Rat total = 0;
      for (int e : inst.sets[residual_sets[c]])
        if (pos[e] >= 0) total += y_int[pos[e]];
      if (total > 3 * coarse[c]) {
        feasible = false;
        break;
      }
    }
    if (!feasible) {
      if (stats) ++stats->infeasible_samples;
      continue;
    }
    std::vector<int> order = top_by(y_int);
    Rat top_sum = 0;
    for (int i : order) top_sum += y_int[i];
    if (top_sum < inst.k) {
      if (stats) ++stats->low_sum_samples;
      continue;
    }
    chosen = order;
    accepted = true;
  }
  if (!accepted) {
    chosen = top_by(lp.y);
    out.note = "unrounded";
    if (stats) stats->unrounded = true;
  }

  for (int i : chosen) out.demands.push_back(expensive[i]);
  std::sort(out.demands.begin(), out.demands.end());

  // Certificate: exact fractional covering LP of the chosen elements under
  // real costs. The accepted sample implies this is >= T when every coarse
  // cost is >= 2 (then c_R >= 3(T/k)*coarse_R, and Y/3 restricted to the
  // chosen elements is dual-feasible with value >= k/3).
  std::vector<std::vector<int>> wrows(out.demands.size());
  std::vector<Rat> wcosts;
  std::vector<int> wpos(inst.universe, -1);
  for (int i = 0; i < (int)out.demands.size(); ++i) wpos[out.demands[i]] = i;
  for (int r = 0; r < m; ++r) {
    std::vector<int> hit;
    for (int e : inst.sets[r])
      if (wpos[e] >= 0) hit.push_back(wpos[e]);
    if (hit.empty()) continue;
    int col = (int)wcosts.size();
    wcosts.push_back(inst.set_cost[r]);
    for (int i : hit) wrows[i].push_back(col);
  }
  out.certificate = solve_covering_lp(wcosts, wrows).value;
  if (accepted && coarse_all_two && out.certificate < T)
    throw std::logic_error("set cover witness: accepted sample failed its own certificate chain");
  return out;
}

}  // namespace rcover
