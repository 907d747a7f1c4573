#include "rcover/framework.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace rcover {

ThresholdGrid build_threshold_grid(int item_count, const Int& c_max, const Rat& epsilon) {
  if (epsilon <= 0 || epsilon >= 1)
    throw std::invalid_argument("grid epsilon must be in (0,1)");
  if (item_count < 1) throw std::invalid_argument("grid needs at least one item");
  if (c_max < 1) throw std::invalid_argument("grid c_max must be >= 1 (scaled integer costs)");

  ThresholdGrid grid;
  grid.epsilon = epsilon;
  Rat step = 1 + epsilon;
  Rat top = Rat(item_count) * Rat(c_max);
  Rat value(1);
  grid.values.push_back(value);
  // ceil(log_{1+eps} top) steps reach top, plus one spare.
  while (value < top) {
    value *= step;
    grid.values.push_back(value);
  }
  grid.values.push_back(value * step);
  return grid;
}

Rat robust_ratio_bound(const DiscriminatingOutput& params, const Rat& lambda, const Rat& epsilon) {
  Rat second = params.beta + params.alpha2 / lambda;
  return (1 + epsilon) * std::max(params.alpha1, second);
}

namespace {

// Thresholds the drivers sweep, in original cost units: 0, then the integer
// grid divided by the scaling factor. Returns the scale and fills `values`.
Int sweep_thresholds(const Instance& inst, const Rat& epsilon, std::vector<Rat>* values) {
  std::vector<Rat> costs = item_costs(inst);
  Int scale = common_denominator(costs);
  Rat c_max = 0;
  for (const Rat& c : costs) c_max = std::max(c_max, c);
  values->clear();
  values->push_back(Rat(0));
  if (c_max == 0) return scale;  // everything is free; T = 0 suffices
  ThresholdGrid grid = build_threshold_grid(item_count(inst), rat_ceil(c_max * scale), epsilon);
  for (const Rat& v : grid.values) values->push_back(v / scale);
  return scale;
}

Rat top_k_augment_sum(const std::vector<Rat>& augment_cost, int k) {
  std::vector<Rat> costs = augment_cost;
  std::sort(costs.begin(), costs.end(), std::greater<Rat>());
  Rat total = 0;
  for (int i = 0; i < k && i < (int)costs.size(); ++i) total += costs[i];
  return total;
}

}  // namespace

void parallel_for(int n, const std::function<void(int)>& fn) {
  int workers = (int)std::thread::hardware_concurrency();
  if (const char* env = std::getenv("RCOVER_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) workers = w;
  }
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next(0);
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

RobustSolution run_guess_and_verify(const Instance& inst, const DiscriminatingAlgorithm& algo,
                                    const Rat& epsilon) {
  std::vector<Rat> thresholds;
  sweep_thresholds(inst, epsilon, &thresholds);

  std::vector<DiscriminatingOutput> runs(thresholds.size());
  parallel_for((int)thresholds.size(), [&](int i) { runs[i] = algo(inst, thresholds[i]); });

  int best = -1;
  Rat best_metric;
  for (int i = 0; i < (int)runs.size(); ++i) {
    Rat metric = runs[i].first_stage_cost + inst.lambda * runs[i].beta * thresholds[i];
    if (best < 0 || metric < best_metric) {
      best = i;
      best_metric = metric;
    }
  }
  assert(best >= 0);

  RobustSolution sol;
  sol.chosen = std::move(runs[best]);
  sol.objective_upper = sol.chosen.first_stage_cost +
                        inst.lambda * top_k_augment_sum(sol.chosen.augment_cost, inst.k);
  return sol;
}

Rat evaluate_robust_objective(const Instance& inst, const RobustSolution& sol, EvalMode mode,
                              long enumeration_cap) {
  const int m = demand_count(inst);
  if ((int)sol.chosen.singleton_augment.size() != m)
    throw std::invalid_argument("solution augmentation map does not match the demand count");
  Rat first = items_first_cost(inst, sol.chosen.first_stage);
  if (mode == EvalMode::bound)
    return first + inst.lambda * top_k_augment_sum(sol.chosen.augment_cost, inst.k);

  const int k = std::min(inst.k, m);
  // C(m,k) guard before enumerating.
  long combos = 1;
  for (int i = 0; i < k; ++i) {
    combos = combos * (m - i) / (i + 1);
    if (combos > enumeration_cap)
      throw std::invalid_argument("exact objective evaluation: scenario count exceeds the cap");
  }

  Rat worst = 0;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<Rat> costs = item_costs(inst);
  for (;;) {
    // Union of the singleton augmentations of this scenario.
    std::vector<int> items;
    for (int i : pick)
      items.insert(items.end(), sol.chosen.singleton_augment[i].begin(),
                   sol.chosen.singleton_augment[i].end());
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    Rat cost = 0;
    for (int id : items) cost += costs[id];
    worst = std::max(worst, cost);
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return first + inst.lambda * worst;
}

RobustSolution trivial_second_stage_solution(const Instance& inst) {
  const int m = demand_count(inst);
  RobustSolution sol;
  sol.from_trivial = true;
  sol.chosen.T = 0;
  sol.chosen.first_stage_cost = 0;
  sol.chosen.alpha1 = sol.chosen.alpha2 = sol.chosen.beta = 0;
  sol.chosen.singleton_augment.resize(m);
  sol.chosen.augment_cost.resize(m);
  for (int i = 0; i < m; ++i) {
    SingletonCover cover = exact_singleton_cover(inst, i);
    sol.chosen.singleton_augment[i] = std::move(cover.items);
    sol.chosen.augment_cost[i] = cover.cost;
  }
  sol.objective_upper = inst.lambda * top_k_augment_sum(sol.chosen.augment_cost, inst.k);
  return sol;
}

MaxMinResult run_maxmin_driver(const Instance& inst, const DiscriminatingAlgorithm& algo,
                               const WitnessExtractor& extract, const Rat& epsilon,
                               std::uint64_t seed) {
  if (inst.lambda != 1)
    throw std::invalid_argument("max-min driver requires lambda = 1");

  std::vector<Rat> thresholds;
  sweep_thresholds(inst, epsilon, &thresholds);
  // thresholds[0] is the T=0 probe the robust driver uses; the max-min scan
  // works on the geometric part only.
  std::vector<Rat> grid(thresholds.begin() + 1, thresholds.end());

  MaxMinResult result;
  if (grid.empty()) {
    // All costs zero: every cover is free.
    result.witness = {0};
    result.certified_lower = 0;
    result.universal_upper = 0;
    result.p = 0;
    return result;
  }

  std::vector<DiscriminatingOutput> runs(grid.size());
  std::vector<char> ran(grid.size(), 0);
  auto run_at = [&](int i) {
    if (!ran[i]) {
      runs[i] = algo(inst, grid[i]);
      ran[i] = 1;
    }
    return runs[i];
  };

  int p = -1;
  for (int i = 0; i < (int)grid.size(); ++i) {
    DiscriminatingOutput out = run_at(i);
    if (out.first_stage_cost <= out.alpha2 * grid[i]) {
      p = i;
      break;
    }
  }
  if (p < 0)
    throw std::logic_error(
        "max-min driver: no grid threshold satisfied the first-stage bound (cost scaling bug)");

  const DiscriminatingOutput& at_p = runs[p];
  result.p = p;
  result.universal_upper = (at_p.alpha2 + at_p.beta) * grid[p];

  if (p == 0) {
    // The test already passes at the smallest threshold, so there is no
    // expensive t_{p-1} to extract a witness from. The single costliest
    // demand is a sound witness (cover costs are monotone under supersets)
    // and its exact cost is the certificate; any positive cost is >= grid[0]
    // because scaled costs are integers.
    int best = 0;
    Rat best_cost = -1;
    for (int i = 0; i < demand_count(inst); ++i) {
      Rat c = exact_singleton_cover(inst, i).cost;
      if (c > best_cost) {
        best = i;
        best_cost = c;
      }
    }
    result.witness = {best};
    result.certified_lower = best_cost;
    result.witness_T = 0;
    result.note = "singleton fallback";
    return result;
  }

  Rat t_prev = grid[p - 1];
  WitnessResult w = extract(inst, t_prev, seed);
  assert((int)w.demands.size() <= inst.k);
  result.witness = w.demands;
  result.witness_T = t_prev;
  result.note = w.note;
  if (w.certificate >= t_prev) {
    result.certified_lower = t_prev;
  } else {
    result.certified_lower = w.certificate;
    result.weakened = true;
  }
  assert(result.certified_lower <= result.universal_upper);
  return result;
}

}  // namespace rcover
