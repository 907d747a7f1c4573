#include "rcover/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rcover/framework.hpp"
#include "rcover/io.hpp"
#include "rcover/oracle.hpp"
#include "rcover/setcover.hpp"
#include "rcover/solve.hpp"
#include "rcover/steiner.hpp"

namespace rcover {
namespace {

constexpr long kExactEvalCap = 200000;

bool scenario_count_within(int n, int k, long cap) {
  k = std::min(k, n);
  long count = 1;
  for (int i = 1; i <= k; ++i) {
    if (count > cap * i) return false;
    count = count * (n - k + i) / i;
  }
  return count <= cap;
}

Rat tolerance() { return Rat(1, 1000000000); }

// alpha2 + beta of the lambda = 1 parameterization the max-min driver runs.
Rat maxmin_alpha2_plus_beta(const Instance& inst) {
  switch (inst.kind) {
    case ProblemKind::set_cover:
      return 12 * harmonic(inst.universe) + setcover_beta(int(inst.sets.size()));
    case ProblemKind::steiner_tree:
      return 2 + steiner_tree_beta(1);
    case ProblemKind::steiner_forest:
      return Rat(18);  // gamma = 3: alpha2 = 4*gamma/(gamma-2) = 12, beta = 2*gamma = 6
    default:
      throw std::logic_error("no max-min parameterization for this kind");
  }
}

void set_ratio(RatioRow* row, const Rat& num, const Rat& den) {
  if (den > 0)
    row->ratio = num / den;
  else if (num == 0)
    row->ratio = Rat(1);
  // a positive value over a zero optimum has no finite ratio; leave it unset
}

void mark_infeasible(RatioRow* row, const std::string& what) {
  row->status = "infeasible";
  row->note = what;
}

void mark_refused(RatioRow* row, const std::string& what) {
  if (row->status == "ok") row->status = "oracle-refused";
  row->note = row->note.empty() ? what : row->note + "; " + what;
}

RatioRow robust_row(const Instance& inst, const ExperimentConfig& cfg) {
  RatioRow row;
  row.pipeline = "robust";
  row.status = "ok";
  RobustSolution sol = solve_robust(inst, cfg.epsilon);
  row.chosen_T = sol.chosen.T;
  row.first_cost = sol.chosen.first_stage_cost;
  row.objective_bound = sol.objective_upper;
  row.second_part = sol.objective_upper - sol.chosen.first_stage_cost;
  row.items = sol.chosen.first_stage;
  if (sol.from_trivial) row.note = "trivial second stage";

  // Feasibility: first stage + per-demand augmentation covers each demand,
  // and each augmentation respects the beta*T/k budget.
  int dc = demand_count(inst);
  for (int i = 0; i < dc && row.status == "ok"; ++i) {
    std::vector<int> items = sol.chosen.first_stage;
    const std::vector<int>& aug = sol.chosen.singleton_augment[i];
    items.insert(items.end(), aug.begin(), aug.end());
    if (!covers(inst, items, {i}))
      mark_infeasible(&row, "demand " + demand_label(inst, i) + " left uncovered");
  }
  if (row.status == "ok" && !sol.from_trivial) {
    Rat bar = sol.chosen.beta * sol.chosen.T / inst.k;
    for (int i = 0; i < dc; ++i)
      if (sol.chosen.augment_cost[i] > bar) {
        mark_infeasible(&row, "augmentation for " + demand_label(inst, i) + " over budget");
        break;
      }
  }

  // The returned solution undercuts every compared route, so its ratio is
  // below each route's guarantee: the driver's (1+eps)*max{a1, beta+a2/l}
  // and - for the graph problems, whose solver races the trivial all-second-
  // stage solution - lambda*k as well.
  Rat lk = inst.lambda * inst.k;
  if (inst.kind == ProblemKind::set_cover) {
    row.bound = robust_ratio_bound(sol.chosen, inst.lambda, cfg.epsilon);
  } else if (sol.from_trivial) {
    row.bound = lk;
  } else {
    Rat driver = robust_ratio_bound(sol.chosen, inst.lambda, cfg.epsilon);
    row.bound = driver < lk ? driver : lk;
  }
  row.asserted = inst.kind != ProblemKind::multicut;

  if (!cfg.with_oracle) return row;
  try {
    ExactRobustResult opt = exact_robust_opt(inst);
    row.oracle_opt = opt.objective;
    if (!scenario_count_within(dc, inst.k, kExactEvalCap)) {
      mark_refused(&row, "exact objective enumeration over the cap");
      return row;
    }
    Rat exact = evaluate_robust_objective(inst, sol, EvalMode::exact, kExactEvalCap);
    row.objective_exact = exact;
    if (exact > sol.objective_upper)
      mark_infeasible(&row, "exact objective above its top-k bound");
    set_ratio(&row, exact, opt.objective);
  } catch (const OracleRefusal& e) {
    mark_refused(&row, e.what());
    return row;
  }
  if (row.status != "ok") return row;
  if (row.ratio) {
    if (*row.ratio < 1 - tolerance())
      mark_infeasible(&row, "objective below the exact optimum");
    else if (row.asserted && *row.ratio > *row.bound + tolerance())
      row.status = "bound-violated";
  } else if (row.asserted) {
    row.status = "bound-violated";  // positive objective against a zero optimum
  }
  return row;
}

RatioRow maxmin_row(const Instance& inst, const ExperimentConfig& cfg, std::uint64_t seed) {
  RatioRow row;
  row.pipeline = "maxmin";
  row.status = "ok";
  MaxMinResult mm = solve_maxmin(inst, cfg.epsilon, seed);
  row.chosen_T = mm.witness_T;
  row.first_cost = mm.certified_lower;
  row.objective_bound = mm.universal_upper;
  row.items = mm.witness;
  row.note = mm.note;
  if (mm.weakened) row.status = "weakened";

  if (inst.kind == ProblemKind::min_cut)
    row.bound = 1 / one_minus_inv_e_lower();
  else if (mm.p == 0)
    row.bound = Rat(inst.k);  // singleton fallback: covers are subadditive
  else
    row.bound = (1 + cfg.epsilon) * maxmin_alpha2_plus_beta(inst);
  row.asserted = !mm.weakened;

  if (!cfg.with_oracle) return row;
  try {
    Rat cover_cost = exact_cover_cost(inst, mm.witness);
    row.objective_exact = cover_cost;
    if (cover_cost < mm.certified_lower)
      mark_infeasible(&row, "witness covers for less than its certificate");
    ExactMaxMinResult opt = exact_maxmin_value(inst);
    row.oracle_opt = opt.value;
    if (opt.value > mm.universal_upper)
      mark_infeasible(&row, "exact max-min above the universal upper bound");
    if (opt.value < cover_cost)
      mark_infeasible(&row, "exact max-min below the witness cover");
    set_ratio(&row, opt.value, mm.certified_lower);
  } catch (const OracleRefusal& e) {
    mark_refused(&row, e.what());
    return row;
  }
  if (row.status == "infeasible") return row;
  if (row.asserted && row.ratio && *row.ratio > *row.bound + tolerance())
    row.status = "bound-violated";
  return row;
}

std::string dec6(const Rat& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", rat_to_double(v));
  return buf;
}

}  // namespace

RatioReport run_experiment(const ExperimentConfig& cfg) {
  int total = cfg.files.empty() ? cfg.count : int(cfg.files.size());
  if (total <= 0) throw std::invalid_argument("experiment needs at least one instance");

  std::vector<std::vector<RatioRow>> per(total);
  parallel_for(total, [&](int i) {
    Instance inst;
    if (cfg.files.empty()) {
      inst = generate_instance(cfg.gen, cfg.seed + std::uint64_t(i));
    } else {
      ParseOptions opts;
      opts.k = cfg.k;
      opts.lambda = cfg.lambda;
      opts.format = cfg.format;
      inst = parse_instance_file(cfg.files[i], opts);
    }
    std::vector<RatioRow> rows;
    if (cfg.run_robust) rows.push_back(robust_row(inst, cfg));
    // When both pipelines run, instances the max-min solver cannot handle
    // (lambda != 1, multicut) just contribute no max-min row.  When max-min
    // was requested on its own, let solve_maxmin raise instead of silently
    // producing an empty report.
    bool maxmin_supported = inst.lambda == 1 && inst.kind != ProblemKind::multicut;
    if (cfg.run_maxmin && (maxmin_supported || !cfg.run_robust))
      rows.push_back(maxmin_row(inst, cfg, cfg.seed + std::uint64_t(i)));
    for (RatioRow& r : rows) {
      r.id = i;
      r.problem = problem_name(inst.kind);
      r.n = inst.kind == ProblemKind::set_cover ? inst.universe : inst.graph.n;
      r.m = item_count(inst);
      r.k = inst.k;
      r.lambda = inst.lambda;
    }
    per[i] = std::move(rows);
  });

  RatioReport rep;
  Rat sum = 0;
  int with_ratio = 0;
  for (auto& rows : per)
    for (RatioRow& r : rows) {
      if (r.status == "bound-violated") rep.bound_violated = true;
      if (r.status == "infeasible") rep.infeasible = true;
      if (r.ratio) {
        if (!rep.max_ratio || *r.ratio > *rep.max_ratio) rep.max_ratio = *r.ratio;
        sum += *r.ratio;
        ++with_ratio;
      }
      rep.rows.push_back(std::move(r));
    }
  if (with_ratio > 0) rep.mean_ratio = sum / with_ratio;
  return rep;
}

void write_report(std::ostream& out, const RatioReport& report) {
  out << "# id\tpipeline\tproblem\tn\tm\tk\tlambda\tstatus\tchosen_T\tfirst_cost\tsecond_part"
         "\tobjective_bound\tobjective_exact\toracle_opt\tratio\tbound\tnote\n";
  auto rat = [](const Rat& v) { return rat_to_string(v); };
  auto opt_rat = [&](const std::optional<Rat>& v) { return v ? rat(*v) : std::string("-"); };
  auto opt_dec = [](const std::optional<Rat>& v) { return v ? dec6(*v) : std::string("-"); };
  for (const RatioRow& r : report.rows) {
    out << r.id << '\t' << r.pipeline << '\t' << r.problem << '\t' << r.n << '\t' << r.m << '\t'
        << r.k << '\t' << rat(r.lambda) << '\t' << r.status << '\t' << rat(r.chosen_T) << '\t'
        << rat(r.first_cost) << '\t' << rat(r.second_part) << '\t' << rat(r.objective_bound)
        << '\t' << opt_rat(r.objective_exact) << '\t' << opt_rat(r.oracle_opt) << '\t'
        << opt_dec(r.ratio) << '\t' << opt_dec(r.bound) << '\t'
        << (r.note.empty() ? "-" : r.note) << '\n';
  }
  out << "# rows " << report.rows.size() << '\n';
  out << "# max_ratio " << opt_dec(report.max_ratio) << " mean_ratio "
      << opt_dec(report.mean_ratio) << '\n';
}

int report_exit_code(const RatioReport& report) {
  if (report.infeasible) return 3;
  if (report.bound_violated) return 2;
  return 0;
}

}  // namespace rcover
