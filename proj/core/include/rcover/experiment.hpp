#pragma once
// Batch runner: solve every instance of a config (files or generator draws),
// compare against the exact oracles where they fit, and emit a tab-separated
// ratio report. Rows are computed concurrently but reported in instance-id
// order, and everything is deterministic given (config, seed).
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rcover/gen.hpp"
#include "rcover/instance.hpp"

namespace rcover {

struct ExperimentConfig {
  // Instance source: parse `files` when nonempty, otherwise draw `count`
  // instances from `gen` with seeds seed, seed+1, ...
  std::vector<std::string> files;
  std::optional<ProblemKind> format;  // file parsing override
  std::optional<int> k;               // file parsing override
  std::optional<Rat> lambda;          // file parsing override
  GenConfig gen;
  int count = 50;

  Rat epsilon = Rat(1, 10);
  std::uint64_t seed = 1;
  bool with_oracle = true;   // off = feasibility-only rows
  bool run_robust = true;
  bool run_maxmin = true;    // emitted only where it applies (lambda = 1, not multicut)
  std::string output_path;   // empty = stdout (consumed by the CLI)
};

struct RatioRow {
  int id = 0;
  std::string pipeline;  // "robust" or "maxmin"
  std::string problem;
  int n = 0, m = 0, k = 0;  // universe/sets or vertices/edges
  Rat lambda;
  std::string status;  // ok | oracle-refused | weakened | bound-violated | infeasible
  Rat chosen_T;        // maxmin: the witness threshold
  Rat first_cost;      // maxmin: the certified lower bound
  Rat second_part;     // bound-mode objective minus first_cost (robust only)
  Rat objective_bound;  // maxmin: the universal upper bound
  std::optional<Rat> objective_exact;  // maxmin: exact cover cost of the witness
  std::optional<Rat> oracle_opt;       // robust OPT or exact max-min value
  std::optional<Rat> ratio;   // objective_exact/OPT; maxmin: OPT/first_cost
  std::optional<Rat> bound;   // theoretical cap on `ratio`
  bool asserted = false;      // bound violations flip the exit code
  std::string note;
  std::vector<int> items;  // robust: chosen first stage; maxmin: witness demands
};

struct RatioReport {
  std::vector<RatioRow> rows;
  std::optional<Rat> max_ratio;
  std::optional<Rat> mean_ratio;
  bool bound_violated = false;
  bool infeasible = false;
};

RatioReport run_experiment(const ExperimentConfig& cfg);

// `#`-headed TSV with fixed columns and trailing aggregate comment lines.
void write_report(std::ostream& out, const RatioReport& report);

// 0 clean, 2 when an asserted ratio exceeded its bound, 3 when a feasibility
// or certificate check failed (3 wins when both happened).
int report_exit_code(const RatioReport& report);

}  // namespace rcover
