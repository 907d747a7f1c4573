// rcover: solve, certify and generate two-stage robust covering instances.
//
// Verbs: solve-robust, solve-maxmin, oracle, gen, bench. Exit codes: 0 clean,
// 2 an asserted approximation bound was exceeded, 3 a feasibility or
// certificate check failed, 4 bad input.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rcover/experiment.hpp"
#include "rcover/framework.hpp"
#include "rcover/gen.hpp"
#include "rcover/io.hpp"
#include "rcover/oracle.hpp"
#include "rcover/solve.hpp"

namespace {

using namespace rcover;

struct CliOptions {
  std::uint64_t seed = 1;
  std::string epsilon = "1/10";
  int k = 0;               // 0 = not given
  std::string lambda;      // empty = not given
  std::string format;      // empty = dispatch on file sections
  std::string output;      // empty = stdout
  bool no_oracle = false;
  bool solution = false;

  // generator knobs (gen verb, or --generate batches on the solve verbs)
  int gen_n = 8;
  int gen_sets = 6;
  int gen_demands = 3;
  long gen_max_cost = 8;
  std::string gen_edge_prob = "2/5";
  std::string gen_membership = "1/4";
  bool gen_nonuniform = false;
  bool gen_unrooted = false;
  int count = 1;

  std::vector<std::string> files;
  int generate = 0;  // solve verbs: instance count to draw instead of files
};

std::ostream& open_output(const CliOptions& opt, std::ofstream* file) {
  if (opt.output.empty()) return std::cout;
  file->open(opt.output);
  if (!*file) throw ParseError(0, "cannot write `" + opt.output + "`");
  return *file;
}

GenConfig gen_config(const CliOptions& opt) {
  GenConfig gen;
  gen.kind = opt.format.empty() ? ProblemKind::set_cover : problem_kind_from_name(opt.format);
  gen.n = opt.gen_n;
  gen.sets = opt.gen_sets;
  gen.demands = opt.gen_demands;
  gen.max_cost = opt.gen_max_cost;
  gen.edge_probability = rat_from_string(opt.gen_edge_prob);
  gen.membership_probability = rat_from_string(opt.gen_membership);
  gen.nonuniform = opt.gen_nonuniform;
  gen.rooted = !opt.gen_unrooted;
  if (opt.k > 0) gen.k = opt.k;
  if (!opt.lambda.empty()) gen.lambda = rat_from_string(opt.lambda);
  return gen;
}

ExperimentConfig experiment_config(const CliOptions& opt) {
  ExperimentConfig cfg;
  cfg.files = opt.files;
  if (!opt.format.empty()) cfg.format = problem_kind_from_name(opt.format);
  if (opt.k > 0) cfg.k = opt.k;
  if (!opt.lambda.empty()) cfg.lambda = rat_from_string(opt.lambda);
  cfg.gen = gen_config(opt);
  cfg.count = opt.generate;
  cfg.epsilon = rat_from_string(opt.epsilon);
  cfg.seed = opt.seed;
  cfg.with_oracle = !opt.no_oracle;
  cfg.output_path = opt.output;
  if (cfg.files.empty() && cfg.count <= 0)
    throw ParseError(0, "give instance files or --generate N");
  return cfg;
}

int run_solve(const CliOptions& opt, bool maxmin) {
  ExperimentConfig cfg = experiment_config(opt);
  cfg.run_robust = !maxmin;
  cfg.run_maxmin = maxmin;
  RatioReport report = run_experiment(cfg);
  std::ofstream file;
  std::ostream& out = open_output(opt, &file);
  write_report(out, report);
  if (opt.solution)
    for (const RatioRow& row : report.rows) {
      out << "# solution id=" << row.id << ' ' << row.pipeline << ' '
          << (row.pipeline == "maxmin" ? "witness" : "first_stage");
      for (int item : row.items) out << ' ' << item;
      out << '\n';
    }
  return report_exit_code(report);
}

int run_oracle(const CliOptions& opt) {
  if (opt.files.empty() && opt.generate <= 0)
    throw ParseError(0, "give instance files or --generate N");
  std::ofstream file;
  std::ostream& out = open_output(opt, &file);
  ParseOptions popts;
  if (opt.k > 0) popts.k = opt.k;
  if (!opt.lambda.empty()) popts.lambda = rat_from_string(opt.lambda);
  if (!opt.format.empty()) popts.format = problem_kind_from_name(opt.format);
  GenConfig gen = gen_config(opt);

  int total = opt.files.empty() ? opt.generate : int(opt.files.size());
  for (int i = 0; i < total; ++i) {
    Instance inst = opt.files.empty()
                        ? generate_instance(gen, opt.seed + std::uint64_t(i))
                        : parse_instance_file(opt.files[i], popts);
    out << "instance " << i << " problem=" << problem_name(inst.kind)
        << " k=" << inst.k << " lambda=" << rat_to_string(inst.lambda) << '\n';
    int dc = demand_count(inst);
    try {
      auto scenarios = k_subsets(dc, std::min(inst.k, dc), 20000);
      for (const auto& sc : scenarios) {
        out << "scenario";
        for (int d : sc) out << ' ' << d;
        out << " cost " << rat_to_string(exact_cover_cost(inst, sc)) << '\n';
      }
    } catch (const OracleRefusal& e) {
      out << "scenarios refused: " << e.what() << '\n';
    }
    try {
      ExactRobustResult opt_r = exact_robust_opt(inst);
      out << "robust_opt " << rat_to_string(opt_r.objective) << " first_stage_cost "
          << rat_to_string(opt_r.first_stage_cost) << " worst_augment "
          << rat_to_string(opt_r.worst_augment_cost) << " first_stage";
      for (int item : opt_r.first_stage) out << ' ' << item;
      out << " worst_scenario";
      for (int d : opt_r.worst_scenario) out << ' ' << d;
      out << '\n';
    } catch (const OracleRefusal& e) {
      out << "robust_opt refused: " << e.what() << '\n';
    }
    try {
      ExactMaxMinResult mm = exact_maxmin_value(inst);
      out << "maxmin " << rat_to_string(mm.value) << " scenario";
      for (int d : mm.scenario) out << ' ' << d;
      out << '\n';
    } catch (const OracleRefusal& e) {
      out << "maxmin refused: " << e.what() << '\n';
    }
  }
  return 0;
}

int run_gen(const CliOptions& opt) {
  GenConfig gen = gen_config(opt);
  if (opt.count < 1) throw ParseError(0, "--count must be >= 1");
  if (opt.count == 1) {
    Instance inst = generate_instance(gen, opt.seed);
    std::ofstream file;
    std::ostream& out = open_output(opt, &file);
    write_instance(out, inst);
    return 0;
  }
  if (opt.output.empty()) throw ParseError(0, "--count > 1 needs --output as a filename prefix");
  for (int i = 0; i < opt.count; ++i) {
    Instance inst = generate_instance(gen, opt.seed + std::uint64_t(i));
    std::string path = opt.output + std::to_string(i) + ".txt";
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write `" + path + "`");
    write_instance(out, inst);
  }
  return 0;
}

int run_bench(const CliOptions& opt) {
  GenConfig gen = gen_config(opt);
  Rat epsilon = rat_from_string(opt.epsilon);
  int rounds = opt.count < 1 ? 1 : opt.count;
  std::ofstream file;
  std::ostream& out = open_output(opt, &file);
  out << "# bench problem=" << problem_name(gen.kind) << " n=" << gen.n
      << " instances=" << rounds << '\n';
  double total_ms = 0;
  for (int i = 0; i < rounds; ++i) {
    Instance inst = generate_instance(gen, opt.seed + std::uint64_t(i));
    auto start = std::chrono::steady_clock::now();
    RobustSolution sol = solve_robust(inst, epsilon);
    auto stop = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(stop - start).count();
    total_ms += ms;
    out << i << '\t' << ms << "ms\tobjective_bound "
        << rat_to_string(sol.objective_upper) << '\n';
  }
  out << "# total " << total_ms << "ms  mean " << total_ms / rounds << "ms\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-stage robust covering: thresholded algorithms with exact certification"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions opt;
  app.add_option("--seed", opt.seed, "RNG seed for generation and randomized witnesses");
  app.add_option("--epsilon", opt.epsilon, "threshold grid ratio (rational in (0,1), default 1/10)");
  app.add_option("--k", opt.k, "scenario size (overrides instance headers)");
  app.add_option("--lambda", opt.lambda, "second-stage inflation (rational >= 1)");
  app.add_option("--format", opt.format,
                 "problem kind: setcover, steiner-tree, steiner-forest, mincut, multicut");
  app.add_option("--output", opt.output, "write to this path instead of stdout");
  app.add_flag("--no-oracle", opt.no_oracle, "skip exact optimum comparisons");
  app.add_flag("--solution", opt.solution, "append chosen items as # solution lines");
  app.add_option("--n", opt.gen_n, "generator: universe size / vertex count");
  app.add_option("--sets", opt.gen_sets, "generator: number of sets (set cover)");
  app.add_option("--demands", opt.gen_demands, "generator: terminals or pairs (graphs)");
  app.add_option("--max-cost", opt.gen_max_cost, "generator: integer costs drawn from 1..C");
  app.add_option("--edge-prob", opt.gen_edge_prob, "generator: G(n,p) edge probability");
  app.add_option("--membership", opt.gen_membership, "generator: extra set membership probability");
  app.add_flag("--nonuniform", opt.gen_nonuniform, "generator: draw first-stage costs below second");
  app.add_flag("--unrooted", opt.gen_unrooted, "generator: Steiner tree without a root");
  app.add_option("--count", opt.count, "gen/bench: how many instances");

  CLI::App* solve_robust_cmd =
      app.add_subcommand("solve-robust", "minimize first cost + lambda * worst augmentation");
  CLI::App* solve_maxmin_cmd =
      app.add_subcommand("solve-maxmin", "certify the hardest k-set's cover cost (lambda = 1)");
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "exact scenario costs, robust optimum and max-min value");
  CLI::App* gen_cmd = app.add_subcommand("gen", "write random instances");
  CLI::App* bench_cmd = app.add_subcommand("bench", "time solve-robust on generated instances");
  for (CLI::App* sub : {solve_robust_cmd, solve_maxmin_cmd, oracle_cmd}) {
    sub->add_option("files", opt.files, "instance files");
    sub->add_option("--generate", opt.generate, "draw N instances instead of reading files");
    sub->fallthrough();
  }
  gen_cmd->fallthrough();
  bench_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  try {
    if (app.got_subcommand(solve_robust_cmd)) return run_solve(opt, false);
    if (app.got_subcommand(solve_maxmin_cmd)) return run_solve(opt, true);
    if (app.got_subcommand(oracle_cmd)) return run_oracle(opt);
    if (app.got_subcommand(gen_cmd)) return run_gen(opt);
    if (app.got_subcommand(bench_cmd)) return run_bench(opt);
  } catch (const ParseError& e) {
    std::cerr << "rcover: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rcover: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "rcover: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
