#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rcover/experiment.hpp"
#include "rcover/io.hpp"

using namespace rcover;

namespace {

std::string report_text(const RatioReport& rep) {
  std::ostringstream out;
  write_report(out, rep);
  return out.str();
}

int count_tabs(const std::string& line) {
  int t = 0;
  for (char c : line) t += c == '\t';
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("experiment");

TEST_CASE("both pipelines run on set cover at lambda = 1") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::set_cover;
  cfg.gen.n = 6;
  cfg.gen.sets = 6;
  cfg.gen.k = 2;
  cfg.count = 6;
  RatioReport rep = run_experiment(cfg);
  REQUIRE(rep.rows.size() == 12);
  CHECK(report_exit_code(rep) == 0);
  for (int i = 0; i < 6; ++i) {
    const RatioRow& rob = rep.rows[2 * i];
    const RatioRow& mm = rep.rows[2 * i + 1];
    CHECK(rob.id == i);
    CHECK(mm.id == i);
    CHECK(rob.pipeline == "robust");
    CHECK(mm.pipeline == "maxmin");
    CHECK(rob.problem == "setcover");
    CHECK(rob.status == "ok");
    CHECK(mm.status == "ok");

    // robust: exact objective sandwiched between OPT and the bound-mode value
    REQUIRE(rob.oracle_opt.has_value());
    REQUIRE(rob.objective_exact.has_value());
    CHECK(rob.first_cost + rob.second_part == rob.objective_bound);
    CHECK(*rob.oracle_opt <= *rob.objective_exact);
    CHECK(*rob.objective_exact <= rob.objective_bound);
    REQUIRE(rob.ratio.has_value());
    CHECK(*rob.ratio >= Rat(1));
    REQUIRE(rob.bound.has_value());
    CHECK(*rob.ratio <= *rob.bound);

    // maxmin: certified lower <= exact value <= universal upper
    REQUIRE(mm.oracle_opt.has_value());
    CHECK(mm.first_cost <= *mm.oracle_opt);
    CHECK(*mm.oracle_opt <= mm.objective_bound);
    REQUIRE(mm.objective_exact.has_value());
    CHECK(*mm.objective_exact >= mm.first_cost);
    REQUIRE(mm.ratio.has_value());
    CHECK(*mm.ratio >= Rat(1));
  }
  CHECK(rep.max_ratio.has_value());
  CHECK(rep.mean_ratio.has_value());
  CHECK(*rep.mean_ratio <= *rep.max_ratio);
}

TEST_CASE("max-min rows are skipped where the pipeline does not apply") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::set_cover;
  cfg.gen.n = 5;
  cfg.gen.sets = 5;
  cfg.gen.lambda = Rat(2);
  cfg.count = 3;
  RatioReport rep = run_experiment(cfg);
  CHECK(rep.rows.size() == 3);
  for (const RatioRow& r : rep.rows) CHECK(r.pipeline == "robust");

  ExperimentConfig mc;
  mc.gen.kind = ProblemKind::multicut;
  mc.gen.n = 5;
  mc.gen.demands = 2;
  mc.gen.max_cost = 4;
  mc.count = 2;
  RatioReport mc_rep = run_experiment(mc);
  CHECK(mc_rep.rows.size() == 2);
  for (const RatioRow& r : mc_rep.rows) {
    CHECK(r.pipeline == "robust");
    CHECK(!r.asserted);  // multicut ratios are recorded, not asserted
  }
  CHECK(report_exit_code(mc_rep) == 0);
}

TEST_CASE("a max-min-only run on multicut raises instead of emitting nothing") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::multicut;
  cfg.gen.n = 5;
  cfg.gen.demands = 2;
  cfg.gen.max_cost = 4;
  cfg.count = 1;
  cfg.run_robust = false;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::steiner_forest;
  cfg.gen.n = 6;
  cfg.gen.demands = 2;
  cfg.gen.k = 2;
  cfg.count = 4;
  cfg.seed = 9;
  CHECK(report_text(run_experiment(cfg)) == report_text(run_experiment(cfg)));
}

TEST_CASE("report format: 17 tab-separated columns with aggregate trailers") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::set_cover;
  cfg.gen.n = 5;
  cfg.gen.sets = 5;
  cfg.count = 2;
  std::string text = report_text(run_experiment(cfg));
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "# id\tpipeline\tproblem\tn\tm\tk\tlambda\tstatus\tchosen_T\tfirst_cost\tsecond_part"
        "\tobjective_bound\tobjective_exact\toracle_opt\tratio\tbound\tnote");
  CHECK(count_tabs(line) == 16);
  int rows = 0;
  std::string tail1, tail2;
  while (std::getline(in, line)) {
    if (line.rfind("# rows", 0) == 0) {
      tail1 = line;
      std::getline(in, tail2);
      break;
    }
    CHECK(count_tabs(line) == 16);
    rows++;
  }
  CHECK(rows == 4);
  CHECK(tail1 == "# rows 4");
  CHECK(tail2.rfind("# max_ratio ", 0) == 0);
  CHECK(tail2.find(" mean_ratio ") != std::string::npos);
}

TEST_CASE("tree batch stays far under its asserted bound") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::steiner_tree;
  cfg.gen.n = 7;
  cfg.gen.demands = 3;
  cfg.gen.k = 2;
  cfg.gen.lambda = Rat(2);
  cfg.count = 10;
  RatioReport rep = run_experiment(cfg);
  CHECK(!rep.bound_violated);
  CHECK(!rep.infeasible);
  CHECK(report_exit_code(rep) == 0);
  REQUIRE(rep.max_ratio.has_value());
  CHECK(*rep.max_ratio <= Rat(495, 100));
}

TEST_CASE("oracle-free runs leave the comparison columns blank") {
  ExperimentConfig cfg;
  cfg.gen.kind = ProblemKind::min_cut;
  cfg.gen.n = 6;
  cfg.gen.demands = 3;
  cfg.count = 3;
  cfg.with_oracle = false;
  RatioReport rep = run_experiment(cfg);
  for (const RatioRow& r : rep.rows) {
    CHECK(!r.oracle_opt.has_value());
    CHECK(!r.ratio.has_value());
    CHECK(r.status == "ok");
  }
  CHECK(!rep.max_ratio.has_value());
  CHECK(report_text(rep).find("\t-\t-\t-\t") != std::string::npos);
  CHECK(report_exit_code(rep) == 0);
}

TEST_CASE("exit codes: infeasibility outranks a bound violation") {
  RatioReport rep;
  CHECK(report_exit_code(rep) == 0);
  rep.bound_violated = true;
  CHECK(report_exit_code(rep) == 2);
  rep.infeasible = true;
  CHECK(report_exit_code(rep) == 3);
}

TEST_CASE("file lists are solved in order with parse overrides") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rcover_experiment_test";
  fs::create_directories(dir);
  GenConfig gen;
  gen.kind = ProblemKind::steiner_forest;
  gen.n = 6;
  gen.demands = 2;
  std::vector<std::string> files;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    Instance inst = generate_instance(gen, seed);
    fs::path p = dir / ("forest" + std::to_string(seed) + ".txt");
    std::ofstream out(p);
    write_instance(out, inst);
    files.push_back(p.string());
  }

  ExperimentConfig cfg;
  cfg.files = files;
  cfg.format = ProblemKind::steiner_forest;
  cfg.k = 2;
  cfg.lambda = Rat(2);
  cfg.run_maxmin = false;
  RatioReport rep = run_experiment(cfg);
  REQUIRE(rep.rows.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(rep.rows[i].id == i);
    CHECK(rep.rows[i].problem == "steiner-forest");
    CHECK(rep.rows[i].k == 2);
    CHECK(rep.rows[i].lambda == Rat(2));
  }

  ExperimentConfig missing;
  missing.files = {(dir / "nope.txt").string()};
  CHECK_THROWS_AS(run_experiment(missing), ParseError);
}

TEST_SUITE_END();
