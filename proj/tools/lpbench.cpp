// lpbench: benchmark and inspection harness for the double-pivot simplex
// library. Subcommands:
//   run       measure one suite and write CSV/JSON rows
//   compare   run both entering rules on one suite and print head-to-head
//   solve     solve a single MPS file and print the outcome
//   generate  emit a generated instance as an MPS file

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dpsimplex/bench.hpp"
#include "dpsimplex/generators.hpp"
#include "dpsimplex/mps_io.hpp"

namespace {

using namespace dpsimplex;

struct CommonOpts {
  std::string suite = "kleeminty";
  std::string rule = "both";
  std::string sizes;
  int seeds = 10;
  int variant = 0;
  long max_iter = 0;
  std::string ls_filter;  // "", "off", or a fraction in (0,1]
  std::string presolve = "off";
  std::string format = "csv";
  std::string out_dir = ".";
  std::string fixtures;
};

std::vector<int> parse_sizes(const std::string& csv, const std::string& suite) {
  if (csv.empty()) {
    if (suite == "random") return {100};
    return {3, 5, 10};
  }
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  if (out.empty()) throw CLI::ValidationError("--m", "no sizes given");
  return out;
}

std::vector<Rule> parse_rules(const std::string& rule) {
  if (rule == "dantzig") return {Rule::Dantzig};
  if (rule == "double") return {Rule::DoublePivot};
  return {Rule::Dantzig, Rule::DoublePivot};
}

bench::SuiteConfig build_config(const CommonOpts& o) {
  bench::SuiteConfig cfg;
  cfg.sizes = parse_sizes(o.sizes, o.suite);
  cfg.seeds = o.seeds;
  cfg.variant = o.variant;
  cfg.rules = parse_rules(o.rule);
  cfg.base.max_iterations = o.max_iter;
  cfg.presolve_on = o.presolve == "on";
  cfg.fixtures_dir = o.fixtures;
  if (!o.ls_filter.empty()) {
    if (o.ls_filter == "off") {
      cfg.ls_filter_mode = 0;
    } else {
      cfg.ls_filter_mode = 1;
      cfg.base.longest.fraction = std::stod(o.ls_filter);
    }
  }
  if (cfg.fixtures_dir.empty()) {
    if (o.suite == "netlib") cfg.fixtures_dir = "data/netlib";
    if (o.suite == "cycling") cfg.fixtures_dir = "data/cycling";
  }
  return cfg;
}

std::vector<bench::Row> run_suite(const std::string& suite,
                                  const bench::SuiteConfig& cfg) {
  if (suite == "kleeminty") return bench::run_kleeminty(cfg);
  if (suite == "random") return bench::run_random(cfg);
  if (suite == "netlib") return bench::run_netlib(cfg);
  if (suite == "cycling") return bench::run_cycling(cfg);
  throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
}

int write_outputs(const CommonOpts& o, const std::vector<bench::Row>& rows) {
  namespace fs = std::filesystem;
  fs::create_directories(o.out_dir);
  if (o.format == "csv" || o.format == "both") {
    const fs::path p = fs::path(o.out_dir) / (o.suite + ".csv");
    std::ofstream(p) << bench::to_csv(rows);
    std::cout << "wrote " << p.string() << "\n";
  }
  if (o.format == "json" || o.format == "both") {
    const fs::path p = fs::path(o.out_dir) / (o.suite + ".json");
    std::ofstream(p) << bench::to_json(rows);
    std::cout << "wrote " << p.string() << "\n";
  }
  // Exit 1 on any unacceptable outcome. A genuinely unbounded random
  // instance is a correct determination (the generator produces them), but
  // a missing fixture file or any failure status is an error.
  int bad = 0, missing = 0;
  for (const bench::Row& r : rows) {
    if (r.status == "mean") continue;  // aggregate reporting rows
    if (r.status == "missing") ++missing;
    else if (r.status != "optimal" &&
             !(o.suite == "random" && r.status == "unbounded"))
      ++bad;
  }
  if (missing) std::cout << missing << " fixture file(s) missing\n";
  if (bad) std::cout << bad << " run(s) did not reach an optimum\n";
  return (bad || missing) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-pivot simplex benchmark harness"};
  app.require_subcommand(1);

  CommonOpts o;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--suite", o.suite, "kleeminty|random|netlib|cycling")
        ->check(CLI::IsMember({"kleeminty", "random", "netlib", "cycling"}));
    cmd->add_option("--m", o.sizes, "comma-separated instance sizes");
    cmd->add_option("--seeds", o.seeds, "number of seeds (random suite)");
    cmd->add_option("--variant", o.variant, "cube variant (0 = all)");
    cmd->add_option("--max-iter", o.max_iter, "iteration limit (0 = default)");
    cmd->add_option("--ls-filter", o.ls_filter,
                    "longest-step filter: 'off' or a fraction like 0.99");
    cmd->add_option("--presolve", o.presolve, "on|off (default off)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--fixtures", o.fixtures, "fixture directory");
  };

  CLI::App* run = app.add_subcommand("run", "measure one suite");
  add_common(run);
  run->add_option("--rule", o.rule, "dantzig|double|both")
      ->check(CLI::IsMember({"dantzig", "double", "both"}));
  run->add_option("--format", o.format, "csv|json|both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  run->add_option("--out", o.out_dir, "output directory");

  CLI::App* cmp = app.add_subcommand("compare",
                                     "run both rules and print head-to-head");
  add_common(cmp);

  std::string solve_file, solve_rule = "double";
  CLI::App* sol = app.add_subcommand("solve", "solve one MPS file");
  sol->add_option("file", solve_file, "MPS path (.mps or .mps.gz)")
      ->required();
  sol->add_option("--rule", solve_rule, "dantzig|double")
      ->check(CLI::IsMember({"dantzig", "double"}));
  sol->add_option("--presolve", o.presolve, "on|off")
      ->check(CLI::IsMember({"on", "off"}));
  sol->add_option("--max-iter", o.max_iter, "iteration limit (0 = default)");
  sol->add_option("--ls-filter", o.ls_filter,
                  "longest-step filter: 'off' or a fraction");

  std::string gen_out = "-";
  int gen_m = 10;
  std::uint64_t gen_seed = 1;
  CLI::App* gen = app.add_subcommand("generate", "emit an instance as MPS");
  gen->add_option("--suite", o.suite, "kleeminty|random")
      ->check(CLI::IsMember({"kleeminty", "random"}));
  gen->add_option("--variant", o.variant, "cube variant (1-3)");
  gen->add_option("--m", gen_m, "dimension");
  gen->add_option("--seed", gen_seed, "seed (random suite)");
  gen->add_option("--out", gen_out, "output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      bench::SuiteConfig cfg = build_config(o);
      std::vector<bench::Row> rows = run_suite(o.suite, cfg);
      int rc = write_outputs(o, rows);
      if (cfg.rules.size() == 2) {
        bench::CompareReport rep =
            bench::compare(rows, Rule::Dantzig, Rule::DoublePivot);
        std::cout << "median iterations: dantzig " << rep.median_iter_a
                  << ", double " << rep.median_iter_b << " (improvement "
                  << rep.iteration_improvement_pct << "%)\n";
      }
      return rc;
    }
    if (cmp->parsed()) {
      o.rule = "both";
      bench::SuiteConfig cfg = build_config(o);
      std::vector<bench::Row> rows = run_suite(o.suite, cfg);
      bench::CompareReport rep =
          bench::compare(rows, Rule::Dantzig, Rule::DoublePivot);
      std::cout << bench::format_compare(rep);
      return rep.mismatched_sets ? 2 : 0;
    }
    if (sol->parsed()) {
      MpsReadResult mr = read_mps(solve_file);
      for (const MpsWarning& w : mr.warnings)
        std::cerr << "warning: line " << w.line << ": " << w.message << "\n";
      SolveOptions opts;
      opts.rule = solve_rule == "dantzig" ? Rule::Dantzig : Rule::DoublePivot;
      opts.max_iterations = o.max_iter;
      if (!o.ls_filter.empty()) {
        if (o.ls_filter == "off")
          opts.longest.filter = false;
        else {
          opts.longest.filter = true;
          opts.longest.fraction = std::stod(o.ls_filter);
        }
      }
      bench::GeneralSolve g =
          bench::solve_general(mr.lp, opts, o.presolve == "on");
      std::cout << "problem:       " << mr.lp.name << "\n"
                << "status:        " << to_string(g.status) << "\n";
      if (g.status == SolveStatus::Optimal) {
        std::printf("objective:     %.10g\n", g.objective);
        std::printf("infeasibility: %.3e\n", g.infeasibility);
      }
      std::cout << "iterations:    " << g.iterations << " (phase 1: "
                << g.phase1_iterations << ", double pivots: "
                << g.double_pivots << ")\n";
      std::printf("time:          %.3f ms\n", g.time_ms);
      if (!g.raw.message.empty())
        std::cout << "detail:        " << g.raw.message << "\n";
      return g.status == SolveStatus::Optimal ? 0 : 1;
    }
    if (gen->parsed()) {
      StandardFormLP lp;
      if (o.suite == "random") {
        lp = random_dense(gen_m, gen_seed).lp;
      } else {
        const int variant = o.variant == 0 ? 1 : o.variant;
        lp = klee_minty(variant, gen_m).lp;
      }
      const std::string text = write_mps(lp);
      if (gen_out == "-") {
        std::cout << text;
      } else {
        std::ofstream(gen_out) << text;
        std::cout << "wrote " << gen_out << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
