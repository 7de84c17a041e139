#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dpsimplex/engine.hpp"
#include "dpsimplex/mps_io.hpp"

namespace dpsimplex::bench {

/// One benchmark measurement. `seed` is zero for deterministic instances.
/// Counters are doubles so that aggregate rows (status "mean", appended by
/// the seeded suites) can carry exact averages; per-run rows hold integers.
struct Row {
  std::string problem;
  std::string rule;
  std::string status;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double iterations = 0;
  double double_pivots = 0;
  double infeasibility = std::numeric_limits<double>::quiet_NaN();
  double time_ms = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader =
    "problem,rule,status,objective,iterations,double_pivots,infeasibility,"
    "time_ms,seed";

std::string to_csv(std::span<const Row> rows);
std::string to_json(std::span<const Row> rows);

/// The classic small test set with its canonical optimal objectives.
struct NetlibCase {
  std::string name;
  double objective;
};
const std::vector<NetlibCase>& netlib_cases();

/// End-to-end solve of a general model: optional presolve, conversion to
/// equality standard form, simplex, then recovery of the original-space
/// objective and point.
struct GeneralSolve {
  SolveStatus status = SolveStatus::Breakdown;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double infeasibility = std::numeric_limits<double>::quiet_NaN();
  long iterations = 0;
  long phase1_iterations = 0;
  long double_pivots = 0;
  double time_ms = 0.0;
  std::vector<double> x_original;
  SolveResult raw;  // standard-space details (telemetry, final basis, ...)
};

GeneralSolve solve_general(const GeneralLP& lp, const SolveOptions& opts,
                           bool use_presolve);

/// Shared configuration for the suite runners. `ls_filter_mode` selects the
/// longest-step candidate filter: -1 applies the suite's default (off for
/// the generated suites, on for the file-based ones), 0 forces it off, 1
/// forces it on with `base.longest.fraction`.
struct SuiteConfig {
  std::vector<int> sizes = {10};
  int seeds = 10;
  int variant = 0;  // cube suite: 0 runs variants 1-3
  std::vector<Rule> rules = {Rule::Dantzig, Rule::DoublePivot};
  SolveOptions base;
  int ls_filter_mode = -1;
  bool presolve_on = false;
  std::string fixtures_dir;
};

std::vector<Row> run_kleeminty(const SuiteConfig& cfg);
std::vector<Row> run_random(const SuiteConfig& cfg);
std::vector<Row> run_netlib(const SuiteConfig& cfg);
std::vector<Row> run_cycling(const SuiteConfig& cfg);

double median(std::vector<double> v);

struct ComparePair {
  std::string problem;
  std::uint64_t seed = 0;
  long iter_a = -1, iter_b = -1;
  double time_a = 0.0, time_b = 0.0;
};

struct CompareReport {
  std::string rule_a, rule_b;
  std::vector<ComparePair> pairs;
  bool mismatched_sets = false;  // a problem measured under only one rule
  double median_iter_a = 0.0, median_iter_b = 0.0;
  double median_time_a = 0.0, median_time_b = 0.0;
  double iteration_improvement_pct = 0.0;  // (a - b) / a * 100
  double time_improvement_pct = 0.0;
};

CompareReport compare(std::span<const Row> rows, Rule a, Rule b);
std::string format_compare(const CompareReport& rep);

}  // namespace dpsimplex::bench
