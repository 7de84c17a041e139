#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dpsimplex/linalg.hpp"
#include "dpsimplex/model.hpp"
#include "dpsimplex/pivot.hpp"
#include "dpsimplex/slope2v.hpp"

namespace dpsimplex {

enum class Rule { Dantzig, DoublePivot };

enum class SolveStatus {
  Optimal,
  Unbounded,
  Infeasible,
  IterationLimit,
  Breakdown,  // repeated numerical failure; result not trustworthy
};

const char* to_string(SolveStatus s);
const char* to_string(Rule r);

/// What one pivot step did.
enum class StepKind {
  Single,        // one entering column chosen by the active entering rule
  Double,        // two columns entered together from the planar subproblem
  DoublePinned,  // planar subproblem applied but pinned one column at zero
  Stall,         // planar subproblem returned the origin; no basis change
  Bland,         // single pivot under the lowest-index anti-cycling rule
};

struct Tolerances {
  double zero_tol = 1e-9;      // reduced-cost optimality threshold
  double pivot_tol = 1e-10;    // ratio-test eligibility threshold
  double feas_tol = 1e-9;      // feasibility band (relative to 1 + |b|)
  double singular_tol = 1e-11; // LU singularity threshold
  double lu_eps = 1e-10;       // LU replacement magnitude factor
  double improve_rel = 1e-12;  // minimum relative objective progress
  double perturb_rel = 1e-10;  // degenerate-zero replacement factor
};

struct SolveOptions {
  Rule rule = Rule::DoublePivot;
  /// 0 selects the default of 1000 * (rows + cols).
  long max_iterations = 0;
  /// Switch to the lowest-index entering rule after a degenerate stall and
  /// back after the next strict improvement.
  bool bland_guard = true;
  /// Replace exact zeros among the basic values by a tiny positive delta so
  /// degenerate ties cannot repeat verbatim.
  bool perturb_degenerate = true;
  LongestStepOptions longest;
  Tolerances tol;
  bool record_iterations = true;
  bool record_basis = false;  // also store the full basic set per step
};

struct IterationRecord {
  long index = 0;  // 1-based across both phases
  int phase = 2;
  StepKind kind = StepKind::Single;
  int n_entering = 0;
  int entering[2] = {-1, -1};
  double entered_value[2] = {0.0, 0.0};
  int n_leaving = 0;
  int leaving[2] = {-1, -1};
  // Step-quality diagnostics of the two entering rules and their planar
  // combination (all <= 0; NaN when not computed this step).
  double f1 = std::numeric_limits<double>::quiet_NaN();
  double f2 = std::numeric_limits<double>::quiet_NaN();
  double f3 = std::numeric_limits<double>::quiet_NaN();
  double objective = 0.0;  // active-phase objective after the step
  bool degenerate_before = false, degenerate_after = false;
  bool bland_mode = false;
  std::uint64_t basis_signature = 0;
  std::vector<int> basis;  // only when record_basis
};

struct SolveResult {
  SolveStatus status = SolveStatus::Breakdown;
  std::vector<double> x;  // full-length point (empty unless Optimal)
  double objective = std::numeric_limits<double>::quiet_NaN();
  double infeasibility = std::numeric_limits<double>::quiet_NaN();
  long iterations = 0;          // pivot steps across both phases
  long phase1_iterations = 0;
  long double_pivots = 0;       // steps entering two columns at once
  long bland_pivots = 0;
  long stalled_steps = 0;
  double time_ms = 0.0;
  std::string message;
  std::vector<IterationRecord> log;
  BasisPartition final_basis;        // over the extended column set
  std::vector<double> final_x_basic;
};

/// Solves min c^T x, A x = b, x >= 0 with a two-phase primal simplex.
/// Phase 1 covers rows with singleton columns where possible and adds
/// sign-matched artificial columns for the rest; phase 2 runs the configured
/// entering rule. Every iteration refactorizes the basis from scratch.
SolveResult solve(const StandardFormLP& lp, const SolveOptions& opts = {});

/// Exposed phase-1 outcome for direct testing.
struct Phase1Result {
  bool feasible = false;
  StandardFormLP extended;  // input columns plus appended artificials
  int num_original = 0;
  std::vector<int> artificial_ids;
  std::vector<int> retained_artificials;  // still basic (redundant rows)
  BasisPartition basis;
  std::vector<double> x_basic;
  long iterations = 0;
  double artificial_objective = 0.0;
};

Phase1Result phase1(const StandardFormLP& lp, const SolveOptions& opts = {});

/// Builds the planar subproblem for two candidate columns against the
/// current basis: x1 tracks `col_a`, x2 tracks `col_b`.
struct AssembledPlane {
  TwoVarLP lp;
  std::vector<double> a_bar_a, a_bar_b;
};

AssembledPlane assemble_plane(const StandardFormLP& lp, const LUFactors& f,
                              std::span<const double> x_basic, int col_a,
                              int col_b, double cbar_a, double cbar_b);

}  // namespace dpsimplex
