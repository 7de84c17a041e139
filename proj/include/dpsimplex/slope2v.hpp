#pragma once

#include <span>
#include <vector>

namespace dpsimplex {

/// One row a1*x1 + a2*x2 <= rhs of the two-variable subproblem.
struct TwoVarRow {
  double a1 = 0.0, a2 = 0.0, rhs = 0.0;
};

/// Two-variable LP in maximization form:
///
///   maximize c1*x1 + c2*x2   subject to   rows,  x >= 0
///
/// with c1, c2 > 0 and all right-hand sides nonnegative (the origin is
/// feasible). The last two rows are always the sign rows (-1, 0 | 0) and
/// (0, -1 | 0); `structural_rows()` counts the rows before them.
struct TwoVarLP {
  std::vector<TwoVarRow> rows;
  double c1 = 1.0, c2 = 1.0;

  int structural_rows() const { return static_cast<int>(rows.size()) - 2; }

  /// Builds the subproblem from two minimization-form columns: given the
  /// basis-transformed columns `col_a`, `col_b`, the current basic values
  /// `rhs`, and the (negative) reduced costs of the two candidate columns,
  /// produces the equivalent maximization over the candidates' step lengths.
  /// x1 corresponds to col_a, x2 to col_b. Tiny negative rhs entries (inside
  /// 1e-7 * (1 + max |rhs|)) are clamped to zero; larger ones throw.
  static TwoVarLP from_min_form(std::span<const double> col_a,
                                std::span<const double> col_b,
                                std::span<const double> rhs, double cbar_a,
                                double cbar_b);
};

/// Sign pattern of one row, the basis for the angular ordering. Names give
/// the signs of (a1, a2).
enum class RowCase {
  ZeroNeg,   // (0, <0)
  PosNeg,    // (>0, <0)
  PosZero,   // (>0, 0)
  PosPos,    // (>0, >0)
  ZeroPos,   // (0, >0)
  NegPos,    // (<0, >0)
  NegZero,   // (<0, 0)
  ZeroZero,  // (0, 0)
  NegNeg,    // (<0, <0)
};

RowCase classify_row(const TwoVarRow& row);

struct BigM {
  double value = 0.0;   // the separator actually used
  double max_ratio_12 = 0.0;  // max |a1/a2| over rows with a2 != 0
  double max_ratio_21 = 0.0;  // max |a2/a1| over rows with a1 != 0
};

/// A value strictly larger than every attainable slope key and the objective
/// slope c2/c1. Uses max + 1, falling back to 2 * max when the addition is
/// absorbed by rounding at large magnitudes.
BigM compute_big_M(const TwoVarLP& lp);

/// Angular sort key of a row. Rows pointing "rightward" of the objective
/// gradient sort low, rows pointing "leftward" sort high; degenerate rows
/// ((0,0) and (<0,<0), which never bind at an optimum with positive costs)
/// are pushed past everything at 3M.
double alpha_key(const TwoVarRow& row, double big_m);

/// Decides unboundedness from the two rows bracketing the objective slope.
/// `alpha_j` / `alpha_k` are their sort keys; `big_m` is the separator used
/// to produce them. The test is exact: it works on the rows' sign patterns,
/// not on floating comparisons against multiples of big_m.
bool is_unbounded(double alpha_j, double alpha_k, const TwoVarRow& row_j,
                  const TwoVarRow& row_k, double big_m);

enum class SlopeStatus { Optimal, Unbounded };

struct SlopeStats {
  long alpha_evaluations = 0;
  long sort_comparisons = 0;
  long sweep_passes = 0;
  long intersections = 0;
  long skipped_parallel = 0;
};

struct SlopeResult {
  SlopeStatus status = SlopeStatus::Optimal;
  double x1 = 0.0, x2 = 0.0;
  double objective = 0.0;      // c1*x1 + c2*x2
  int basis_row1 = -1;         // final active row on the low-key side
  int basis_row2 = -1;         // final active row on the high-key side
  int initial_row_j = -1, initial_row_k = -1;  // bracket before the sweep
  double big_m = 0.0;
  std::vector<double> alpha;   // sort key per row, in input row order
};

/// Solves the two-variable LP by ordering rows around the objective slope,
/// testing the bracketing pair for unboundedness, and otherwise sweeping
/// outward from the bracket, reintersecting whenever a scanned row is
/// violated. Runs in O(rows log rows); no simplex iterations involved.
SlopeResult slope_solve(const TwoVarLP& lp, SlopeStats* stats = nullptr);

}  // namespace dpsimplex
