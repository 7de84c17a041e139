#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpsimplex/linalg.hpp"
#include "dpsimplex/model.hpp"

namespace dpsimplex {

/// Reduced costs of all nonbasic columns (in nonbasic slot order) via one
/// transpose solve with the current basis factors.
std::vector<double> reduced_costs(const StandardFormLP& lp,
                                  const BasisPartition& bp,
                                  const LUFactors& f);

/// Nonbasic slots whose reduced cost is below -zero_tol, ascending. Because
/// the nonbasic list is kept sorted by column id, ascending slot order is
/// also ascending column id order.
std::vector<int> candidate_slots(std::span<const double> reduced,
                                 double zero_tol);

/// Most negative reduced cost among the candidates; ties resolved to the
/// lowest slot. Empty candidates -> nullopt (current basis is optimal).
std::optional<int> dantzig_entering(std::span<const double> reduced,
                                    std::span<const int> candidates);

/// Lowest-slot candidate (with the sorted nonbasic list this is the lowest
/// column id with a negative reduced cost).
std::optional<int> bland_entering(std::span<const int> candidates);

struct RatioResult {
  int leaving_slot = -1;          // -1: no eligible row, direction unbounded
  double step = 0.0;
};

/// Textbook minimum-ratio test over rows with direction component above
/// pivot_tol; ties resolved to the lowest row index. Basic values inside the
/// degeneracy band below zero are treated as zero so steps are never
/// negative.
RatioResult ratio_test(std::span<const double> b_bar,
                       std::span<const double> a_bar, double pivot_tol);

struct LongestStepOptions {
  bool filter = true;        // apply the reduced-cost quality filter
  double fraction = 0.99;    // keep candidates with cbar <= fraction * best
  int filter_threshold = 50; // only filter when more candidates than this
};

struct LongestStepChoice {
  int slot = -1;                 // entering nonbasic slot
  double step = 0.0;             // its ratio-test step
  int leaving_slot = -1;         // -1 together with unbounded == true
  bool unbounded = false;        // some candidate admits an unblocked ray
  std::vector<double> a_bar;     // transformed column of the chosen slot
};

/// Second entering rule: among the candidates except `exclude_slot`, pick
/// the column whose ratio-test step is largest (ties to the lowest slot).
/// Each scanned candidate costs one basis solve. If any scanned candidate
/// has no blocking row the whole problem is unbounded and that candidate is
/// returned immediately with `unbounded` set. Returns nullopt when nothing
/// remains to scan.
std::optional<LongestStepChoice> longest_step_entering(
    const StandardFormLP& lp, const BasisPartition& bp, const LUFactors& f,
    std::span<const double> b_bar, std::span<const double> reduced,
    std::span<const int> candidates, int exclude_slot, double pivot_tol,
    const LongestStepOptions& opts = {});

}  // namespace dpsimplex
