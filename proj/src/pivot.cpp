#include "dpsimplex/pivot.hpp"

#include <cmath>

namespace dpsimplex {

std::vector<double> reduced_costs(const StandardFormLP& lp,
                                  const BasisPartition& bp,
                                  const LUFactors& f) {
  std::vector<double> c_b(bp.num_basic());
  for (int i = 0; i < bp.num_basic(); ++i)
    c_b[i] = lp.cost()[bp.basic_at(i)];
  const std::vector<double> y = solve_basis_transpose(f, c_b);
  std::vector<double> out(bp.num_nonbasic());
  for (int s = 0; s < bp.num_nonbasic(); ++s) {
    const int id = bp.nonbasic_at(s);
    double dot = 0.0;
    for (const Entry& e : lp.col(id)) dot += e.value * y[e.row];
    out[s] = lp.cost()[id] - dot;
  }
  return out;
}

std::vector<int> candidate_slots(std::span<const double> reduced,
                                 double zero_tol) {
  std::vector<int> out;
  for (size_t s = 0; s < reduced.size(); ++s)
    if (reduced[s] < -zero_tol) out.push_back(static_cast<int>(s));
  return out;
}

std::optional<int> dantzig_entering(std::span<const double> reduced,
                                    std::span<const int> candidates) {
  if (candidates.empty()) return std::nullopt;
  int best = candidates[0];
  for (int s : candidates)
    if (reduced[s] < reduced[best]) best = s;  // ties keep the lower slot
  return best;
}

std::optional<int> bland_entering(std::span<const int> candidates) {
  if (candidates.empty()) return std::nullopt;
  return candidates[0];
}

RatioResult ratio_test(std::span<const double> b_bar,
                       std::span<const double> a_bar, double pivot_tol) {
  RatioResult r;
  r.step = kInf;
  r.leaving_slot = -1;
  for (size_t i = 0; i < a_bar.size(); ++i) {
    if (a_bar[i] <= pivot_tol) continue;
    const double num = b_bar[i] > 0.0 ? b_bar[i] : 0.0;
    const double ratio = num / a_bar[i];
    if (ratio < r.step) {
      r.step = ratio;
      r.leaving_slot = static_cast<int>(i);
    }
  }
  if (r.leaving_slot < 0) r.step = kInf;
  return r;
}

std::optional<LongestStepChoice> longest_step_entering(
    const StandardFormLP& lp, const BasisPartition& bp, const LUFactors& f,
    std::span<const double> b_bar, std::span<const double> reduced,
    std::span<const int> candidates, int exclude_slot, double pivot_tol,
    const LongestStepOptions& opts) {
  // Quality filter: with a large candidate set, only columns whose reduced
  // cost is within a fraction of the best are worth a basis solve each.
  double best_cbar = 0.0;
  for (int s : candidates) best_cbar = std::min(best_cbar, reduced[s]);
  const bool filtering =
      opts.filter && static_cast<int>(candidates.size()) > opts.filter_threshold;
  const double cutoff = opts.fraction * best_cbar;

  std::optional<LongestStepChoice> best;
  for (int s : candidates) {
    if (s == exclude_slot) continue;
    if (filtering && reduced[s] > cutoff) continue;
    std::vector<double> a_bar = solve_basis(f, lp.dense_col(bp.nonbasic_at(s)));
    RatioResult r = ratio_test(b_bar, a_bar, pivot_tol);
    if (r.leaving_slot < 0) {
      // Negative reduced cost with no blocking row: certified unbounded ray.
      LongestStepChoice c;
      c.slot = s;
      c.step = kInf;
      c.leaving_slot = -1;
      c.unbounded = true;
      c.a_bar = std::move(a_bar);
      return c;
    }
    if (!best || r.step > best->step) {
      LongestStepChoice c;
      c.slot = s;
      c.step = r.step;
      c.leaving_slot = r.leaving_slot;
      c.a_bar = std::move(a_bar);
      best = std::move(c);
    }
  }
  return best;
}

}  // namespace dpsimplex
