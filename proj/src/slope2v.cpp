#include "dpsimplex/slope2v.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dpsimplex/model.hpp"

namespace dpsimplex {

TwoVarLP TwoVarLP::from_min_form(std::span<const double> col_a,
                                 std::span<const double> col_b,
                                 std::span<const double> rhs, double cbar_a,
                                 double cbar_b) {
  if (col_a.size() != rhs.size() || col_b.size() != rhs.size())
    throw ValidationError("subproblem column/rhs lengths differ");
  if (!(cbar_a < 0.0) || !(cbar_b < 0.0))
    throw ValidationError("subproblem requires negative reduced costs");
  double scale = 0.0;
  for (double v : rhs) scale = std::max(scale, std::abs(v));
  const double clamp = 1e-7 * (1.0 + scale);

  TwoVarLP lp;
  lp.c1 = -cbar_a;
  lp.c2 = -cbar_b;
  lp.rows.reserve(rhs.size() + 2);
  for (size_t i = 0; i < rhs.size(); ++i) {
    double b = rhs[i];
    if (b < 0.0) {
      if (b < -clamp)
        throw ValidationError("subproblem rhs has a negative component");
      b = 0.0;
    }
    lp.rows.push_back(TwoVarRow{col_a[i], col_b[i], b});
  }
  lp.rows.push_back(TwoVarRow{-1.0, 0.0, 0.0});
  lp.rows.push_back(TwoVarRow{0.0, -1.0, 0.0});
  return lp;
}

RowCase classify_row(const TwoVarRow& row) {
  if (row.a1 > 0.0) {
    if (row.a2 > 0.0) return RowCase::PosPos;
    if (row.a2 < 0.0) return RowCase::PosNeg;
    return RowCase::PosZero;
  }
  if (row.a1 < 0.0) {
    if (row.a2 > 0.0) return RowCase::NegPos;
    if (row.a2 < 0.0) return RowCase::NegNeg;
    return RowCase::NegZero;
  }
  if (row.a2 > 0.0) return RowCase::ZeroPos;
  if (row.a2 < 0.0) return RowCase::ZeroNeg;
  return RowCase::ZeroZero;
}

BigM compute_big_M(const TwoVarLP& lp) {
  BigM m;
  for (const TwoVarRow& r : lp.rows) {
    if (r.a2 != 0.0) m.max_ratio_12 = std::max(m.max_ratio_12, std::abs(r.a1 / r.a2));
    if (r.a1 != 0.0) m.max_ratio_21 = std::max(m.max_ratio_21, std::abs(r.a2 / r.a1));
  }
  if (!(lp.c1 > 0.0) || !(lp.c2 > 0.0))
    throw ValidationError("subproblem requires positive maximization costs");
  const double base =
      std::max({m.max_ratio_12, m.max_ratio_21, lp.c2 / lp.c1});
  m.value = base + 1.0;
  if (m.value <= base) m.value = 2.0 * base;  // +1 absorbed at this magnitude
  if (!std::isfinite(m.value))
    throw Error("slope separator overflow: coefficient range too wide");
  return m;
}

double alpha_key(const TwoVarRow& row, double big_m) {
  switch (classify_row(row)) {
    case RowCase::ZeroNeg:
      return -2.0 * big_m;
    case RowCase::PosNeg:
      return -big_m + row.a2 / row.a1;
    case RowCase::PosZero:
      return -big_m;
    case RowCase::PosPos:
      return row.a2 / row.a1;
    case RowCase::ZeroPos:
      return big_m;
    case RowCase::NegPos:
      return big_m - row.a1 / row.a2;
    case RowCase::NegZero:
      return 2.0 * big_m;
    case RowCase::ZeroZero:
    case RowCase::NegNeg:
      return 3.0 * big_m;
  }
  return 3.0 * big_m;  // unreachable
}

bool is_unbounded(double alpha_j, double alpha_k, const TwoVarRow& row_j,
                  const TwoVarRow& row_k, double big_m) {
  (void)alpha_j;
  (void)alpha_k;
  (void)big_m;
  const RowCase cj = classify_row(row_j);
  const RowCase ck = classify_row(row_k);
  const bool k_at_least_m =
      ck == RowCase::ZeroPos || ck == RowCase::NegPos ||
      ck == RowCase::NegZero || ck == RowCase::ZeroZero ||
      ck == RowCase::NegNeg;
  // Nothing on the right blocks growth along x1.
  if (cj == RowCase::ZeroNeg && k_at_least_m) return true;
  // Nothing above blocks growth along x2.
  if (ck == RowCase::NegZero &&
      (cj == RowCase::PosNeg || cj == RowCase::PosZero))
    return true;
  // Opposed slanted walls that leave an open cone between them.
  if (cj == RowCase::PosNeg && ck == RowCase::NegPos)
    return row_j.a2 / row_j.a1 <= row_k.a2 / row_k.a1;
  return false;
}

namespace {

struct Intersection {
  bool ok = false;
  double x1 = 0.0, x2 = 0.0;
};

Intersection intersect(const TwoVarRow& p, const TwoVarRow& q) {
  const double det = p.a1 * q.a2 - p.a2 * q.a1;
  const double scale =
      std::max({1.0, std::abs(p.a1 * q.a2), std::abs(p.a2 * q.a1)});
  if (std::abs(det) <= 1e-12 * scale) return {};
  Intersection r;
  r.ok = true;
  r.x1 = (p.rhs * q.a2 - p.a2 * q.rhs) / det;
  r.x2 = (p.a1 * q.rhs - p.rhs * q.a1) / det;
  return r;
}

}  // namespace

SlopeResult slope_solve(const TwoVarLP& lp, SlopeStats* stats) {
  SlopeStats local;
  SlopeStats& st = stats ? *stats : local;

  const int n = static_cast<int>(lp.rows.size());
  if (n < 2) throw ValidationError("subproblem must include the sign rows");
  double rhs_scale = 0.0;
  for (const TwoVarRow& r : lp.rows) {
    if (r.rhs < 0.0)
      throw ValidationError("subproblem rhs has a negative component");
    rhs_scale = std::max(rhs_scale, std::abs(r.rhs));
  }
  const double feas_tol = 1e-9 * (1.0 + rhs_scale);

  SlopeResult res;
  const BigM big = compute_big_M(lp);
  res.big_m = big.value;
  res.alpha.resize(n);
  for (int i = 0; i < n; ++i) res.alpha[i] = alpha_key(lp.rows[i], big.value);
  st.alpha_evaluations += n;

  // Angular order: ascending key, ties by ascending row index.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    ++st.sort_comparisons;
    if (res.alpha[a] != res.alpha[b]) return res.alpha[a] < res.alpha[b];
    return a < b;
  });

  // Bracket the objective slope: k = first key >= c2/c1, j just before it.
  // The sign rows guarantee keys -2M and 2M exist, so the bracket is always
  // interior.
  const double target = lp.c2 / lp.c1;
  int kpos = 0;
  while (kpos < n && res.alpha[order[kpos]] < target) ++kpos;
  const int jpos0 = kpos - 1;
  if (kpos <= 0 || kpos >= n)
    throw Error("internal: slope bracket fell off the row ordering");
  res.initial_row_j = order[jpos0];
  res.initial_row_k = order[kpos];

  if (is_unbounded(res.alpha[order[jpos0]], res.alpha[order[kpos]],
                   lp.rows[order[jpos0]], lp.rows[order[kpos]], big.value)) {
    res.status = SlopeStatus::Unbounded;
    return res;
  }

  int row_j = order[jpos0], row_k = order[kpos];
  Intersection x = intersect(lp.rows[row_j], lp.rows[row_k]);
  ++st.intersections;
  if (!x.ok)
    throw Error("internal: bracketing rows are parallel yet bounded");

  // Sweep outward from the bracket, testing each row once against the
  // current point. The invariant maintained is that the point is the exact
  // optimum of the rows visited so far: when a newly scanned row cuts the
  // point off, the optimum of the enlarged set lies on that row's line, so
  // the point is re-optimized along that line against every visited row.
  // The blocking row of that one-dimensional step becomes the new partner,
  // and all visited rows stay satisfied, so a single pass suffices.
  std::vector<int> visited;
  visited.reserve(n);
  visited.push_back(row_j);
  visited.push_back(row_k);

  auto violated = [&](int row) {
    const TwoVarRow& r = lp.rows[row];
    return r.a1 * x.x1 + r.a2 * x.x2 > r.rhs + feas_tol;
  };

  auto resolve = [&](int rid) {
    const TwoVarRow& rr = lp.rows[rid];
    const double nn = rr.a1 * rr.a1 + rr.a2 * rr.a2;
    // A vacuous row (both coefficients zero) can never be violated.
    if (nn == 0.0) throw Error("internal: vacuous row reported as violated");
    // Foot of the perpendicular from the origin onto the row's line, and a
    // direction along the line oriented toward non-decreasing objective.
    const double p0x = rr.a1 * rr.rhs / nn, p0y = rr.a2 * rr.rhs / nn;
    double ux = -rr.a2, uy = rr.a1;
    double g = lp.c1 * ux + lp.c2 * uy;
    if (g < 0.0) {
      ux = -ux;
      uy = -uy;
      g = -g;
    }
    double hi = kInf, lo = -kInf;
    int bhi = -1, blo = -1;
    const bool rid_low = res.alpha[rid] < target;
    for (int vid : visited) {
      const TwoVarRow& q = lp.rows[vid];
      const double d = q.a1 * ux + q.a2 * uy;
      const double dscale =
          std::max({1.0, std::abs(q.a1 * ux), std::abs(q.a2 * uy)});
      if (std::abs(d) <= 1e-12 * dscale) {
        // Parallel to the line; a parallel row that excluded the whole line
        // would have been violated at an earlier point too, so it is safe to
        // skip.
        ++st.skipped_parallel;
        continue;
      }
      const double s = (q.rhs - (q.a1 * p0x + q.a2 * p0y)) / d;
      if (d > 0.0) {
        const bool opposite = (res.alpha[vid] < target) != rid_low;
        if (s < hi || (s == hi && opposite && bhi >= 0 &&
                       (res.alpha[bhi] < target) == rid_low)) {
          hi = s;
          bhi = vid;
        }
      } else {
        const bool opposite = (res.alpha[vid] < target) != rid_low;
        if (s > lo || (s == lo && opposite && blo >= 0 &&
                       (res.alpha[blo] < target) == rid_low)) {
          lo = s;
          blo = vid;
        }
      }
    }
    // An improving direction is always blocked: the initial bracket pair is
    // in the visited set and its wedge is bounded toward the objective. Only
    // a level line (g == 0) can be open on the high side.
    const bool use_hi = std::isfinite(hi) || !std::isfinite(lo);
    const double s = use_hi ? hi : lo;
    const int partner = use_hi ? bhi : blo;
    if (partner < 0 || !std::isfinite(s))
      throw Error("internal: slope line resolve found no blocking row");
    x.x1 = p0x + s * ux;
    x.x2 = p0y + s * uy;
    ++st.intersections;
    if (rid_low) {
      row_j = rid;
      row_k = partner;
    } else {
      row_k = rid;
      row_j = partner;
    }
  };

  // Outward scan in the listed alternating order; each step advances one
  // position per side where possible and tests the row there.
  int jscan = jpos0, kscan = kpos;
  const int last = n - 1;
  while (jscan > 0 || kscan < last) {
    ++st.sweep_passes;
    if (jscan > 0) {
      --jscan;
      if (violated(order[jscan])) resolve(order[jscan]);
      visited.push_back(order[jscan]);
    }
    if (kscan < last) {
      ++kscan;
      if (violated(order[kscan])) resolve(order[kscan]);
      visited.push_back(order[kscan]);
    }
  }

  res.status = SlopeStatus::Optimal;
  res.x1 = x.x1;
  res.x2 = x.x2;
  res.objective = lp.c1 * x.x1 + lp.c2 * x.x2;
  res.basis_row1 = row_j;
  res.basis_row2 = row_k;
  return res;
}

}  // namespace dpsimplex
