#include "dpsimplex/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace dpsimplex {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::IterationLimit: return "iteration_limit";
    case SolveStatus::Breakdown: return "breakdown";
  }
  return "unknown";
}

const char* to_string(Rule r) {
  return r == Rule::Dantzig ? "dantzig" : "double";
}

namespace {

// Basic values with magnitude below this snap to exact zero, both so
// degeneracy is detectable by equality and so later ratio tests are clean.
constexpr double kSnap = 1e-11;

double snap(double v) { return std::abs(v) < kSnap ? 0.0 : v; }

enum class PhaseWhat { Optimal, Unbounded, Limit, Breakdown };

struct PhaseEnd {
  PhaseWhat what = PhaseWhat::Optimal;
  std::string message;
};

struct StepOutcome {
  bool retry = false;      // numerical inconsistency; redo from fresh values
  bool unbounded = false;
  std::string message;
  StepKind kind = StepKind::Single;
  int n_entering = 0;
  int entering[2] = {-1, -1};
  double entered_value[2] = {0.0, 0.0};
  int n_leaving = 0;
  int leaving[2] = {-1, -1};
  double f1 = std::numeric_limits<double>::quiet_NaN();
  double f2 = std::numeric_limits<double>::quiet_NaN();
  double f3 = std::numeric_limits<double>::quiet_NaN();
};

class Simplex {
 public:
  Simplex(const StandardFormLP& lp, const SolveOptions& opts)
      : in_(lp), opts_(opts), tol_(opts.tol) {}

  SolveResult run();
  Phase1Result phase1_only();

 private:
  void setup();
  void refactor();
  std::vector<double> reduced_with(const std::vector<double>& cost) const;
  std::vector<int> make_candidates(std::span<const double> reduced) const;
  double phase_objective(const std::vector<double>& cost) const;
  bool degenerate() const;
  void apply_perturbation();
  PhaseEnd run_phase();
  StepOutcome take_step(std::span<const double> reduced,
                        std::span<const int> cands,
                        const std::vector<double>& cost);
  StepOutcome single_pivot(int slot, std::span<const double> reduced,
                           bool bland);
  StepOutcome apply_single(int slot, const std::vector<double>& a_bar,
                           const RatioResult& ratio, double f1, bool bland);
  bool finish_phase1(PhaseEnd* fail);
  void pivot_out_artificials();
  void finalize_optimal(SolveResult& out);
  double feas_band() const { return tol_.feas_tol * bscale_; }

  const StandardFormLP& in_;
  SolveOptions opts_;
  Tolerances tol_;

  StandardFormLP ext_;       // input plus artificial columns
  int n_orig_ = 0;
  std::vector<int> artificial_ids_;
  std::vector<int> retained_artificials_;
  std::vector<double> cost1_, cost2_;  // artificial cost / real cost
  double aux_objective_ = 0.0;

  BasisPartition bp_;
  std::vector<double> xb_;
  LUFactors f_;
  DenseMatrix basis_buf_;

  int phase_ = 2;
  bool bland_mode_ = false;
  long iter_ = 0, p1_iters_ = 0, doubles_ = 0, blands_ = 0, stalls_ = 0;
  long limit_ = 0;
  int retries_ = 0;
  double bscale_ = 1.0, delta_ = 0.0;
  std::vector<IterationRecord> log_;
};

void Simplex::setup() {
  n_orig_ = in_.num_cols();
  const int m = in_.num_rows();
  const std::vector<double>& b = in_.rhs();
  double bmax = 0.0;
  for (double v : b) bmax = std::max(bmax, std::abs(v));
  bscale_ = 1.0 + bmax;
  delta_ = tol_.perturb_rel * bscale_;
  limit_ = opts_.max_iterations > 0 ? opts_.max_iterations
                                    : 1000L * (m + n_orig_);

  // Crash cover: rows served by a singleton column with a feasible value.
  // Scan from the highest column index down so slack/surplus columns, which
  // are appended after the structural ones, win ties over structural
  // singletons; every run then starts from the canonical origin basis.
  std::vector<int> cover(m, -1);
  std::vector<double> value(m, 0.0);
  for (int j = n_orig_ - 1; j >= 0; --j) {
    std::span<const Entry> col = in_.col(j);
    if (col.size() != 1) continue;
    const int r = col[0].row;
    const double v = col[0].value;
    if (cover[r] >= 0 || v == 0.0) continue;
    const double x = b[r] / v;
    if (x >= 0.0) {
      cover[r] = j;
      value[r] = x;
    }
  }

  std::vector<std::vector<Entry>> cols;
  cols.reserve(n_orig_);
  for (int j = 0; j < n_orig_; ++j) {
    std::span<const Entry> c = in_.col(j);
    cols.emplace_back(c.begin(), c.end());
  }
  std::vector<double> cost2(in_.cost().begin(), in_.cost().end());
  std::vector<int> basic(m, -1);
  for (int r = 0; r < m; ++r) {
    if (cover[r] >= 0) {
      basic[r] = cover[r];
      continue;
    }
    const double sign = b[r] >= 0.0 ? 1.0 : -1.0;
    const int id = static_cast<int>(cols.size());
    cols.push_back({Entry{r, sign}});
    cost2.push_back(0.0);
    artificial_ids_.push_back(id);
    basic[r] = id;
    value[r] = std::abs(b[r]);
  }
  const int n_ext = static_cast<int>(cols.size());
  cost1_.assign(n_ext, 0.0);
  for (int id : artificial_ids_) cost1_[id] = 1.0;
  cost2_ = cost2;
  ext_ = StandardFormLP(in_.name(), m, std::move(cols),
                        std::vector<double>(b.begin(), b.end()),
                        std::move(cost2));
  bp_ = BasisPartition::make(n_ext, std::move(basic));
  xb_.resize(m);
  for (int r = 0; r < m; ++r) xb_[r] = snap(value[r]);
}

void Simplex::refactor() {
  const int m = ext_.num_rows();
  if (basis_buf_.rows() != m) basis_buf_ = DenseMatrix(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) basis_buf_.at(i, j) = 0.0;
  for (int s = 0; s < m; ++s)
    for (const Entry& e : ext_.col(bp_.basic_at(s)))
      basis_buf_.at(e.row, s) = e.value;
  f_ = lu_factor(basis_buf_, LUOptions{tol_.singular_tol, tol_.lu_eps});
}

std::vector<double> Simplex::reduced_with(
    const std::vector<double>& cost) const {
  const int m = ext_.num_rows();
  std::vector<double> cb(m);
  for (int s = 0; s < m; ++s) cb[s] = cost[bp_.basic_at(s)];
  const std::vector<double> y = solve_basis_transpose(f_, cb);
  std::vector<double> out(bp_.num_nonbasic());
  for (int s = 0; s < bp_.num_nonbasic(); ++s) {
    const int id = bp_.nonbasic_at(s);
    double dot = 0.0;
    for (const Entry& e : ext_.col(id)) dot += e.value * y[e.row];
    out[s] = cost[id] - dot;
  }
  return out;
}

std::vector<int> Simplex::make_candidates(
    std::span<const double> reduced) const {
  std::vector<int> out;
  for (int s = 0; s < bp_.num_nonbasic(); ++s) {
    if (phase_ == 2 && bp_.nonbasic_at(s) >= n_orig_)
      continue;  // artificial columns may not re-enter the real problem
    if (reduced[s] < -tol_.zero_tol) out.push_back(s);
  }
  return out;
}

double Simplex::phase_objective(const std::vector<double>& cost) const {
  double s = 0.0;
  for (int i = 0; i < bp_.num_basic(); ++i)
    s += cost[bp_.basic_at(i)] * xb_[i];
  return s;
}

bool Simplex::degenerate() const {
  for (double v : xb_)
    if (v == 0.0) return true;
  return false;
}

void Simplex::apply_perturbation() {
  if (!opts_.perturb_degenerate) return;
  for (double& v : xb_)
    if (v == 0.0) v = delta_;
}

StepOutcome Simplex::apply_single(int slot, const std::vector<double>& a_bar,
                                  const RatioResult& ratio, double f1,
                                  bool bland) {
  StepOutcome so;
  so.kind = bland ? StepKind::Bland : StepKind::Single;
  so.f1 = f1;
  const int id = bp_.nonbasic_at(slot);
  int leave_slot = ratio.leaving_slot;
  const double theta = ratio.step;
  if (bland) {
    // Among rows tied at the minimum ratio, prefer the smallest basic
    // column id (the classic anti-cycling leaving rule).
    int best_id = bp_.basic_at(leave_slot);
    for (size_t i = 0; i < a_bar.size(); ++i) {
      if (a_bar[i] <= tol_.pivot_tol) continue;
      const double num = xb_[i] > 0.0 ? xb_[i] : 0.0;
      if (num / a_bar[i] == theta) {
        const int cand_id = bp_.basic_at(static_cast<int>(i));
        if (cand_id < best_id) {
          best_id = cand_id;
          leave_slot = static_cast<int>(i);
        }
      }
    }
  }
  std::vector<double> cand(xb_);
  for (size_t i = 0; i < cand.size(); ++i)
    cand[i] = snap(cand[i] - a_bar[i] * theta);
  for (double v : cand)
    if (v < -feas_band()) {
      so.retry = true;
      so.message = "basic value went negative in a single pivot";
      return so;
    }
  cand[leave_slot] = snap(theta);
  so.n_entering = 1;
  so.entering[0] = id;
  so.entered_value[0] = cand[leave_slot];
  so.n_leaving = 1;
  so.leaving[0] = bp_.basic_at(leave_slot);
  bp_.swap(id, leave_slot);
  xb_ = std::move(cand);
  return so;
}

StepOutcome Simplex::single_pivot(int slot, std::span<const double> reduced,
                                  bool bland) {
  const int id = bp_.nonbasic_at(slot);
  const std::vector<double> a_bar = solve_basis(f_, ext_.dense_col(id));
  const RatioResult ratio = ratio_test(xb_, a_bar, tol_.pivot_tol);
  if (ratio.leaving_slot < 0) {
    StepOutcome so;
    so.unbounded = true;
    so.message = "column " + std::to_string(id) + " has an unblocked ray";
    return so;
  }
  return apply_single(slot, a_bar, ratio, reduced[slot] * ratio.step, bland);
}

StepOutcome Simplex::take_step(std::span<const double> reduced,
                               std::span<const int> cands,
                               const std::vector<double>& cost) {
  (void)cost;
  if (bland_mode_) return single_pivot(cands[0], reduced, true);

  const int j1 = *dantzig_entering(reduced, cands);
  if (opts_.rule == Rule::Dantzig || cands.size() == 1)
    return single_pivot(j1, reduced, false);

  const int id1 = bp_.nonbasic_at(j1);
  const std::vector<double> a1 = solve_basis(f_, ext_.dense_col(id1));
  const RatioResult r1 = ratio_test(xb_, a1, tol_.pivot_tol);
  if (r1.leaving_slot < 0) {
    StepOutcome so;
    so.unbounded = true;
    so.message = "column " + std::to_string(id1) + " has an unblocked ray";
    return so;
  }
  const double f1 = reduced[j1] * r1.step;

  std::optional<LongestStepChoice> ls = longest_step_entering(
      ext_, bp_, f_, xb_, reduced, cands, j1, tol_.pivot_tol, opts_.longest);
  if (!ls) return apply_single(j1, a1, r1, f1, false);
  if (ls->unbounded) {
    StepOutcome so;
    so.unbounded = true;
    so.message = "column " + std::to_string(bp_.nonbasic_at(ls->slot)) +
                 " has an unblocked ray";
    return so;
  }
  const int j2 = ls->slot;
  const int id2 = bp_.nonbasic_at(j2);
  const double f2 = reduced[j2] * ls->step;

  // Planar subproblem over both candidates; the longest-step column is the
  // first variable so that slope ties between the objective and a
  // constraint resolve toward the larger combined step.
  TwoVarLP plane = TwoVarLP::from_min_form(ls->a_bar, a1, xb_, reduced[j2],
                                           reduced[j1]);
  const SlopeResult sres = slope_solve(plane);
  StepOutcome so;
  so.f1 = f1;
  so.f2 = f2;
  if (sres.status == SlopeStatus::Unbounded) {
    so.unbounded = true;
    so.message = "columns " + std::to_string(id2) + "," +
                 std::to_string(id1) + " admit an unblocked planar ray";
    return so;
  }
  so.f3 = -sres.objective;

  const int m = ext_.num_rows();
  double v1 = sres.x1, v2 = sres.x2;  // values entering for id2 and id1
  if (v1 < 0.0 || v2 < 0.0) {
    if (v1 < -feas_band() || v2 < -feas_band()) {
      so.retry = true;
      so.message = "planar vertex has a negative coordinate";
      return so;
    }
    v1 = std::max(v1, 0.0);
    v2 = std::max(v2, 0.0);
  }
  v1 = snap(v1);
  v2 = snap(v2);
  const bool pinned1 = sres.basis_row1 == m || sres.basis_row2 == m;
  const bool pinned2 = sres.basis_row1 == m + 1 || sres.basis_row2 == m + 1;
  int structural[2] = {-1, -1};
  int n_struct = 0;
  if (sres.basis_row1 < m) structural[n_struct++] = sres.basis_row1;
  if (sres.basis_row2 < m) structural[n_struct++] = sres.basis_row2;

  if (pinned1 && pinned2) {
    so.kind = StepKind::Stall;  // planar optimum at the origin
    return so;
  }
  if (n_struct == 1) {
    // One column is pinned at zero; the other enters alone against its
    // binding row.
    const int r = structural[0];
    const bool enter_first = pinned2;  // x2 pinned -> id2 enters
    const double value = enter_first ? v1 : v2;
    const double pinned_value = enter_first ? v2 : v1;
    if (std::abs(pinned_value) > feas_band()) {
      so.retry = true;
      so.message = "pinned planar coordinate is not at zero";
      return so;
    }
    const std::vector<double>& a = enter_first ? ls->a_bar : a1;
    const int id = enter_first ? id2 : id1;
    std::vector<double> cand(xb_);
    for (size_t i = 0; i < cand.size(); ++i)
      cand[i] = snap(cand[i] - a[i] * value);
    for (double v : cand)
      if (v < -feas_band()) {
        so.retry = true;
        so.message = "basic value went negative in a pinned planar step";
        return so;
      }
    cand[r] = snap(value);
    so.kind = StepKind::DoublePinned;
    so.n_entering = 1;
    so.entering[0] = id;
    so.entered_value[0] = cand[r];
    so.n_leaving = 1;
    so.leaving[0] = bp_.basic_at(r);
    bp_.swap(id, r);
    xb_ = std::move(cand);
    return so;
  }

  // True double pivot: both planar coordinates positive, two structural
  // rows binding.
  const int ra = structural[0], rb = structural[1];
  std::vector<double> cand(xb_);
  for (size_t i = 0; i < cand.size(); ++i)
    cand[i] = snap(cand[i] - ls->a_bar[i] * v1 - a1[i] * v2);
  for (double v : cand)
    if (v < -feas_band()) {
      so.retry = true;
      so.message = "basic value went negative in a double pivot";
      return so;
    }
  // The binding rows' residual values must vanish; they are replaced by the
  // entering columns.
  const double loose = 1e3 * feas_band();
  if (std::abs(cand[ra]) > loose || std::abs(cand[rb]) > loose) {
    so.retry = true;
    so.message = "binding rows not annihilated in a double pivot";
    return so;
  }
  cand[ra] = snap(v1);
  cand[rb] = snap(v2);
  so.kind = StepKind::Double;
  so.n_entering = 2;
  so.entering[0] = id2;
  so.entered_value[0] = cand[ra];
  so.entering[1] = id1;
  so.entered_value[1] = cand[rb];
  so.n_leaving = 2;
  so.leaving[0] = bp_.basic_at(ra);
  so.leaving[1] = bp_.basic_at(rb);
  bp_.swap(id2, ra);
  bp_.swap(id1, rb);
  xb_ = std::move(cand);
  return so;
}

PhaseEnd Simplex::run_phase() {
  const std::vector<double>& cost = phase_ == 1 ? cost1_ : cost2_;
  retries_ = 0;
  while (true) {
    if (iter_ >= limit_) return {PhaseWhat::Limit, "iteration limit reached"};
    refactor();
    const std::vector<double> reduced = reduced_with(cost);
    const std::vector<int> cands = make_candidates(reduced);
    if (cands.empty()) return {PhaseWhat::Optimal, ""};

    const double obj_before = phase_objective(cost);
    const bool degen_before = degenerate();
    StepOutcome so = take_step(reduced, cands, cost);
    if (so.retry) {
      if (++retries_ > 3) return {PhaseWhat::Breakdown, so.message};
      // Rebuild the basic values from scratch and re-attempt the step.
      std::vector<double> fresh = solve_basis(f_, ext_.rhs());
      for (double& v : fresh) v = snap(v);
      xb_ = std::move(fresh);
      continue;
    }
    retries_ = 0;
    if (so.unbounded) return {PhaseWhat::Unbounded, so.message};

    ++iter_;
    if (so.kind == StepKind::Stall) ++stalls_;
    if (so.kind == StepKind::Bland) ++blands_;
    if (so.kind == StepKind::Double) ++doubles_;
    const double obj_after = phase_objective(cost);
    const bool degen_after = degenerate();
    const double improve = obj_before - obj_after;
    const double improve_tol = tol_.improve_rel * (1.0 + std::abs(obj_before));

    if (opts_.record_iterations) {
      IterationRecord rec;
      rec.index = iter_;
      rec.phase = phase_;
      rec.kind = so.kind;
      rec.n_entering = so.n_entering;
      rec.entering[0] = so.entering[0];
      rec.entering[1] = so.entering[1];
      rec.entered_value[0] = so.entered_value[0];
      rec.entered_value[1] = so.entered_value[1];
      rec.n_leaving = so.n_leaving;
      rec.leaving[0] = so.leaving[0];
      rec.leaving[1] = so.leaving[1];
      rec.f1 = so.f1;
      rec.f2 = so.f2;
      rec.f3 = so.f3;
      rec.objective = obj_after;
      rec.degenerate_before = degen_before;
      rec.degenerate_after = degen_after;
      rec.bland_mode = bland_mode_;
      rec.basis_signature = bp_.signature();
      if (opts_.record_basis) rec.basis = bp_.basic();
      log_.push_back(std::move(rec));
    }

    if (opts_.bland_guard) {
      if (bland_mode_) {
        if (improve > improve_tol) bland_mode_ = false;
      } else if (improve <= improve_tol && degen_before && degen_after) {
        bland_mode_ = true;
      }
    }
    apply_perturbation();
  }
}

bool Simplex::finish_phase1(PhaseEnd* fail) {
  // Judge feasibility on freshly recomputed basic values so the
  // anti-degeneracy perturbations cannot masquerade as artificial activity.
  refactor();
  std::vector<double> fresh = solve_basis(f_, ext_.rhs());
  for (double& v : fresh) v = snap(v);
  xb_ = fresh;
  aux_objective_ = 0.0;
  for (int s = 0; s < bp_.num_basic(); ++s)
    if (bp_.basic_at(s) >= n_orig_)
      aux_objective_ += std::max(xb_[s], 0.0);
  if (aux_objective_ > feas_band()) {
    if (fail)
      *fail = {PhaseWhat::Breakdown,
               "artificial columns retain value " +
                   std::to_string(aux_objective_)};
    return false;
  }
  pivot_out_artificials();
  return true;
}

void Simplex::pivot_out_artificials() {
  const int m = ext_.num_rows();
  for (int s = 0; s < m; ++s) {
    const int id = bp_.basic_at(s);
    if (id < n_orig_) continue;
    // Try to exchange the basic artificial (value ~0) for any original
    // column with a usable pivot element in this row.
    std::vector<double> e(m, 0.0);
    e[s] = 1.0;
    const std::vector<double> w = solve_basis_transpose(f_, e);
    int found = -1;
    for (int ns = 0; ns < bp_.num_nonbasic(); ++ns) {
      const int cand = bp_.nonbasic_at(ns);
      if (cand >= n_orig_) continue;
      double elem = 0.0;
      for (const Entry& en : ext_.col(cand)) elem += en.value * w[en.row];
      if (std::abs(elem) > 1e-7) {
        found = cand;
        break;
      }
    }
    if (found >= 0) {
      bp_.swap(found, s);
      xb_[s] = 0.0;
      refactor();
    } else {
      // The row is redundant: the artificial stays basic at zero and is
      // barred from ever entering with weight.
      retained_artificials_.push_back(id);
    }
  }
}

void Simplex::finalize_optimal(SolveResult& out) {
  refactor();
  std::vector<double> fresh = solve_basis(f_, ext_.rhs());
  for (double& v : fresh) v = snap(v);

  auto residual = [&](const std::vector<double>& v) {
    std::vector<double> r(ext_.rhs().begin(), ext_.rhs().end());
    for (int s = 0; s < bp_.num_basic(); ++s)
      for (const Entry& e : ext_.col(bp_.basic_at(s)))
        r[e.row] -= e.value * v[s];
    double worst = 0.0;
    for (double x : r) worst = std::max(worst, std::abs(x));
    return worst;
  };
  // The carried values may include anti-degeneracy perturbations; the fresh
  // recompute removes them but can be worse near a barely regular basis.
  // Keep whichever satisfies the basis system better.
  const std::vector<double>& best =
      residual(fresh) <= residual(xb_) ? fresh : xb_;

  std::vector<double> x(n_orig_, 0.0);
  bool artificial_active = false;
  for (int s = 0; s < bp_.num_basic(); ++s) {
    double v = best[s];
    // Clamp any negativity; the residual metric reports the damage honestly.
    if (v < 0.0) v = 0.0;
    const int id = bp_.basic_at(s);
    if (id < n_orig_)
      x[id] = v;
    else if (v > feas_band())
      artificial_active = true;
  }
  out.x = std::move(x);
  out.objective = in_.objective_value(out.x);
  out.infeasibility = infeasibility(in_, out.x);
  out.final_x_basic = best;
  if (artificial_active) {
    out.status = SolveStatus::Breakdown;
    out.message = "a redundant-row artificial regained weight at the optimum";
  }
}

SolveResult Simplex::run() {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult out;
  setup();

  bool feasible = true;
  PhaseEnd p1fail;
  if (!artificial_ids_.empty()) {
    phase_ = 1;
    bland_mode_ = false;
    apply_perturbation();
    PhaseEnd e = run_phase();
    p1_iters_ = iter_;
    if (e.what != PhaseWhat::Optimal) {
      // The artificial objective is bounded below by zero, so an unbounded
      // verdict here can only be numerical.
      out.status = e.what == PhaseWhat::Limit ? SolveStatus::IterationLimit
                                              : SolveStatus::Breakdown;
      out.message = e.message;
      feasible = false;
    } else if (!finish_phase1(&p1fail)) {
      out.status = SolveStatus::Infeasible;
      out.message = p1fail.message;
      feasible = false;
    }
  }

  if (feasible) {
    phase_ = 2;
    bland_mode_ = false;
    apply_perturbation();
    PhaseEnd e = run_phase();
    switch (e.what) {
      case PhaseWhat::Optimal:
        out.status = SolveStatus::Optimal;
        finalize_optimal(out);
        break;
      case PhaseWhat::Unbounded:
        out.status = SolveStatus::Unbounded;
        out.message = e.message;
        break;
      case PhaseWhat::Limit:
        out.status = SolveStatus::IterationLimit;
        out.message = e.message;
        break;
      case PhaseWhat::Breakdown:
        out.status = SolveStatus::Breakdown;
        out.message = e.message;
        break;
    }
  }

  out.iterations = iter_;
  out.phase1_iterations = p1_iters_;
  out.double_pivots = doubles_;
  out.bland_pivots = blands_;
  out.stalled_steps = stalls_;
  out.log = std::move(log_);
  out.final_basis = bp_;
  if (out.final_x_basic.empty()) out.final_x_basic = xb_;
  const auto t1 = std::chrono::steady_clock::now();
  out.time_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
          t1 - t0)
          .count();
  return out;
}

Phase1Result Simplex::phase1_only() {
  setup();
  Phase1Result res;
  res.num_original = n_orig_;
  res.iterations = 0;
  if (!artificial_ids_.empty()) {
    phase_ = 1;
    apply_perturbation();
    PhaseEnd e = run_phase();
    res.iterations = iter_;
    if (e.what != PhaseWhat::Optimal) {
      res.feasible = false;
      res.extended = ext_;
      res.artificial_ids = artificial_ids_;
      res.basis = bp_;
      res.x_basic = xb_;
      return res;
    }
    res.feasible = finish_phase1(nullptr);
  } else {
    res.feasible = true;
  }
  res.extended = ext_;
  res.artificial_ids = artificial_ids_;
  res.retained_artificials = retained_artificials_;
  res.basis = bp_;
  res.x_basic = xb_;
  res.artificial_objective = aux_objective_;
  return res;
}

}  // namespace

SolveResult solve(const StandardFormLP& lp, const SolveOptions& opts) {
  Simplex s(lp, opts);
  return s.run();
}

Phase1Result phase1(const StandardFormLP& lp, const SolveOptions& opts) {
  Simplex s(lp, opts);
  return s.phase1_only();
}

AssembledPlane assemble_plane(const StandardFormLP& lp, const LUFactors& f,
                              std::span<const double> x_basic, int col_a,
                              int col_b, double cbar_a, double cbar_b) {
  AssembledPlane out;
  out.a_bar_a = solve_basis(f, lp.dense_col(col_a));
  out.a_bar_b = solve_basis(f, lp.dense_col(col_b));
  out.lp = TwoVarLP::from_min_form(out.a_bar_a, out.a_bar_b, x_basic, cbar_a,
                                   cbar_b);
  return out;
}

}  // namespace dpsimplex
