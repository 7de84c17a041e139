#include "dpsimplex/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace dpsimplex {

namespace {

bool finite(double v) { return std::isfinite(v); }

// Order-insensitive 64-bit mixer (SplitMix64 finalizer).
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

StandardFormLP::StandardFormLP(std::string name, int num_rows,
                               std::vector<std::vector<Entry>> columns,
                               std::vector<double> b, std::vector<double> c)
    : name_(std::move(name)),
      m_(num_rows),
      cols_(std::move(columns)),
      b_(std::move(b)),
      c_(std::move(c)) {
  if (m_ < 0) throw ValidationError("negative row count");
  if (b_.size() != static_cast<size_t>(m_))
    throw ValidationError("rhs length does not match row count");
  if (c_.size() != cols_.size())
    throw ValidationError("cost length does not match column count");
  for (double v : b_)
    if (!finite(v)) throw ValidationError("non-finite rhs entry");
  for (double v : c_)
    if (!finite(v)) throw ValidationError("non-finite cost entry");
  for (auto& col : cols_) {
    for (const Entry& e : col) {
      if (e.row < 0 || e.row >= m_)
        throw ValidationError("column entry row index out of range");
      if (!finite(e.value))
        throw ValidationError("non-finite matrix coefficient");
    }
    std::sort(col.begin(), col.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    // Merge duplicates, drop zeros.
    size_t out = 0;
    for (size_t i = 0; i < col.size();) {
      double sum = col[i].value;
      size_t j = i + 1;
      while (j < col.size() && col[j].row == col[i].row) sum += col[j++].value;
      if (sum != 0.0) col[out++] = Entry{col[i].row, sum};
      i = j;
    }
    col.resize(out);
  }
}

std::vector<double> StandardFormLP::dense_col(int j) const {
  std::vector<double> v(m_, 0.0);
  for (const Entry& e : cols_[j]) v[e.row] = e.value;
  return v;
}

double StandardFormLP::objective_value(std::span<const double> x) const {
  if (x.size() != cols_.size())
    throw ValidationError("point length does not match column count");
  double s = 0.0;
  for (size_t j = 0; j < cols_.size(); ++j) s += c_[j] * x[j];
  return s;
}

double infeasibility(const StandardFormLP& lp, std::span<const double> x) {
  if (x.size() != static_cast<size_t>(lp.num_cols()))
    throw ValidationError("point length does not match column count");
  std::vector<double> r(lp.rhs().begin(), lp.rhs().end());
  for (int j = 0; j < lp.num_cols(); ++j) {
    if (x[j] == 0.0) continue;
    for (const Entry& e : lp.col(j)) r[e.row] -= e.value * x[j];
  }
  double worst = 0.0;
  for (double v : r) worst = std::max(worst, std::abs(v));
  return worst;
}

BasisPartition BasisPartition::make(int num_cols, std::vector<int> basic) {
  BasisPartition bp;
  bp.is_basic_.assign(num_cols, 0);
  for (int id : basic) {
    if (id < 0 || id >= num_cols)
      throw ValidationError("basic column id out of range");
    if (bp.is_basic_[id]) throw ValidationError("repeated basic column id");
    bp.is_basic_[id] = 1;
  }
  bp.basic_ = std::move(basic);
  bp.nonbasic_.reserve(num_cols - bp.basic_.size());
  for (int j = 0; j < num_cols; ++j)
    if (!bp.is_basic_[j]) bp.nonbasic_.push_back(j);
  return bp;
}

int BasisPartition::basic_slot_of(int col) const {
  if (!is_basic(col)) return -1;
  for (size_t i = 0; i < basic_.size(); ++i)
    if (basic_[i] == col) return static_cast<int>(i);
  return -1;
}

int BasisPartition::nonbasic_slot_of(int col) const {
  if (is_basic(col)) return -1;
  auto it = std::lower_bound(nonbasic_.begin(), nonbasic_.end(), col);
  if (it == nonbasic_.end() || *it != col) return -1;
  return static_cast<int>(it - nonbasic_.begin());
}

void BasisPartition::swap(int entering, int basic_slot) {
  if (basic_slot < 0 || basic_slot >= num_basic())
    throw ValidationError("basic slot out of range");
  if (is_basic(entering))
    throw ValidationError("entering column is already basic");
  int leaving = basic_[basic_slot];
  basic_[basic_slot] = entering;
  is_basic_[entering] = 1;
  is_basic_[leaving] = 0;
  auto it = std::lower_bound(nonbasic_.begin(), nonbasic_.end(), entering);
  nonbasic_.erase(it);
  nonbasic_.insert(std::lower_bound(nonbasic_.begin(), nonbasic_.end(), leaving),
                   leaving);
}

std::uint64_t BasisPartition::signature() const {
  std::uint64_t h = 0;
  for (int id : basic_) h ^= mix64(static_cast<std::uint64_t>(id) + 1);
  return h;
}

ColumnSplit split_columns(const StandardFormLP& lp, const BasisPartition& bp) {
  ColumnSplit s;
  s.basic_cols.reserve(bp.num_basic());
  s.basic_cost.reserve(bp.num_basic());
  for (int id : bp.basic()) {
    s.basic_cols.push_back(lp.col(id));
    s.basic_cost.push_back(lp.cost()[id]);
  }
  s.nonbasic_cols.reserve(bp.num_nonbasic());
  s.nonbasic_cost.reserve(bp.num_nonbasic());
  for (int id : bp.nonbasic()) {
    s.nonbasic_cols.push_back(lp.col(id));
    s.nonbasic_cost.push_back(lp.cost()[id]);
  }
  return s;
}

std::vector<double> VariableMap::recover_point(
    std::span<const double> x_std) const {
  std::vector<double> out(variables.size());
  for (size_t j = 0; j < variables.size(); ++j) {
    double v = variables[j].offset;
    for (const Term& t : variables[j].terms) v += t.coef * x_std[t.index];
    out[j] = v;
  }
  return out;
}

double VariableMap::recover_objective(double std_objective) const {
  return objective_sign * std_objective + objective_offset;
}

RowBounds row_bounds(const GeneralRow& r) {
  if (!r.has_range) {
    switch (r.type) {
      case RowType::LessEqual:
        return {-kInf, r.rhs};
      case RowType::GreaterEqual:
        return {r.rhs, kInf};
      case RowType::Equal:
        return {r.rhs, r.rhs};
      case RowType::NonBinding:
        return {-kInf, kInf};
    }
  }
  const double R = r.range;
  switch (r.type) {
    case RowType::LessEqual:
      return {r.rhs - std::abs(R), r.rhs};
    case RowType::GreaterEqual:
      return {r.rhs, r.rhs + std::abs(R)};
    case RowType::Equal:
      return R >= 0 ? RowBounds{r.rhs, r.rhs + R}
                    : RowBounds{r.rhs + R, r.rhs};
    case RowType::NonBinding:
      return {-kInf, kInf};
  }
  return {-kInf, kInf};  // unreachable
}

Conversion to_standard_form(const GeneralLP& gen) {
  const double sign = gen.maximize ? -1.0 : 1.0;

  VariableMap map;
  map.objective_sign = sign;
  map.variables.resize(gen.columns.size());
  map.names.reserve(gen.columns.size());

  // Pass 1: plan one or two standard columns per original column.
  std::vector<std::vector<Entry>> cols;
  std::vector<double> cost;
  double cost_at_offsets = 0.0;
  // For finite-upper-bound columns: (std index, width) pending extra rows.
  struct PendingUpper {
    int index;
    double width;
  };
  std::vector<PendingUpper> uppers;

  auto add_col = [&](double c) {
    cols.emplace_back();
    cost.push_back(c);
    return static_cast<int>(cols.size()) - 1;
  };

  for (size_t j = 0; j < gen.columns.size(); ++j) {
    const GeneralColumn& col = gen.columns[j];
    map.names.push_back(col.name);
    const double l = col.bounds.lower, u = col.bounds.upper;
    if (std::isnan(l) || std::isnan(u))
      throw ValidationError("NaN bound on column " + col.name);
    if (l > u)
      throw InfeasibleModelError("column " + col.name +
                                 " has lower bound above upper bound");
    VariableMap::Recovery& rec = map.variables[j];
    const double cj = sign * col.cost;
    if (l == -kInf && u == kInf) {
      int p = add_col(cj);
      int q = add_col(-cj);
      rec.offset = 0.0;
      rec.terms = {{p, 1.0}, {q, -1.0}};
    } else if (l == -kInf) {
      // Only an upper bound: mirror so the shifted variable is nonnegative.
      int p = add_col(-cj);
      rec.offset = u;
      rec.terms = {{p, -1.0}};
      cost_at_offsets += col.cost * u;
    } else {
      int p = add_col(cj);
      rec.offset = l;
      rec.terms = {{p, 1.0}};
      cost_at_offsets += col.cost * l;
      if (u != kInf) uppers.push_back({p, u - l});
    }
  }
  map.objective_offset = cost_at_offsets + gen.objective_constant;

  // Pass 2: scatter original coefficients through the variable plans,
  // accumulating each row's activity at the bound offsets.
  std::vector<double> row_offset(gen.rows.size(), 0.0);
  // Row-wise staging: list of (std col, coef) per original row.
  std::vector<std::vector<Entry>> row_entries(gen.rows.size());
  for (size_t j = 0; j < gen.columns.size(); ++j) {
    const VariableMap::Recovery& rec = map.variables[j];
    for (const Entry& e : gen.columns[j].entries) {
      if (e.row < 0 || e.row >= gen.num_rows())
        throw ValidationError("entry row index out of range in column " +
                              gen.columns[j].name);
      if (!finite(e.value))
        throw ValidationError("non-finite coefficient in column " +
                              gen.columns[j].name);
      row_offset[e.row] += e.value * rec.offset;
      for (const VariableMap::Term& t : rec.terms)
        row_entries[e.row].push_back(Entry{t.index, e.value * t.coef});
    }
  }

  // Pass 3: materialize standard rows. Original rows first (in order), then
  // range-width rows, then column upper-bound rows.
  std::vector<double> b;
  struct PendingWidth {
    int slack_index;
    double width;
  };
  std::vector<PendingWidth> widths;

  auto add_row = [&](double rhs) {
    b.push_back(rhs);
    return static_cast<int>(b.size()) - 1;
  };
  auto put = [&](int row, int col, double v) {
    cols[col].push_back(Entry{row, v});
  };

  for (size_t r = 0; r < gen.rows.size(); ++r) {
    const GeneralRow& row = gen.rows[r];
    if (row.type == RowType::NonBinding) continue;
    RowBounds iv = row_bounds(row);
    const double lo = iv.lo == -kInf ? -kInf : iv.lo - row_offset[r];
    const double hi = iv.hi == kInf ? kInf : iv.hi - row_offset[r];
    int rid;
    double slack_sign = 0.0;
    if (lo == hi) {
      rid = add_row(lo);
    } else if (lo == -kInf) {
      rid = add_row(hi);
      slack_sign = 1.0;
    } else if (hi == kInf) {
      rid = add_row(lo);
      slack_sign = -1.0;
    } else {
      // Two-sided: activity + s = hi with 0 <= s <= hi - lo.
      rid = add_row(hi);
      int s = add_col(0.0);
      put(rid, s, 1.0);
      widths.push_back({s, hi - lo});
    }
    // Staged entries carry the standard column index in their `row` field.
    for (const Entry& e : row_entries[r]) put(rid, e.row, e.value);
    if (slack_sign != 0.0) {
      int s = add_col(0.0);
      put(rid, s, slack_sign);
    }
  }
  for (const PendingWidth& w : widths) {
    int rid = add_row(w.width);
    put(rid, w.slack_index, 1.0);
    int t = add_col(0.0);
    put(rid, t, 1.0);
  }
  for (const PendingUpper& u : uppers) {
    int rid = add_row(u.width);
    put(rid, u.index, 1.0);
    int s = add_col(0.0);
    put(rid, s, 1.0);
  }

  // Pull the count out first: arguments are evaluated in unspecified order,
  // so b.size() inside the call could see the vector already moved from.
  const int num_rows = static_cast<int>(b.size());
  StandardFormLP lp(gen.name, num_rows, std::move(cols), std::move(b),
                    std::move(cost));
  return Conversion{std::move(lp), std::move(map)};
}

}  // namespace dpsimplex
