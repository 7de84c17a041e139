#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpsimplex {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A model fails structural validation (bad dimensions, NaN coefficients,
/// out-of-range indices, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// A model is provably infeasible before any solve starts (e.g. a variable
/// with lower bound above its upper bound).
struct InfeasibleModelError : Error {
  using Error::Error;
};

/// One stored coefficient of a sparse column.
struct Entry {
  int row = 0;
  double value = 0.0;
};

/// Equality-constrained LP in computational form:
///
///   minimize c^T x   subject to   A x = b,  x >= 0
///
/// with A stored column-wise. Column entries are sorted by row index,
/// duplicates merged and exact zeros dropped, so iteration over a column is
/// deterministic and canonical.
class StandardFormLP {
 public:
  StandardFormLP() = default;

  /// Builds and validates. `columns[j]` holds the sparse entries of column j
  /// in any order; they are canonicalized here. Throws ValidationError on
  /// dimension mismatch, non-finite data or out-of-range row indices.
  StandardFormLP(std::string name, int num_rows,
                 std::vector<std::vector<Entry>> columns,
                 std::vector<double> b, std::vector<double> c);

  int num_rows() const { return m_; }
  int num_cols() const { return static_cast<int>(cols_.size()); }

  std::span<const Entry> col(int j) const { return cols_[j]; }
  const std::vector<double>& rhs() const { return b_; }
  const std::vector<double>& cost() const { return c_; }
  const std::string& name() const { return name_; }

  /// Dense copy of column j (length num_rows()).
  std::vector<double> dense_col(int j) const;

  /// c^T x for a full-length point.
  double objective_value(std::span<const double> x) const;

 private:
  std::string name_;
  int m_ = 0;
  std::vector<std::vector<Entry>> cols_;
  std::vector<double> b_;
  std::vector<double> c_;
};

/// max_i |(A x - b)_i| — the constraint residual used everywhere a solution
/// is reported. Bound violations are not part of this metric.
double infeasibility(const StandardFormLP& lp, std::span<const double> x);

/// Partition of the column set {0, ..., n-1} into m basic and n-m nonbasic
/// columns. Basic order is significant (slot i corresponds to row i of the
/// basis system); the nonbasic list is kept sorted ascending by column id so
/// that "slot order" and "column id order" tie-breaking coincide.
class BasisPartition {
 public:
  BasisPartition() = default;

  /// Validates that `basic` has no repeats and every id is in [0, n).
  static BasisPartition make(int num_cols, std::vector<int> basic);

  int num_cols() const { return static_cast<int>(is_basic_.size()); }
  int num_basic() const { return static_cast<int>(basic_.size()); }
  int num_nonbasic() const { return static_cast<int>(nonbasic_.size()); }

  const std::vector<int>& basic() const { return basic_; }
  const std::vector<int>& nonbasic() const { return nonbasic_; }

  int basic_at(int slot) const { return basic_[slot]; }
  int nonbasic_at(int slot) const { return nonbasic_[slot]; }
  bool is_basic(int col) const { return is_basic_[col] != 0; }

  /// Slot of a basic column, or -1.
  int basic_slot_of(int col) const;
  /// Slot of a nonbasic column, or -1.
  int nonbasic_slot_of(int col) const;

  /// Exchanges the nonbasic column `entering` with the basic column at
  /// `basic_slot`. The entering column takes over that slot; the leaving
  /// column is re-inserted into the sorted nonbasic list.
  void swap(int entering, int basic_slot);

  /// Order-insensitive signature of the basic set, for cycle detection.
  std::uint64_t signature() const;

 private:
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<char> is_basic_;
};

/// Dense views of the basic/nonbasic parts of (A, c) for one partition.
struct ColumnSplit {
  std::vector<std::span<const Entry>> basic_cols;
  std::vector<std::span<const Entry>> nonbasic_cols;
  std::vector<double> basic_cost;
  std::vector<double> nonbasic_cost;
};

ColumnSplit split_columns(const StandardFormLP& lp, const BasisPartition& bp);

// ---------------------------------------------------------------------------
// General (pre-conversion) models
// ---------------------------------------------------------------------------

enum class RowType { LessEqual, GreaterEqual, Equal, NonBinding };

struct GeneralRow {
  std::string name;
  RowType type = RowType::LessEqual;
  double rhs = 0.0;
  bool has_range = false;
  double range = 0.0;  // RANGES value; interpretation depends on row type
};

struct Bounds {
  double lower = 0.0;
  double upper = kInf;
};

struct GeneralColumn {
  std::string name;
  double cost = 0.0;
  Bounds bounds;
  std::vector<Entry> entries;  // row indices into GeneralLP::rows
};

/// Row/column LP as read from an MPS file: named rows of mixed sense, named
/// bounded columns, optional maximization and an objective-row constant.
struct GeneralLP {
  std::string name;
  bool maximize = false;
  double objective_constant = 0.0;
  std::vector<GeneralRow> rows;
  std::vector<GeneralColumn> columns;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_cols() const { return static_cast<int>(columns.size()); }
};

/// Activity interval [lo, hi] a row constrains to, after RANGES
/// interpretation (one side infinite for plain inequalities).
struct RowBounds {
  double lo = -kInf;
  double hi = kInf;
};

RowBounds row_bounds(const GeneralRow& row);

/// Affine recovery of original variables and objective from the converted
/// model: original_j = offset_j + sum_k coef * x_standard[index].
struct VariableMap {
  struct Term {
    int index = 0;
    double coef = 1.0;
  };
  struct Recovery {
    double offset = 0.0;
    std::vector<Term> terms;
  };

  std::vector<Recovery> variables;   // one per original column
  std::vector<std::string> names;    // original column names
  double objective_sign = 1.0;       // -1 when the original was a maximization
  double objective_offset = 0.0;     // added after the sign flip

  std::vector<double> recover_point(std::span<const double> x_std) const;
  double recover_objective(double std_objective) const;
};

struct Conversion {
  StandardFormLP lp;
  VariableMap map;
};

/// Rewrites a GeneralLP into equality standard form with nonnegative
/// variables: bounds are shifted/mirrored/split, inequality rows get slack
/// or surplus columns, range rows get a bounded slack (expressed with an
/// extra row), and finite upper bounds become explicit rows. Maximization is
/// negated into minimization. Throws InfeasibleModelError when a column has
/// lower bound > upper bound.
Conversion to_standard_form(const GeneralLP& lp);

}  // namespace dpsimplex
