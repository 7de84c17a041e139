#pragma once

#include <span>
#include <vector>

namespace dpsimplex {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double* row(int i) { return a_.data() + static_cast<size_t>(i) * cols_; }
  const double* row(int i) const { return a_.data() + static_cast<size_t>(i) * cols_; }

  /// max absolute row sum.
  double inf_norm() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

struct LUOptions {
  /// A pivot below singular_tol * max(1, inf-norm) counts as singular.
  double singular_tol = 1e-11;
  /// Replacement magnitude factor for singular pivots.
  double eps = 1e-10;
};

/// Dense LU factorization with partial (row) pivoting: P * M = L * U, with L
/// unit lower triangular. Singular pivots are replaced in place by a
/// sign-preserving epsilon so downstream triangular solves always succeed;
/// the replaced diagonal positions are recorded. There is deliberately no
/// least-squares or pseudo-inverse fallback path anywhere in this module.
struct LUFactors {
  int size = 0;
  DenseMatrix lu;                // L strictly below the diagonal, U on/above
  std::vector<int> row_perm;     // row i of P*M is row row_perm[i] of M
  std::vector<int> perturbed_diagonals;  // ascending positions k with U(k,k) replaced
  double eps_used = 0.0;         // replacement magnitude (0 when no replacement)
  double scale = 1.0;            // max(1, inf-norm of the input)
};

LUFactors lu_factor(const DenseMatrix& m, const LUOptions& opts = {});

/// Solves M x = rhs through the factors (forward then backward substitution).
std::vector<double> solve_basis(const LUFactors& f, std::span<const double> rhs);

/// Solves M^T y = rhs through the same factors.
std::vector<double> solve_basis_transpose(const LUFactors& f,
                                          std::span<const double> rhs);

/// Column-wise solve of M X = RHS for several right-hand sides.
DenseMatrix solve_basis_multi(const LUFactors& f, const DenseMatrix& rhs);

}  // namespace dpsimplex
