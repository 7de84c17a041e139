#include "dpsimplex/linalg.hpp"

#include <cmath>
#include <numeric>

#include "dpsimplex/model.hpp"

namespace dpsimplex {

double DenseMatrix::inf_norm() const {
  double worst = 0.0;
  for (int i = 0; i < rows_; ++i) {
    double s = 0.0;
    const double* r = row(i);
    for (int j = 0; j < cols_; ++j) s += std::abs(r[j]);
    worst = std::max(worst, s);
  }
  return worst;
}

LUFactors lu_factor(const DenseMatrix& m, const LUOptions& opts) {
  if (m.rows() != m.cols()) throw ValidationError("LU input must be square");
  const int n = m.rows();
  LUFactors f;
  f.size = n;
  f.lu = m;
  f.row_perm.resize(n);
  std::iota(f.row_perm.begin(), f.row_perm.end(), 0);
  f.scale = std::max(1.0, m.inf_norm());
  const double singular = opts.singular_tol * f.scale;

  for (int k = 0; k < n; ++k) {
    // Partial pivoting: largest magnitude in column k, rows k..n-1.
    int piv = k;
    double best = std::abs(f.lu.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu.at(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu.at(k, j), f.lu.at(piv, j));
      std::swap(f.row_perm[k], f.row_perm[piv]);
    }
    double d = f.lu.at(k, k);
    if (std::abs(d) < singular) {
      // Sign-preserving replacement keeps the factorization usable; the
      // caller can inspect perturbed_diagonals to learn which pivots were
      // synthetic.
      f.eps_used = opts.eps * f.scale;
      d = std::signbit(d) ? -f.eps_used : f.eps_used;
      f.lu.at(k, k) = d;
      f.perturbed_diagonals.push_back(k);
    }
    const double inv = 1.0 / d;
    for (int i = k + 1; i < n; ++i) {
      double lik = f.lu.at(i, k) * inv;
      f.lu.at(i, k) = lik;
      if (lik == 0.0) continue;
      const double* rk = f.lu.row(k);
      double* ri = f.lu.row(i);
      for (int j = k + 1; j < n; ++j) ri[j] -= lik * rk[j];
    }
  }
  return f;
}

std::vector<double> solve_basis(const LUFactors& f, std::span<const double> rhs) {
  const int n = f.size;
  if (rhs.size() != static_cast<size_t>(n))
    throw ValidationError("rhs length does not match factor size");
  std::vector<double> x(n);
  // Apply the permutation, then L y = P b (unit diagonal).
  for (int i = 0; i < n; ++i) x[i] = rhs[f.row_perm[i]];
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    const double* ri = f.lu.row(i);
    for (int j = 0; j < i; ++j) s -= ri[j] * x[j];
    x[i] = s;
  }
  // U x = y.
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    const double* ri = f.lu.row(i);
    for (int j = i + 1; j < n; ++j) s -= ri[j] * x[j];
    x[i] = s / ri[i];
  }
  return x;
}

std::vector<double> solve_basis_transpose(const LUFactors& f,
                                          std::span<const double> rhs) {
  const int n = f.size;
  if (rhs.size() != static_cast<size_t>(n))
    throw ValidationError("rhs length does not match factor size");
  // M^T y = c with P M = L U means U^T w = c, L^T v = w, y = P^T v.
  std::vector<double> w(rhs.begin(), rhs.end());
  for (int i = 0; i < n; ++i) {
    double s = w[i];
    for (int j = 0; j < i; ++j) s -= f.lu.at(j, i) * w[j];
    w[i] = s / f.lu.at(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = w[i];
    for (int j = i + 1; j < n; ++j) s -= f.lu.at(j, i) * w[j];
    w[i] = s;
  }
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[f.row_perm[i]] = w[i];
  return y;
}

DenseMatrix solve_basis_multi(const LUFactors& f, const DenseMatrix& rhs) {
  if (rhs.rows() != f.size)
    throw ValidationError("rhs row count does not match factor size");
  DenseMatrix out(rhs.rows(), rhs.cols());
  std::vector<double> col(f.size);
  for (int j = 0; j < rhs.cols(); ++j) {
    for (int i = 0; i < f.size; ++i) col[i] = rhs.at(i, j);
    std::vector<double> x = solve_basis(f, col);
    for (int i = 0; i < f.size; ++i) out.at(i, j) = x[i];
  }
  return out;
}

}  // namespace dpsimplex
