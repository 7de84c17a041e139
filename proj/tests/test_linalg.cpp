#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dpsimplex/linalg.hpp"

using namespace dpsimplex;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(static_cast<int>(rows.size()),
                rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Rebuilds P*M from the packed factors: (L U)(i, j) with unit diagonal L.
DenseMatrix multiply_lu(const LUFactors& f) {
  const int n = f.size;
  DenseMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k <= i && k <= j; ++k) {
        double lik = (k == i) ? 1.0 : f.lu.at(i, k);
        s += lik * f.lu.at(k, j);
      }
      out.at(i, j) = s;
    }
  }
  return out;
}

double reconstruction_error(const DenseMatrix& m, const LUFactors& f) {
  DenseMatrix prod = multiply_lu(f);
  double worst = 0.0;
  for (int i = 0; i < f.size; ++i)
    for (int j = 0; j < f.size; ++j)
      worst = std::max(worst,
                       std::abs(prod.at(i, j) - m.at(f.row_perm[i], j)));
  return worst;
}

double residual_inf(const DenseMatrix& m, std::span<const double> x,
                    std::span<const double> b, bool transposed = false) {
  double worst = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < m.cols(); ++j)
      s += (transposed ? m.at(j, i) : m.at(i, j)) * x[j];
    worst = std::max(worst, std::abs(s - b[i]));
  }
  return worst;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("identity factors into itself with the trivial permutation") {
    DenseMatrix id = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    LUFactors f = lu_factor(id);
    CHECK(f.size == 3);
    CHECK(f.perturbed_diagonals.empty());
    CHECK(f.eps_used == 0.0);
    CHECK(f.row_perm == std::vector<int>{0, 1, 2});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(f.lu.at(i, j) == (i == j ? 1.0 : 0.0));
  }

  TEST_CASE("antidiagonal permutation pivots rows, no perturbation") {
    DenseMatrix m = from_rows({{0, 1}, {1, 0}});
    LUFactors f = lu_factor(m);
    CHECK(f.perturbed_diagonals.empty());
    CHECK(f.row_perm == std::vector<int>{1, 0});
    CHECK(reconstruction_error(m, f) == 0.0);
    std::vector<double> x = solve_basis(f, std::vector<double>{3.0, 7.0});
    CHECK(x[0] == doctest::Approx(7.0));
    CHECK(x[1] == doctest::Approx(3.0));
  }

  TEST_CASE("rank-one matrix gets its second diagonal replaced") {
    DenseMatrix m = from_rows({{1, 1}, {1, 1}});
    LUFactors f = lu_factor(m);
    REQUIRE(f.perturbed_diagonals.size() == 1);
    CHECK(f.perturbed_diagonals[0] == 1);  // zero-based position
    CHECK(f.eps_used > 0.0);
    CHECK(std::abs(f.lu.at(1, 1)) >= f.eps_used * (1.0 - 1e-15));
    // Solves still complete and return finite values.
    std::vector<double> x = solve_basis(f, std::vector<double>{1.0, 1.0});
    for (double v : x) CHECK(std::isfinite(v));
  }

  TEST_CASE("diagonal solve matches hand arithmetic") {
    DenseMatrix m = from_rows({{2, 0}, {0, 4}});
    LUFactors f = lu_factor(m);
    std::vector<double> x = solve_basis(f, std::vector<double>{2.0, 8.0});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(2.0));
  }

  TEST_CASE("transpose solve uses the same factors") {
    // M = [[1,2],[0,3]]: M^T y = (1,5) -> y1 = 1, 2*1 + 3*y2 = 5 -> y2 = 1.
    DenseMatrix m = from_rows({{1, 2}, {0, 3}});
    LUFactors f = lu_factor(m);
    std::vector<double> y =
        solve_basis_transpose(f, std::vector<double>{1.0, 5.0});
    CHECK(y[0] == doctest::Approx(1.0));
    CHECK(y[1] == doctest::Approx(1.0));
    CHECK(residual_inf(m, y, std::vector<double>{1.0, 5.0}, true) <= 1e-14);
  }

  TEST_CASE("multi right-hand-side solve is columnwise identical") {
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = 6, k = 3;
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = u(gen) + (i == j ? 4.0 : 0.0);
    DenseMatrix rhs(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) rhs.at(i, j) = u(gen);
    LUFactors f = lu_factor(m);
    DenseMatrix X = solve_basis_multi(f, rhs);
    REQUIRE(X.rows() == n);
    REQUIRE(X.cols() == k);
    for (int j = 0; j < k; ++j) {
      std::vector<double> col(n);
      for (int i = 0; i < n; ++i) col[i] = rhs.at(i, j);
      std::vector<double> x = solve_basis(f, col);
      for (int i = 0; i < n; ++i) {
        // Bitwise: the multi solve must run the very same substitutions.
        CHECK(X.at(i, j) == x[i]);
      }
    }
  }

  TEST_CASE("random factorizations reconstruct the pivoted input") {
    std::mt19937_64 gen(20260816);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> dim(2, 20);
    int perturbed_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = dim(gen);
      DenseMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = u(gen);
      // A tenth of the trials get a duplicated row to force the repair path.
      if (trial % 10 == 0 && n >= 2) {
        for (int j = 0; j < n; ++j) m.at(1, j) = m.at(0, j);
      }
      LUFactors f = lu_factor(m);
      const double tol = 1e-8 * (1.0 + m.inf_norm());
      if (f.perturbed_diagonals.empty()) {
        CHECK(reconstruction_error(m, f) <= tol);
        // Solve residuals for a deterministic rhs.
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i) b[i] = u(gen);
        std::vector<double> x = solve_basis(f, b);
        CHECK(residual_inf(m, x, b) <= 1e-6 * (1.0 + m.inf_norm()));
        std::vector<double> y = solve_basis_transpose(f, b);
        CHECK(residual_inf(m, y, b, true) <= 1e-6 * (1.0 + m.inf_norm()));
      } else {
        ++perturbed_seen;
        // Diagonal replacements are recorded in ascending order and each
        // replaced entry keeps at least the replacement magnitude.
        for (size_t k = 1; k < f.perturbed_diagonals.size(); ++k)
          CHECK(f.perturbed_diagonals[k - 1] < f.perturbed_diagonals[k]);
        CHECK(f.eps_used > 0.0);
        for (int kpos : f.perturbed_diagonals)
          CHECK(std::abs(f.lu.at(kpos, kpos)) >=
                f.eps_used * (1.0 - 1e-15));
        std::vector<double> b(n, 1.0);
        for (double v : solve_basis(f, b)) CHECK(std::isfinite(v));
      }
    }
    // The duplicated-row trials must actually have exercised the repair path.
    CHECK(perturbed_seen >= 50);
  }

  TEST_CASE("permutation validity and unit pivot growth on all paths") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 2 + static_cast<int>(gen() % 19);
      DenseMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = u(gen);
      LUFactors f = lu_factor(m);
      std::vector<char> seen(n, 0);
      for (int i = 0; i < n; ++i) {
        REQUIRE(f.row_perm[i] >= 0);
        REQUIRE(f.row_perm[i] < n);
        CHECK(!seen[f.row_perm[i]]);
        seen[f.row_perm[i]] = 1;
      }
      // Partial pivoting keeps every multiplier at magnitude <= 1 (synthetic
      // pivots, which these full-rank draws never need, would break that).
      if (f.perturbed_diagonals.empty()) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < i; ++j)
            CHECK(std::abs(f.lu.at(i, j)) <= 1.0 + 1e-15);
      }
    }
  }

  TEST_CASE("severe singularity still yields usable factors") {
    // All-zero matrix: every diagonal must be replaced, solves stay finite.
    DenseMatrix z(4, 4);
    LUFactors f = lu_factor(z);
    CHECK(f.perturbed_diagonals == std::vector<int>{0, 1, 2, 3});
    CHECK(f.scale == 1.0);  // max(1, 0)
    std::vector<double> x = solve_basis(f, std::vector<double>{1, 2, 3, 4});
    for (double v : x) CHECK(std::isfinite(v));
    DenseMatrix rhs(4, 1);
    rhs.at(2, 0) = 1.0;
    DenseMatrix X = solve_basis_multi(f, rhs);
    for (int i = 0; i < 4; ++i) CHECK(std::isfinite(X.at(i, 0)));
  }

  TEST_CASE("scale records max(1, inf-norm)") {
    DenseMatrix big = from_rows({{30, -40}, {1, 2}});
    CHECK(big.inf_norm() == 70.0);
    CHECK(lu_factor(big).scale == 70.0);
    DenseMatrix small = from_rows({{0.25, 0.25}, {0.1, 0.1}});
    CHECK(lu_factor(small).scale == 1.0);
  }
}
