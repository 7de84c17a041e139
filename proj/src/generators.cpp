#include "dpsimplex/generators.hpp"

#include <string>

namespace dpsimplex {

namespace {

// Exact integer power in double arithmetic. Every quantity in the cube
// instances is derived through this one routine so that mathematically
// equal coefficients are equal bit-for-bit, letting reduced-cost
// cancellations come out exactly zero.
double pow_int(double base, int exp) {
  double v = 1.0;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_dimension(int variant, int m, int bound) {
  if (m < 1)
    throw ValidationError("cube dimension must be at least 1");
  if (m > bound)
    throw SizeError("cube variant " + std::to_string(variant) +
                    " supports dimension up to " + std::to_string(bound) +
                    " (got " + std::to_string(m) + ")");
}

}  // namespace

KleeMintyInstance klee_minty(int variant, int m) {
  if (variant < 1 || variant > 3)
    throw ValidationError("cube variant must be 1, 2 or 3");
  const int bound = variant == 1 ? 128 : variant == 2 ? 150 : 200;
  check_dimension(variant, m, bound);

  KleeMintyInstance inst;
  inst.variant = variant;
  inst.dimension = m;

  std::vector<std::vector<Entry>> cols(2 * m);
  std::vector<double> b(m), c(2 * m, 0.0), xopt(2 * m, 0.0);

  for (int j = 0; j < m; ++j) {
    cols[j].push_back(Entry{j, 1.0});  // unit diagonal in every variant
    for (int i = j + 1; i < m; ++i) {
      double a;
      if (variant == 1)
        a = pow_int(2.0, i - j + 1);
      else if (variant == 2)
        a = pow_int(10.0, i - j);
      else
        a = 2.0;
      cols[j].push_back(Entry{i, a});
    }
    cols[m + j].push_back(Entry{j, 1.0});  // slack
  }
  for (int i = 0; i < m; ++i) {
    if (variant == 1)
      b[i] = pow_int(5.0, i + 1);
    else if (variant == 2)
      b[i] = pow_int(100.0, i);
    else
      b[i] = pow_int(2.0, i + 1) - 1.0;
  }
  for (int j = 0; j < m; ++j) {
    if (variant == 1)
      c[j] = -pow_int(2.0, m - 1 - j);
    else if (variant == 2)
      c[j] = -pow_int(10.0, m - 1 - j);
    else
      c[j] = -1.0;
  }

  // Optimum: last structural variable at the final right-hand side, all
  // other structural variables zero, slack i at b_i except the last.
  const double top = b[m - 1];
  xopt[m - 1] = top;
  for (int i = 0; i + 1 < m; ++i) xopt[m + i] = b[i];
  inst.optimal_objective = -top;  // c_m = -1 in every variant

  inst.lp = StandardFormLP("cube-v" + std::to_string(variant) + "-m" +
                               std::to_string(m),
                           m, std::move(cols), std::move(b), std::move(c));
  inst.optimal_x = std::move(xopt);
  return inst;
}

RandomDenseInstance random_dense(int m, std::uint64_t seed) {
  if (m < 1) throw ValidationError("instance size must be at least 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<Entry>> cols(2 * m);
  for (int j = 0; j < m; ++j) {
    cols[j].reserve(m);
    for (int i = 0; i < m; ++i)
      cols[j].push_back(Entry{i, rng.uniform(-0.5, 0.5)});
  }
  for (int j = 0; j < m; ++j) cols[m + j].push_back(Entry{j, 1.0});
  std::vector<double> b(m);
  for (int i = 0; i < m; ++i) b[i] = rng.uniform(10.0, 11.0);
  std::vector<double> c(2 * m, 0.0);
  for (int j = 0; j < m; ++j) c[j] = rng.uniform(-0.5, 0.5);

  RandomDenseInstance inst;
  inst.seed = seed;
  inst.lp = StandardFormLP("rand-m" + std::to_string(m) + "-s" +
                               std::to_string(seed),
                           m, std::move(cols), std::move(b), std::move(c));
  return inst;
}

}  // namespace dpsimplex
