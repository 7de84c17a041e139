#pragma once

#include <cstdint>

#include "dpsimplex/model.hpp"

namespace dpsimplex {

/// A requested instance size exceeds what doubles can represent faithfully.
struct SizeError : Error {
  using Error::Error;
};

/// SplitMix64: tiny, fast, full-period 64-bit generator. Used for every
/// randomized instance so runs are reproducible across platforms from the
/// seed alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

 private:
  std::uint64_t state_;
};

/// One worst-case cube instance in equality standard form (slack columns
/// appended after the structural ones), together with its closed-form
/// optimizer over all 2m standard columns.
struct KleeMintyInstance {
  StandardFormLP lp;
  int variant = 0;
  int dimension = 0;
  std::vector<double> optimal_x;
  double optimal_objective = 0.0;
};

/// Builds variant 1, 2, or 3 of the deformed-cube family in dimension m.
///
///   variant 1: A(i,j) = 2^(i-j+1) below the unit diagonal, b_i = 5^i,
///              c_j = -2^(m-j); optimum (0,...,0,5^m).
///   variant 2: A(i,j) = 10^(i-j) below the unit diagonal, b_i = 100^(i-1),
///              c_j = -10^(m-j); optimum (0,...,0,100^(m-1)).
///   variant 3: A(i,j) = 2 below the unit diagonal, b_i = 2^i - 1,
///              c = -1; optimum (0,...,0,2^m - 1).
///
/// Coefficients, costs and certificates are produced by one shared exact
/// integer power routine so that algebraically equal quantities are equal
/// bit-for-bit. Dimension guards (128 / 150 / 200) keep every stored number
/// finite in double precision; exceeding them throws SizeError naming the
/// bound.
KleeMintyInstance klee_minty(int variant, int m);

/// Dense random instance [M I] x = b with M ~ U[-0.5, 0.5]^(m x m) filled
/// column by column, then b ~ U[10, 11], then structural costs
/// ~ U[-0.5, 0.5] (slack costs zero), all drawn from SplitMix64(seed) in
/// that order. The slack basis is feasible (b > 0), so no artificial
/// columns are ever needed.
struct RandomDenseInstance {
  StandardFormLP lp;
  std::uint64_t seed = 0;
};

RandomDenseInstance random_dense(int m, std::uint64_t seed);

}  // namespace dpsimplex
