#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpsimplex/model.hpp"

namespace dpsimplex {

/// Malformed input file; carries the 1-based source line.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

/// Valid MPS feature this library does not model (integer markers/bounds).
struct UnsupportedError : Error {
  using Error::Error;
};

struct MpsWarning {
  int line = 0;
  std::string message;
};

struct MpsReadResult {
  GeneralLP lp;
  std::vector<MpsWarning> warnings;
};

/// Parses MPS text (token-based, free-format; fixed-format files tokenize
/// identically as long as names hold no spaces). Supports NAME, OBJSENSE,
/// ROWS, COLUMNS, RHS, RANGES, BOUNDS, ENDATA. The first N row is the
/// objective; later N rows are kept as non-binding and dropped during
/// conversion (with a warning). An RHS entry on the objective row becomes a
/// negated objective constant. Integer markers and integer bound types
/// throw UnsupportedError.
MpsReadResult parse_mps_text(const std::string& text,
                             const std::string& name_hint = "");

/// Reads a file, transparently inflating gzip (by magic number sniffing).
MpsReadResult read_mps(const std::string& path);

/// Serializes an equality-standard-form model as MPS (all rows E, default
/// nonnegative bounds). Mainly for fixture tooling and round-trip tests.
std::string write_mps(const StandardFormLP& lp);

// ---------------------------------------------------------------------------
// Presolve
// ---------------------------------------------------------------------------

/// Result of the (optional, off-by-default) reduction pass over a GeneralLP:
///  * rows with no coefficients are checked against their interval and
///    dropped (or flagged infeasible),
///  * columns fixed by their bounds are substituted into rows and removed,
///  * empty columns with zero cost are removed at a feasible bound value,
///  * inconsistent bounds flag infeasibility.
/// The pass repeats until it changes nothing, so it is idempotent.
struct PresolveResult {
  bool infeasible = false;
  std::string message;
  GeneralLP reduced;
  std::vector<std::pair<std::string, double>> fixed_columns;  // name -> value
  std::vector<std::string> dropped_rows;

  /// Rebuilds a full original-space point from a reduced-space one. Columns
  /// are matched by name.
  std::vector<double> postsolve(const GeneralLP& original,
                                std::span<const double> reduced_x) const;
};

PresolveResult presolve(const GeneralLP& lp);

}  // namespace dpsimplex
