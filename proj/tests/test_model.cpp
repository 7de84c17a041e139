#include <doctest.h>

#include <cmath>
#include <vector>

#include "dpsimplex/model.hpp"

using namespace dpsimplex;

namespace {

StandardFormLP tiny_identity_lp() {
  // min x1 + 2 x2  s.t.  I x = (1, 2)
  return StandardFormLP("tiny", 2, {{{0, 1.0}}, {{1, 1.0}}}, {1.0, 2.0},
                        {1.0, 2.0});
}

GeneralLP max_single_row() {
  // max x1 s.t. x1 <= 3, x1 >= 0
  GeneralLP g;
  g.name = "maxrow";
  g.maximize = true;
  g.rows.push_back({"r1", RowType::LessEqual, 3.0, false, 0.0});
  GeneralColumn c;
  c.name = "x1";
  c.cost = 1.0;
  c.entries = {{0, 1.0}};
  g.columns.push_back(c);
  return g;
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("column storage is canonical: sorted, merged, zero-free") {
    StandardFormLP lp("canon", 3,
                      {{{2, 1.0}, {0, 2.0}, {2, 3.0}, {1, 0.0}}},
                      {1.0, 1.0, 1.0}, {0.0});
    auto col = lp.col(0);
    REQUIRE(col.size() == 2);
    CHECK(col[0].row == 0);
    CHECK(col[0].value == 2.0);
    CHECK(col[1].row == 2);
    CHECK(col[1].value == 4.0);  // duplicates summed
  }

  TEST_CASE("construction validates dimensions and data") {
    CHECK_THROWS_AS(StandardFormLP("bad", 2, {{{0, 1.0}}}, {1.0}, {1.0}),
                    ValidationError);  // b shorter than m
    CHECK_THROWS_AS(StandardFormLP("bad", 1, {{{5, 1.0}}}, {1.0}, {1.0}),
                    ValidationError);  // row index out of range
    CHECK_THROWS_AS(
        StandardFormLP("bad", 1, {{{0, std::nan("")}}}, {1.0}, {1.0}),
        ValidationError);  // NaN coefficient
    CHECK_THROWS_AS(StandardFormLP("bad", 1, {{{0, 1.0}}},
                                   {std::numeric_limits<double>::infinity()},
                                   {1.0}),
                    ValidationError);  // infinite rhs
    CHECK_THROWS_AS(StandardFormLP("bad", -1, {}, {}, {}), ValidationError);
  }

  TEST_CASE("residual norm: exact solution gives zero") {
    StandardFormLP lp = tiny_identity_lp();
    std::vector<double> x = {1.0, 2.0};
    CHECK(infeasibility(lp, x) == 0.0);
  }

  TEST_CASE("residual norm: identity system off by one unit") {
    StandardFormLP lp = tiny_identity_lp();
    std::vector<double> x = {1.0, 1.0};
    CHECK(infeasibility(lp, x) == 1.0);
  }

  TEST_CASE("residual norm matches a hand-computed max row violation") {
    // A = [[1,2],[3,4]], b = (1, 1), x = (1, 1) -> Ax - b = (2, 6).
    StandardFormLP lp("hand", 2, {{{0, 1.0}, {1, 3.0}}, {{0, 2.0}, {1, 4.0}}},
                      {1.0, 1.0}, {0.0, 0.0});
    std::vector<double> x = {1.0, 1.0};
    CHECK(infeasibility(lp, x) == doctest::Approx(6.0).epsilon(1e-15));
  }

  TEST_CASE("basis partition bookkeeping stays an exact inverse") {
    BasisPartition bp = BasisPartition::make(5, {4, 1});
    CHECK(bp.num_basic() == 2);
    CHECK(bp.num_nonbasic() == 3);
    CHECK(bp.basic_at(0) == 4);
    CHECK(bp.basic_at(1) == 1);
    // Nonbasic list sorted ascending.
    CHECK(bp.nonbasic() == std::vector<int>{0, 2, 3});
    for (int c = 0; c < 5; ++c) {
      if (bp.is_basic(c)) {
        CHECK(bp.basic_at(bp.basic_slot_of(c)) == c);
        CHECK(bp.nonbasic_slot_of(c) == -1);
      } else {
        CHECK(bp.nonbasic_at(bp.nonbasic_slot_of(c)) == c);
        CHECK(bp.basic_slot_of(c) == -1);
      }
    }
  }

  TEST_CASE("basis partition validates membership") {
    CHECK_THROWS_AS(BasisPartition::make(3, {0, 0}), ValidationError);
    CHECK_THROWS_AS(BasisPartition::make(3, {0, 3}), ValidationError);
    CHECK_THROWS_AS(BasisPartition::make(3, {-1}), ValidationError);
  }

  TEST_CASE("swap exchanges entering and leaving columns") {
    BasisPartition bp = BasisPartition::make(6, {0, 1, 2});
    bp.swap(5, 1);  // column 5 enters at slot 1; column 1 leaves
    CHECK(bp.basic() == std::vector<int>{0, 5, 2});
    CHECK(bp.nonbasic() == std::vector<int>{1, 3, 4});
    CHECK(bp.is_basic(5));
    CHECK_FALSE(bp.is_basic(1));
  }

  TEST_CASE("basis signature ignores slot order and sees set changes") {
    BasisPartition a = BasisPartition::make(6, {0, 1, 2});
    BasisPartition b = BasisPartition::make(6, {2, 0, 1});
    CHECK(a.signature() == b.signature());
    BasisPartition c = BasisPartition::make(6, {0, 1, 3});
    CHECK(a.signature() != c.signature());
  }

  TEST_CASE("column split over an appended identity block") {
    // A = [M I] with M 2x2; basic = the identity columns.
    StandardFormLP lp("mi", 2,
                      {{{0, 0.5}, {1, -0.25}},
                       {{0, -0.125}, {1, 0.3}},
                       {{0, 1.0}},
                       {{1, 1.0}}},
                      {10.5, 10.75}, {0.1, -0.2, 0.0, 0.0});
    BasisPartition bp = BasisPartition::make(4, {2, 3});
    ColumnSplit s = split_columns(lp, bp);
    REQUIRE(s.basic_cols.size() == 2);
    CHECK(s.basic_cols[0].size() == 1);
    CHECK(s.basic_cols[0][0].row == 0);
    CHECK(s.basic_cols[0][0].value == 1.0);
    CHECK(s.basic_cols[1][0].row == 1);
    CHECK(s.basic_cols[1][0].value == 1.0);
    CHECK(s.basic_cost == std::vector<double>{0.0, 0.0});
    CHECK(s.nonbasic_cost == std::vector<double>{0.1, -0.2});
  }

  TEST_CASE("column split follows the partition, not the column order") {
    StandardFormLP lp("lead", 2, {{{0, 1.0}}, {{1, 2.0}}, {{0, 3.0}, {1, 4.0}}},
                      {1.0, 1.0}, {1.0, 2.0, 3.0});
    BasisPartition bp = BasisPartition::make(3, {0, 1});
    ColumnSplit lead = split_columns(lp, bp);
    CHECK(lead.basic_cols[0][0].value == 1.0);
    CHECK(lead.basic_cols[1][0].value == 2.0);
    // Swapping one index changes exactly one view.
    bp.swap(2, 1);
    ColumnSplit after = split_columns(lp, bp);
    CHECK(after.basic_cols[0][0].value == 1.0);       // unchanged slot
    CHECK(after.basic_cols[1].size() == 2);           // new column 2 view
    CHECK(after.basic_cost == std::vector<double>{1.0, 3.0});
    // Views are reads: underlying coefficients untouched.
    CHECK(lp.col(1)[0].value == 2.0);
  }

  TEST_CASE("maximization flips into minimization with recoverable map") {
    GeneralLP g = max_single_row();
    Conversion cv = to_standard_form(g);
    REQUIRE(cv.lp.num_rows() == 1);
    REQUIRE(cv.lp.num_cols() == 2);  // x1 + slack
    CHECK(cv.lp.cost()[0] == -1.0);  // negated for minimization
    CHECK(cv.lp.cost()[1] == 0.0);
    CHECK(cv.lp.rhs()[0] == 3.0);
    // Standard-form point x1=3, s=0 maps back to x1=3, objective +3.
    std::vector<double> xs = {3.0, 0.0};
    std::vector<double> orig = cv.map.recover_point(xs);
    REQUIRE(orig.size() == 1);
    CHECK(orig[0] == doctest::Approx(3.0));
    CHECK(cv.map.recover_objective(cv.lp.objective_value(xs)) ==
          doctest::Approx(3.0));
  }

  TEST_CASE("free variables split into a nonnegative difference") {
    GeneralLP g;
    g.rows.push_back({"r", RowType::Equal, 1.0, false, 0.0});
    GeneralColumn y;
    y.name = "y";
    y.cost = 1.0;
    y.bounds.lower = -kInf;
    y.bounds.upper = kInf;
    y.entries = {{0, 1.0}};
    g.columns.push_back(y);
    Conversion cv = to_standard_form(g);
    CHECK(cv.lp.num_cols() == 2);  // y+ and y-
    CHECK(cv.lp.cost()[0] == 1.0);
    CHECK(cv.lp.cost()[1] == -1.0);
    // y = -2  <=>  y+ = 0, y- = 2.
    std::vector<double> xs = {0.0, 2.0};
    CHECK(cv.map.recover_point(xs)[0] == doctest::Approx(-2.0));
  }

  TEST_CASE("range on an inequality row becomes a width-bounded slack") {
    // 2 <= x1 <= 5 expressed as x1 <= 5 with range 3.
    GeneralLP g;
    g.rows.push_back({"r", RowType::LessEqual, 5.0, true, 3.0});
    GeneralColumn x;
    x.name = "x1";
    x.cost = -1.0;
    x.entries = {{0, 1.0}};
    g.columns.push_back(x);
    RowBounds rb = row_bounds(g.rows[0]);
    CHECK(rb.lo == doctest::Approx(2.0));
    CHECK(rb.hi == doctest::Approx(5.0));
    Conversion cv = to_standard_form(g);
    // One activity row plus one slack-width row.
    REQUIRE(cv.lp.num_rows() == 2);
    // x1 = 2 (slack at its width) and x1 = 5 (slack 0) are both feasible.
    for (double target : {2.0, 5.0}) {
      std::vector<double> xs(cv.lp.num_cols(), 0.0);
      xs[0] = target;
      xs[1] = 5.0 - target;          // slack on the activity row
      xs[2] = 3.0 - (5.0 - target);  // companion slack on the width row
      CHECK(infeasibility(cv.lp, xs) <= 1e-12);
      CHECK(cv.map.recover_point(xs)[0] == doctest::Approx(target));
    }
  }

  TEST_CASE("bound handling: shift, mirror, explicit upper row") {
    GeneralLP g;
    g.rows.push_back({"r", RowType::LessEqual, 10.0, false, 0.0});
    GeneralColumn a;  // 1 <= a <= 4
    a.name = "a";
    a.cost = 2.0;
    a.bounds = {1.0, 4.0};
    a.entries = {{0, 1.0}};
    GeneralColumn b;  // b <= 2 (no lower bound)
    b.name = "b";
    b.cost = -1.0;
    b.bounds = {-kInf, 2.0};
    b.entries = {{0, 1.0}};
    g.columns = {a, b};
    Conversion cv = to_standard_form(g);
    // Point a=3, b=-1: shifted/mirrored coordinates must recover it.
    // a -> a' = a - 1 = 2;  b -> b' = 2 - b = 3.
    std::vector<double> xs(cv.lp.num_cols(), 0.0);
    xs[0] = 2.0;
    xs[1] = 3.0;
    // Remaining slots are slacks; fill by solving the explicit rows.
    // activity row: a + b = 3 - 1 = 2 <= 10 -> slack 8.
    // upper-bound row for a: a' <= 3 -> slack 1.
    for (int j = 2; j < cv.lp.num_cols(); ++j) xs[j] = 0.0;
    // Recover variables regardless of slack fill-in.
    std::vector<double> orig = cv.map.recover_point(xs);
    CHECK(orig[0] == doctest::Approx(3.0));
    CHECK(orig[1] == doctest::Approx(-1.0));
    // Objective: 2*3 + (-1)*(-1) = 7.
    CHECK(cv.map.recover_objective(cv.lp.objective_value(xs)) ==
          doctest::Approx(7.0));
  }

  TEST_CASE("inconsistent bounds are rejected as infeasible") {
    GeneralLP g;
    g.rows.push_back({"r", RowType::LessEqual, 1.0, false, 0.0});
    GeneralColumn x;
    x.name = "x";
    x.bounds = {3.0, 2.0};
    x.entries = {{0, 1.0}};
    g.columns.push_back(x);
    CHECK_THROWS_AS(to_standard_form(g), InfeasibleModelError);
  }

  TEST_CASE("conversion of several zero-rhs rows keeps the row count") {
    // Regression: the converted model must have one activity row per
    // binding input row even when every rhs entry is zero.
    GeneralLP g;
    g.rows.push_back({"r1", RowType::LessEqual, 0.0, false, 0.0});
    g.rows.push_back({"r2", RowType::LessEqual, 0.0, false, 0.0});
    g.rows.push_back({"r3", RowType::LessEqual, 1.0, false, 0.0});
    GeneralColumn x;
    x.name = "x";
    x.cost = -1.0;
    x.entries = {{0, 1.0}, {1, 0.5}, {2, 1.0}};
    g.columns.push_back(x);
    Conversion cv = to_standard_form(g);
    CHECK(cv.lp.num_rows() == 3);
    CHECK(cv.lp.rhs() == std::vector<double>{0.0, 0.0, 1.0});
  }

  TEST_CASE("objective constant survives the round trip") {
    GeneralLP g = max_single_row();
    g.objective_constant = 4.0;
    Conversion cv = to_standard_form(g);
    std::vector<double> xs = {3.0, 0.0};
    // max x1 + 4 at x1 = 3 -> 7.
    CHECK(cv.map.recover_objective(cv.lp.objective_value(xs)) ==
          doctest::Approx(7.0));
  }
}
