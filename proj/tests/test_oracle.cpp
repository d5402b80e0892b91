#include <gtest/gtest.h>

#include "gridword/formula.hpp"
#include "gridword/oracle.hpp"
#include "gridword/verify.hpp"

using namespace gridword;

TEST(Oracle, SpotValues) {
  const auto ring = exact_max(2, 3, 3);
  EXPECT_EQ(ring.value, 8);
  EXPECT_EQ(render_text(ring.witness), "###\n#.#\n###\n");
  EXPECT_EQ(exact_max(2, 5, 5).value, 18);
  EXPECT_EQ(exact_max(0, 2, 2).value, 2);
  EXPECT_EQ(exact_max(1, 5, 3).value, 9);
  EXPECT_EQ(exact_max(1, 3, 5).value, 9);
}

TEST(Oracle, WitnessOrientationFollowsCaller) {
  for (int d = 0; d <= 4; ++d) {
    const auto r = exact_max(d, 3, 7);
    EXPECT_EQ(r.witness.height(), 3);
    EXPECT_EQ(r.witness.width(), 7);
    EXPECT_TRUE(is_degree_bounded(r.witness, d));
    EXPECT_EQ(filled_count(r.witness), r.value);
  }
}

TEST(Oracle, BruteForceAgrees) {
  for (int d = 0; d <= 4; ++d)
    for (int h = 1; h <= 16; ++h)
      for (int w = 1; h * w <= 16; ++w)
        EXPECT_EQ(exact_max_bruteforce(d, h, w), exact_max(d, h, w).value)
            << d << " " << h << "x" << w;
  EXPECT_EQ(exact_max_bruteforce(4, 2, 2), 4);
  EXPECT_EQ(exact_max_bruteforce(0, 3, 3), 5);
  EXPECT_EQ(exact_max_bruteforce(1, 5, 3), 9);
  EXPECT_THROW(exact_max_bruteforce(2, 6, 5), capacity_error);
}

TEST(Oracle, TransposeConsistency) {
  for (int d = 0; d <= 4; ++d)
    for (int h = 1; h <= 7; ++h)
      for (int w = 1; w <= 7; ++w)
        EXPECT_EQ(exact_max(d, h, w).value, exact_max(d, w, h).value);
}

TEST(Oracle, MonotoneInDegreeAndHeight) {
  for (int w = 1; w <= 6; ++w) {
    std::vector<DegreeProfileDP> dps;
    for (int d = 0; d <= 4; ++d) dps.emplace_back(d, w);
    for (int h = 1; h <= 20; ++h)
      for (int d = 0; d <= 4; ++d) {
        if (d < 4) EXPECT_LE(dps[d].max_value(h), dps[d + 1].max_value(h));
        EXPECT_LE(dps[d].max_value(h), dps[d].max_value(h + 1));
      }
  }
}

// A one-row word is scored with an empty row above and below, so a full
// single row of width w is admissible exactly when d >= 2 (or w <= 2 with
// d >= 1).
TEST(Oracle, VirtualBoundaryRows) {
  EXPECT_EQ(exact_max(2, 1, 6).value, 6);
  EXPECT_EQ(exact_max(1, 1, 6).value, 4);
  EXPECT_EQ(exact_max(0, 1, 6).value, 3);
  EXPECT_EQ(exact_max(1, 1, 2).value, 2);
  // Appending rows never makes an earlier optimum inadmissible.
  DegreeProfileDP dp(2, 5);
  for (int h = 1; h <= 12; ++h) {
    const auto r = exact_max(dp, h);
    EXPECT_TRUE(is_degree_bounded(r.witness, 2));
  }
}

TEST(Oracle, ExcessMatchesTable) {
  for (int w = 3; w <= 6; ++w) {
    DegreeProfileDP dp(2, w);
    for (int h = w; h <= 30; ++h) {
      const Third e = Third::from_numerator(3 * dp.max_value(h) - 2 * h * w);
      EXPECT_EQ(e, excess_max(h, w)) << h << "x" << w;
    }
  }
}

TEST(Oracle, CountsAndOrbits) {
  EXPECT_EQ(count_maximal(2, 5, 5, true), 1u);
  EXPECT_EQ(count_maximal(2, 8, 5, true), 1u);
  EXPECT_EQ(count_maximal(4, 3, 3, true), 1u);
  EXPECT_EQ(count_maximal(4, 4, 6, false), 1u);
  EXPECT_EQ(count_maximal(2, 5, 5, false), 2u);
  // The two checkerboards of a 2 x 2 square are one orbit.
  EXPECT_EQ(count_maximal(0, 2, 2, false), 2u);
  EXPECT_EQ(count_maximal(0, 2, 2, true), 1u);
  // Odd squares have a single checkerboard with the corners filled.
  EXPECT_EQ(count_maximal(0, 3, 3, false), 1u);
}

TEST(Oracle, EnumerationAgreesWithCount) {
  for (int d = 0; d <= 3; ++d) {
    DegreeProfileDP dp(d, 4);
    std::uint64_t seen = 0;
    dp.enumerate_optimal(6, 1000000, [&](const std::vector<std::uint32_t>& rows) {
      ++seen;
      const Word2D w = word_from_rows(rows, 4);
      EXPECT_TRUE(is_degree_bounded(w, d));
      EXPECT_EQ(filled_count(w), dp.max_value(6));
    });
    EXPECT_EQ(seen, dp.count_optimal(6));
  }
}

TEST(Oracle, EnumerationCap) {
  OracleOptions o;
  o.enumeration_cap = 1;
  try {
    count_maximal(0, 4, 4, true, o);
    FAIL();
  } catch (const partial_result_error& e) {
    EXPECT_GE(e.lower_bound(), 1u);
  }
}

TEST(Oracle, CapacityGuards) {
  EXPECT_THROW(exact_max(2, 9, 9), capacity_error);
  OracleOptions wide;
  wide.width_limit = 9;
  EXPECT_EQ(exact_max(1, 9, 9, wide).value, max_filled(1, 9, 9));
  OracleOptions short_budget;
  short_budget.row_budget = 10;
  EXPECT_THROW(exact_max(2, 11, 3, short_budget), capacity_error);
  EXPECT_THROW(exact_max(5, 3, 3), std::invalid_argument);
  EXPECT_THROW(exact_max(2, 0, 3), dimension_error);
}

TEST(Verify, SmallSweepAgrees) {
  const auto reports = verify_theorem({0, 1, 2, 3, 4}, 6, 6);
  EXPECT_EQ(reports.size(), 5u * 21u);
  for (const auto& r : reports) {
    EXPECT_FALSE(r.skipped);
    EXPECT_TRUE(r.agrees) << r.d << " " << r.h << "x" << r.w;
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(filled_count(*r.witness), r.oracle);
    EXPECT_TRUE(is_degree_bounded(*r.witness, r.d));
  }
}

TEST(Verify, CapacityMarksSkipped) {
  SweepOptions opt;
  opt.h_min = 9;
  opt.w_min = 9;
  const auto reports = verify_theorem({2}, 9, 9, opt);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].skipped);
  EXPECT_FALSE(reports[0].note.empty());
}

TEST(Verify, OddOnlyAndFullRectangle) {
  SweepOptions opt;
  opt.odd_only = true;
  const auto odd = verify_theorem({1}, 7, 7, opt);
  for (const auto& r : odd) {
    EXPECT_EQ(r.h % 2, 1);
    EXPECT_EQ(r.w % 2, 1);
  }
  EXPECT_EQ(odd.size(), 10u);
  opt.odd_only = false;
  opt.lower_triangle = false;
  const auto all = verify_theorem({2}, 3, 4, opt);
  EXPECT_EQ(all.size(), 12u);
  for (const auto& r : all) {
    EXPECT_TRUE(r.agrees);
    EXPECT_EQ(r.witness->height(), r.h);
    EXPECT_EQ(r.witness->width(), r.w);
  }
}
