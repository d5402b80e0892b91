#include <gtest/gtest.h>

#include "gridword/formula.hpp"

using namespace gridword;

TEST(Formula, SpotValues) {
  EXPECT_EQ(max_filled(0, 7, 4), 14);
  EXPECT_EQ(max_filled(2, 7, 7), 34);
  EXPECT_EQ(max_filled(2, 8, 5), 28);
  EXPECT_EQ(max_filled(4, 3, 9), 27);
  EXPECT_EQ(max_filled(3, 7, 4), 25);
  EXPECT_EQ(max_filled(1, 5, 3), 9);
  EXPECT_EQ(max_filled(2, 5, 5), 18);
  EXPECT_EQ(max_filled(2, 6, 5), 21);
  EXPECT_EQ(max_filled(2, 7, 5), 24);
  EXPECT_EQ(max_filled(2, 9, 9), 56);
  EXPECT_EQ(max_filled(1, 8, 6), 24);
  EXPECT_EQ(max_filled(1, 7, 4), 15);
  EXPECT_EQ(max_filled(0, 6, 6), 18);
}

TEST(Formula, RejectsBadInput) {
  EXPECT_THROW(max_filled(-1, 3, 3), std::invalid_argument);
  EXPECT_THROW(max_filled(5, 3, 3), std::invalid_argument);
  EXPECT_THROW(max_filled(2, 0, 3), dimension_error);
  EXPECT_THROW(excess_max(3, 0), dimension_error);
}

TEST(Formula, ExcessTable) {
  EXPECT_EQ(excess_max(5, 5), Third::from_numerator(4));
  EXPECT_EQ(excess_max(6, 5), Third::integer(1));
  EXPECT_EQ(excess_max(7, 5), Third::from_numerator(2));
  EXPECT_EQ(excess_max(5, 2), Third::from_numerator(4));
  EXPECT_EQ(excess_max(7, 7), Third::from_numerator(4));
  EXPECT_EQ(excess_max(2, 2), Third::from_numerator(4));
  for (int h = 1; h <= 60; ++h)
    EXPECT_EQ(excess_max(h, 1), Third::from_numerator(h));
  // Orientation does not matter.
  EXPECT_EQ(excess_max(5, 6), excess_max(6, 5));
}

TEST(Formula, ExactlyOneBranchFires) {
  for (int h = 1; h <= 60; ++h)
    for (int w = 1; w <= h; ++w)
      EXPECT_EQ(excess_branches(h, w).size(), 1u) << h << "x" << w;
}

TEST(Formula, ExcessCapForWideWords) {
  for (int h = 3; h <= 60; ++h)
    for (int w = 3; w <= h; ++w) {
      const Third e = excess_max(h, w);
      EXPECT_LE(e, Third::integer(2));
      const bool two = w == 3 || (h % 3 == 0 && w % 3 == 0);
      EXPECT_EQ(e == Third::integer(2), two) << h << "x" << w;
      if (w >= 4) {
        EXPECT_GE(e, Third::from_numerator(2));
      }
    }
}

TEST(Formula, DegreeTwoConsistency) {
  for (int h = 1; h <= 60; ++h)
    for (int w = 1; w <= 60; ++w)
      EXPECT_EQ(3 * max_filled(2, h, w),
                2 * h * w + excess_max(h, w).numerator());
}

TEST(Formula, WidthTwoAndThree) {
  for (int h = 3; h <= 20; ++h) EXPECT_EQ(max_filled(2, h, 3), 2 * h + 2);
  for (int h = 3; h <= 64; ++h) EXPECT_EQ(max_filled(2, h, 2), (6 * h + 3) / 4);
  // The 2 x 2 square is a 4-cycle, one more than ceil(6h/4).
  EXPECT_EQ(max_filled(2, 2, 2), 4);
  for (int h = 1; h <= 50; ++h) EXPECT_EQ(max_filled(2, h, 1), h);
}

TEST(Formula, DegreeThreeSmallSides) {
  for (int h = 1; h <= 30; ++h) {
    EXPECT_EQ(max_filled(3, h, 1), h);
    EXPECT_EQ(max_filled(3, h, 2), 2 * h);
    EXPECT_EQ(max_filled(3, 2, h), 2 * h);
  }
  // The inner grid never reaches the profile solver here.
  DominationOptions none;
  none.profile_limit = 0;
  EXPECT_EQ(max_filled(3, 40, 2, none), 80);
  EXPECT_THROW(max_filled(3, 40, 5, none), capacity_error);
}

TEST(Formula, Symmetry) {
  for (int d = 0; d <= 4; ++d)
    for (int h = 1; h <= 16; ++h)
      for (int w = 1; w <= 16; ++w)
        EXPECT_EQ(max_filled(d, h, w), max_filled(d, w, h));
}

TEST(Formula, MonotoneInDegreeAndSize) {
  for (int h = 1; h <= 16; ++h)
    for (int w = 1; w <= 16; ++w) {
      for (int d = 0; d < 4; ++d)
        EXPECT_LE(max_filled(d, h, w), max_filled(d + 1, h, w));
      for (int d = 0; d <= 4; ++d) {
        EXPECT_LE(max_filled(d, h, w), max_filled(d, h + 1, w));
        EXPECT_LE(max_filled(d, h, w), std::int64_t{h} * w);
      }
    }
}

TEST(Formula, FullWhenExpected) {
  for (int h = 1; h <= 12; ++h)
    for (int w = 1; w <= 12; ++w) {
      EXPECT_EQ(max_filled(4, h, w), h * w);
      if (std::min(h, w) <= 2) EXPECT_EQ(max_filled(3, h, w), h * w);
    }
  EXPECT_EQ(max_filled(2, 2, 2), 4);
}

TEST(Formula, Table) {
  const auto t2 = formula_table(2, 20, 5);
  for (int h = 3; h <= 20; ++h) EXPECT_EQ(t2[h - 1][2], 2 * h + 2);
  const auto t4 = formula_table(4, 6, 9);
  for (int h = 1; h <= 6; ++h)
    for (int w = 1; w <= 9; ++w) EXPECT_EQ(t4[h - 1][w - 1], h * w);
  for (int d = 0; d <= 4; ++d) {
    const auto t = formula_table(d, 12, 12);
    for (int h = 1; h <= 12; ++h)
      for (int w = 1; w <= 12; ++w) {
        EXPECT_EQ(t[h - 1][w - 1], t[w - 1][h - 1]);
        EXPECT_EQ(t[h - 1][w - 1], max_filled(d, h, w));
      }
  }
  const auto rect = formula_table(3, 9, 5);
  for (int h = 1; h <= 9; ++h)
    for (int w = 1; w <= 5; ++w)
      EXPECT_EQ(rect[h - 1][w - 1], max_filled(3, h, w)) << h << "x" << w;
}
