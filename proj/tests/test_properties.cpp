// Randomised invariants. Seeds are fixed so failures reproduce.

#include <gtest/gtest.h>

#include <random>

#include "gridword/construct.hpp"
#include "gridword/oracle.hpp"

using namespace gridword;

namespace {

Word2D random_word(std::mt19937& rng, int max_side, int density_pct = 50) {
  std::uniform_int_distribution<int> side(1, max_side);
  Word2D w(side(rng), side(rng));
  std::uniform_int_distribution<int> pct(0, 99);
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j) w.set(i, j, pct(rng) < density_pct);
  return w;
}

}  // namespace

TEST(Properties, ExcessIdentityAndRange) {
  std::mt19937 rng(1);
  for (int k = 0; k < 1000; ++k) {
    const Word2D w = random_word(rng, 12);
    const auto n = filled_count(w);
    EXPECT_GE(n, 0);
    EXPECT_LE(n, std::int64_t{w.height()} * w.width());
    EXPECT_EQ(excess(w).numerator() + 2 * w.height() * w.width(), 3 * n);
  }
}

TEST(Properties, ExcessIsAdditiveUnderSplits) {
  std::mt19937 rng(2);
  for (int k = 0; k < 1000; ++k) {
    const Word2D w = random_word(rng, 12);
    if (w.height() >= 2) {
      const int r = 1 + static_cast<int>(rng() % (w.height() - 1));
      const Word2D top = rows_factor(w, 1, r);
      const Word2D bottom = rows_factor(w, r + 1, w.height());
      EXPECT_EQ(excess(vconcat(top, bottom)), excess(top) + excess(bottom));
    }
    if (w.width() >= 2) {
      const int c = 1 + static_cast<int>(rng() % (w.width() - 1));
      const Word2D left = cols_factor(w, 1, c);
      const Word2D right = cols_factor(w, c + 1, w.width());
      EXPECT_EQ(excess(hconcat(left, right)), excess(left) + excess(right));
    }
  }
}

TEST(Properties, ConcatenationCounts) {
  std::mt19937 rng(3);
  for (int k = 0; k < 300; ++k) {
    Word2D a = random_word(rng, 8);
    Word2D b = random_word(rng, 8);
    b = power(b, a.height(), b.width());
    EXPECT_EQ(filled_count(hconcat(a, b)), filled_count(a) + filled_count(b));
    EXPECT_EQ(transform(hconcat(a, b), Transform::transpose),
              vconcat(transform(a, Transform::transpose),
                      transform(b, Transform::transpose)));
  }
}

TEST(Properties, DihedralInvariance) {
  std::mt19937 rng(4);
  for (int k = 0; k < 300; ++k) {
    const Word2D w = random_word(rng, 9, 60);
    for (Transform t : kAllTransforms) {
      const Word2D x = transform(w, t);
      EXPECT_EQ(filled_count(x), filled_count(w));
      EXPECT_EQ(max_degree(x), max_degree(w));
      EXPECT_EQ(excess(x), excess(w));
      EXPECT_EQ(is_snake(x), is_snake(w));
      EXPECT_EQ(is_linear_forest(x), is_linear_forest(w));
    }
  }
}

TEST(Properties, DegreeLocality) {
  std::mt19937 rng(5);
  for (int k = 0; k < 300; ++k) {
    Word2D w = random_word(rng, 9);
    const DegreeWord before = degree_word(w);
    const int i = 1 + static_cast<int>(rng() % w.height());
    const int j = 1 + static_cast<int>(rng() % w.width());
    w.set(i, j, !w.filled(i, j));
    const DegreeWord after = degree_word(w);
    for (int a = 1; a <= w.height(); ++a)
      for (int b = 1; b <= w.width(); ++b)
        if (std::abs(a - i) + std::abs(b - j) > 1)
          EXPECT_EQ(before.at(a, b), after.at(a, b));
  }
}

TEST(Properties, DegreeRespectsNeighbourCaps) {
  std::mt19937 rng(6);
  for (int k = 0; k < 300; ++k) {
    const Word2D w = random_word(rng, 10, 80);
    const DegreeWord dw = degree_word(w);
    for (int i = 1; i <= w.height(); ++i)
      for (int j = 1; j <= w.width(); ++j) {
        EXPECT_LE(dw.at(i, j), neighbor_cap(w.height(), w.width(), i, j));
        if (!w.filled(i, j)) EXPECT_EQ(dw.at(i, j), 0);
      }
  }
}

TEST(Properties, TextRoundTrip) {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Word2D w = random_word(rng, 15);
    EXPECT_EQ(parse_text(render_text(w)), w);
  }
}

TEST(Properties, OracleMonotone) {
  for (int w = 1; w <= 5; ++w)
    for (int h = 1; h <= 8; ++h)
      for (int d = 0; d <= 4; ++d) {
        const auto v = exact_max(d, h, w).value;
        if (d < 4) EXPECT_LE(v, exact_max(d + 1, h, w).value);
        EXPECT_LE(v, exact_max(d, h + 1, w).value);
        EXPECT_LE(v, exact_max(d, h, w + 1).value);
      }
}

TEST(Properties, WidthFourConstructionsAreSnakes) {
  for (int h = 5; h <= 40; ++h) EXPECT_TRUE(is_snake(construct(2, h, 4))) << h;
}

TEST(Properties, RandomWordsNeverBeatTheOracle) {
  std::mt19937 rng(8);
  for (int k = 0; k < 300; ++k) {
    const Word2D w = random_word(rng, 6, 65);
    const int d = max_degree(w);
    EXPECT_LE(filled_count(w), exact_max(d, w.height(), w.width()).value);
  }
}
