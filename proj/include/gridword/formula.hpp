#ifndef GRIDWORD_FORMULA_HPP_
#define GRIDWORD_FORMULA_HPP_

// Closed forms for the largest number of filled cells in an h x w word whose
// filled cells all have degree at most d, and the excess table for d = 2.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridword/domination.hpp"
#include "gridword/errors.hpp"
#include "gridword/word.hpp"

namespace gridword {

/// Which case of the d = 2 table applies to (h, w) with h >= w.
enum class ExcessBranch {
  full,           // w = 1 or h = w = 2
  width2_even,    // w = 2, h even, h >= 4
  width2_odd,     // w = 2, h odd, h >= 3
  two,            // w = 3 or h = w = 0 (mod 3)
  four_thirds,    // w >= 4, h = w != 0 (mod 3)
  one,            // w >= 4, hw = 0 (mod 3), h != w (mod 3)
  two_thirds,     // otherwise
};

namespace detail {

inline void check_dims(int h, int w) {
  if (h < 1 || w < 1)
    throw dimension_error("dimensions must be positive, got " +
                          std::to_string(h) + "x" + std::to_string(w));
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

}  // namespace detail

/// Every branch whose condition holds for (h, w); normalised so h >= w.
/// Exactly one element is expected.
inline std::vector<ExcessBranch> excess_branches(int h, int w) {
  detail::check_dims(h, w);
  if (h < w) std::swap(h, w);
  std::vector<ExcessBranch> out;
  const int hm = h % 3, wm = w % 3;
  if (w == 1 || (h == 2 && w == 2)) out.push_back(ExcessBranch::full);
  if (w == 2 && h % 2 == 0 && h >= 4) out.push_back(ExcessBranch::width2_even);
  if (w == 2 && h % 2 == 1 && h >= 3) out.push_back(ExcessBranch::width2_odd);
  if (w == 3 || (hm == 0 && wm == 0)) out.push_back(ExcessBranch::two);
  if (w >= 4 && hm == wm && wm != 0) out.push_back(ExcessBranch::four_thirds);
  if (w >= 4 && (hm * wm) % 3 == 0 && hm != wm)
    out.push_back(ExcessBranch::one);
  const bool any_named = !out.empty();
  if (!any_named && w >= 4) out.push_back(ExcessBranch::two_thirds);
  return out;
}

/// The single branch of the d = 2 table that applies to (h, w).
inline ExcessBranch excess_branch(int h, int w) {
  const auto all = excess_branches(h, w);
  if (all.size() != 1)
    throw consistency_error("d=2 table branches are not exclusive at " +
                            std::to_string(h) + "x" + std::to_string(w));
  return all.front();
}

/// Maximal excess of a d = 2 word of dimensions h x w, as an exact third.
inline Third excess_max(int h, int w) {
  detail::check_dims(h, w);
  if (h < w) std::swap(h, w);
  switch (excess_branch(h, w)) {
    case ExcessBranch::full:
      return Third::from_numerator(std::int64_t{h} * w);  // hw/3
    case ExcessBranch::width2_even:
      return Third::from_numerator(h / 2);  // h/6
    case ExcessBranch::width2_odd:
      return Third::from_numerator((h + 3) / 2);  // h/6 + 1/2
    case ExcessBranch::two: return Third::integer(2);
    case ExcessBranch::four_thirds: return Third::from_numerator(4);
    case ExcessBranch::one: return Third::integer(1);
    case ExcessBranch::two_thirds: return Third::from_numerator(2);
  }
  throw consistency_error("unreachable excess branch");
}

/// m_d(h, w): the largest number of filled cells in an h x w word whose
/// filled cells have degree at most d. For d = 3 the inner grid's
/// domination number is computed exactly.
inline std::int64_t max_filled(int d, int h, int w,
                               DominationOptions dom = {}) {
  if (d < 0 || d > 4)
    throw std::invalid_argument("degree bound must lie in [0,4], got " +
                                std::to_string(d));
  detail::check_dims(h, w);
  if (h < w) std::swap(h, w);
  const std::int64_t hw = std::int64_t{h} * w;
  switch (d) {
    case 0:
      return detail::ceil_div(hw, 2);
    case 1:
      if (h % 2 == 0 && w % 2 == 0) return hw / 2;
      if (h % 2 == 1 && w % 2 == 0)
        return (h - 1) * std::int64_t{w} / 2 + detail::ceil_div(2 * w, 3);
      return std::int64_t{h} * (w - 1) / 2 + detail::ceil_div(2 * h, 3);
    case 2: {
      const std::int64_t thirds = 2 * hw + excess_max(h, w).numerator();
      if (thirds % 3 != 0)
        throw consistency_error("non-integral m_2 at " + std::to_string(h) +
                                "x" + std::to_string(w));
      return thirds / 3;
    }
    case 3:
      if (w <= 2) return hw;
      return hw - gamma(h - 2, w - 2, dom);
    default:
      return hw;
  }
}

/// m_d over 1..h_max x 1..w_max; entry [h-1][w-1].
inline std::vector<std::vector<std::int64_t>> formula_table(
    int d, int h_max, int w_max, DominationOptions dom = {}) {
  detail::check_dims(h_max, w_max);
  std::vector<std::vector<std::int64_t>> table(
      h_max, std::vector<std::int64_t>(w_max, 0));
  if (d == 3) {
    // One profile solver per inner width serves every inner height.
    for (int h = 1; h <= h_max; ++h)
      for (int w = 1; w <= w_max; ++w)
        if (std::min(h, w) <= 2) table[h - 1][w - 1] = std::int64_t{h} * w;
    const int big = std::max(h_max, w_max);
    for (int inner_w = 1; inner_w + 2 <= std::min(h_max, w_max); ++inner_w) {
      GridDominationSolver solver(inner_w, dom);
      for (int inner_h = inner_w; inner_h + 2 <= big; ++inner_h) {
        const std::int64_t g = solver.gamma(inner_h);
        const int a = inner_h + 2, b = inner_w + 2;
        if (a <= h_max && b <= w_max)
          table[a - 1][b - 1] = std::int64_t{a} * b - g;
        if (b <= h_max && a <= w_max)
          table[b - 1][a - 1] = std::int64_t{a} * b - g;
      }
    }
    return table;
  }
  for (int h = 1; h <= h_max; ++h)
    for (int w = 1; w <= w_max; ++w)
      table[h - 1][w - 1] = max_filled(d, h, w, dom);
  return table;
}

}  // namespace gridword

#endif  // GRIDWORD_FORMULA_HPP_
