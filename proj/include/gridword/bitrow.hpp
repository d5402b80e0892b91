#ifndef GRIDWORD_BITROW_HPP_
#define GRIDWORD_BITROW_HPP_

// Bit-parallel degree arithmetic on rows (or columns) stored as masks.

#include <cstdint>
#include <initializer_list>

namespace gridword::bitrow {

/// Cells whose count of set bits across `planes` exceeds `d`.
inline std::uint64_t over_limit(std::initializer_list<std::uint64_t> planes,
                                int d) {
  // Bit-sliced counter with three bits, enough for up to 7 planes.
  std::uint64_t c0 = 0, c1 = 0, c2 = 0;
  for (std::uint64_t p : planes) {
    const std::uint64_t k0 = c0 & p;
    c0 ^= p;
    const std::uint64_t k1 = c1 & k0;
    c1 ^= k0;
    c2 |= k1;
  }
  switch (d) {
    case 0: return c0 | c1 | c2;
    case 1: return c1 | c2;
    case 2: return (c1 & c0) | c2;
    case 3: return c2;
    case 4: return c2 & (c1 | c0);
    default: return 0;
  }
}

/// Filled cells of `row` whose degree exceeds d given the rows above and
/// below. `full` masks the valid columns.
inline std::uint64_t row_violations(std::uint64_t above, std::uint64_t row,
                                    std::uint64_t below, std::uint64_t full,
                                    int d) {
  const std::uint64_t left = (row << 1) & full;
  const std::uint64_t right = row >> 1;
  return row & over_limit({left, right, above, below}, d);
}

}  // namespace gridword::bitrow

#endif  // GRIDWORD_BITROW_HPP_
