#ifndef GRIDWORD_CONSTRUCT_HPP_
#define GRIDWORD_CONSTRUCT_HPP_

// Deterministic generators of d-full words for every degree bound and every
// rectangle. Each generator re-verifies its output against max_filled.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridword/bitrow.hpp"
#include "gridword/domination.hpp"
#include "gridword/errors.hpp"
#include "gridword/formula.hpp"
#include "gridword/oracle.hpp"
#include "gridword/word.hpp"

namespace gridword {

enum class Strategy {
  checkerboard,
  tile2x6,
  column,
  w2period4,
  w3cycle,
  w4blocks,
  smallw_dp,
  diagonal_general,
  dominating_complement,
  full,
};

inline std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::checkerboard: return "checkerboard";
    case Strategy::tile2x6: return "tile2x6";
    case Strategy::column: return "column";
    case Strategy::w2period4: return "w2period4";
    case Strategy::w3cycle: return "w3cycle";
    case Strategy::w4blocks: return "w4blocks";
    case Strategy::smallw_dp: return "smallw_dp";
    case Strategy::diagonal_general: return "diagonal_general";
    case Strategy::dominating_complement: return "dominating_complement";
    case Strategy::full: return "full";
  }
  return "?";
}

struct ConstructOptions {
  DominationOptions domination{};
  OracleOptions oracle{};
};

// ---------------------------------------------------------------------------
// The 4-wide blocks used for d = 2, w = 4.

namespace blocks {

inline const Word2D& A() {
  static const Word2D w = parse_text("####\n#..#\n.###\n##..\n");
  return w;
}
inline const Word2D& B() {
  static const Word2D w = parse_text("####\n#..#\n#.##\n.##.\n");
  return w;
}
inline const Word2D& C() {
  static const Word2D w = parse_text("#..#\n####\n");
  return w;
}
inline const Word2D& D() {
  static const Word2D w = parse_text("##.#\n#..#\n####\n");
  return w;
}
inline const Word2D& Dtilde() {
  static const Word2D w = parse_text("#.##\n#..#\n####\n");
  return w;
}
inline const Word2D& E() {
  static const Word2D w = parse_text("####\n#..#\n");
  return w;
}
inline const Word2D& U() {
  static const Word2D w = parse_text("#.##\n#.#.\n#.##\n");
  return w;
}
inline const Word2D& V() {
  static const Word2D w = parse_text("##.#\n.#.#\n##.#\n");
  return w;
}
inline const Word2D& X() {
  static const Word2D w = parse_text("##.#\n#.##\n#.#.\n");
  return w;
}
inline const Word2D& Y() {
  static const Word2D w = parse_text("#.##\n##.#\n.#.#\n");
  return w;
}
inline const Word2D& W4() {
  static const Word2D w = parse_text("####\n#..#\n#..#\n####\n");
  return w;
}

/// Named blocks in a fixed order, for golden-file checks.
inline std::vector<std::pair<std::string, Word2D>> all() {
  return {{"A", A()}, {"B", B()},           {"C", C()}, {"D", D()},
          {"Dtilde", Dtilde()}, {"E", E()}, {"U", U()}, {"V", V()},
          {"X", X()}, {"Y", Y()},           {"W4", W4()}};
}

}  // namespace blocks

namespace detail {

inline Word2D stack(std::initializer_list<Word2D> parts) {
  std::optional<Word2D> out;
  for (const Word2D& p : parts) out = out ? vconcat(*out, p) : p;
  return *out;
}

inline Word2D repeat_v(const Word2D& w, int times, const Word2D& head) {
  Word2D out = head;
  for (int k = 0; k < times; ++k) out = vconcat(out, w);
  return out;
}

// W_h for h >= 4, composed by h mod 6.
inline Word2D width4_word(int h) {
  using namespace blocks;
  if (h == 4) return W4();
  const Word2D uv = vconcat(U(), V());
  const Word2D xy = vconcat(X(), Y());
  switch (h % 6) {
    case 0: return vconcat(repeat_v(uv, (h - 6) / 6, A()), C());
    case 1: return vconcat(repeat_v(xy, (h - 7) / 6, B()), D());
    case 2: return repeat_v(uv, (h - 2) / 6, E());
    case 3: return stack({repeat_v(uv, (h - 9) / 6, A()), U(), C()});
    case 4: return stack({repeat_v(xy, (h - 10) / 6, B()), X(), Dtilde()});
    default: return vconcat(repeat_v(uv, (h - 5) / 6, E()), U());
  }
}

inline void certify(const Word2D& word, int d, int h, int w,
                    std::int64_t target, std::string_view what) {
  if (word.height() != h || word.width() != w)
    throw consistency_error(std::string(what) + " produced wrong dimensions");
  if (!is_degree_bounded(word, d))
    throw consistency_error(std::string(what) + " violates degree bound " +
                            std::to_string(d) + " at " + std::to_string(h) +
                            "x" + std::to_string(w));
  if (filled_count(word) != target)
    throw consistency_error(std::string(what) + " fills " +
                            std::to_string(filled_count(word)) + " of " +
                            std::to_string(target) + " cells at " +
                            std::to_string(h) + "x" + std::to_string(w));
}

// ---------------------------------------------------------------------------
// General d = 2 construction for w >= 7.
//
// Interior cells follow a diagonal stripe, filled iff (i + s*j) mod 3 != c,
// in which every interior filled cell has degree exactly 2. The top and
// bottom `band` rows are then re-optimised by a column DP whose state is the
// free bits of two consecutive columns; the fixed stripe cells take part in
// every degree check.

inline constexpr int kBandRows = 3;
inline constexpr int kBandMaxHeight = 64;

inline bool stripe_filled(int i, int j, int s, int c) {
  return ((i + s * j) % 3 + 3) % 3 != c;
}

// Best column masks (bit i-1 = row i) for one stripe variant.
inline std::optional<std::vector<std::uint64_t>> band_solve(int h, int w,
                                                            int s, int c,
                                                            int band) {
  const std::uint64_t full =
      h == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h) - 1;
  std::vector<int> free_rows;
  std::uint64_t free_mask = 0;
  for (int i = 1; i <= h; ++i)
    if (i <= band || i > h - band) {
      free_rows.push_back(i - 1);
      free_mask |= std::uint64_t{1} << (i - 1);
    }
  const int bits = static_cast<int>(free_rows.size());
  const int nx = 1 << bits;
  std::vector<std::uint64_t> expand(nx, 0);
  for (int x = 0; x < nx; ++x)
    for (int b = 0; b < bits; ++b)
      if ((x >> b) & 1) expand[x] |= std::uint64_t{1} << free_rows[b];
  std::vector<std::uint64_t> fixed(w + 2, 0);
  for (int j = 1; j <= w; ++j) {
    std::uint64_t m = 0;
    for (int i = 1; i <= h; ++i)
      if (stripe_filled(i, j, s, c)) m |= std::uint64_t{1} << (i - 1);
    fixed[j] = m & ~free_mask;
  }
  auto col = [&](int j, int x) -> std::uint64_t {
    return (j < 1 || j > w) ? 0 : fixed[j] | expand[x];
  };

  constexpr std::int32_t kNone = std::numeric_limits<std::int32_t>::min();
  const std::size_t states = static_cast<std::size_t>(nx) * nx;
  // State (a, b): free bits of columns j-1 and j.
  std::vector<std::int32_t> val(states, kNone), next;
  std::vector<std::vector<std::uint8_t>> back(w + 1);
  for (int b = 0; b < nx; ++b) val[b] = std::popcount(col(1, b));
  for (int j = 1; j < w; ++j) {
    next.assign(states, kNone);
    back[j + 1].assign(states, 0);
    for (int a = 0; a < nx; ++a) {
      const std::uint64_t ca = col(j - 1, a);
      for (int b = 0; b < nx; ++b) {
        const std::int32_t v = val[static_cast<std::size_t>(a) * nx + b];
        if (v == kNone) continue;
        const std::uint64_t cb = col(j, b);
        for (int x = 0; x < nx; ++x) {
          const std::uint64_t cx = col(j + 1, x);
          if (bitrow::row_violations(ca, cb, cx, full, 2)) continue;
          const std::int32_t nv = v + std::popcount(cx);
          const std::size_t t = static_cast<std::size_t>(b) * nx + x;
          if (nv > next[t]) {
            next[t] = nv;
            back[j + 1][t] = static_cast<std::uint8_t>(a);
          }
        }
      }
    }
    val.swap(next);
  }
  std::int32_t best = kNone;
  std::size_t arg = 0;
  for (std::size_t t = 0; t < states; ++t) {
    if (val[t] == kNone || val[t] <= best) continue;
    const int a = static_cast<int>(t / nx), b = static_cast<int>(t % nx);
    if (w >= 2 && bitrow::row_violations(col(w - 1, a), col(w, b), 0, full, 2))
      continue;
    if (w == 1 && bitrow::row_violations(0, col(1, b), 0, full, 2)) continue;
    best = val[t];
    arg = t;
  }
  if (best == kNone) return std::nullopt;
  std::vector<int> xs(w + 1, 0);
  int a = static_cast<int>(arg / nx), b = static_cast<int>(arg % nx);
  xs[w] = b;
  for (int j = w; j >= 2; --j) {
    xs[j - 1] = a;
    const int prev = back[j][static_cast<std::size_t>(a) * nx + b];
    b = a;
    a = prev;
  }
  std::vector<std::uint64_t> cols(w);
  for (int j = 1; j <= w; ++j) cols[j - 1] = col(j, xs[j]);
  return cols;
}

inline Word2D from_columns(const std::vector<std::uint64_t>& cols, int h) {
  Word2D out(h, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < h; ++i)
      if ((cols[j] >> i) & 1) out.set(i + 1, static_cast<int>(j) + 1, true);
  return out;
}

// h >= w >= 7 and h <= kBandMaxHeight.
inline Word2D diagonal_general_small(int h, int w, std::int64_t target) {
  for (int s : {1, -1})
    for (int c = 0; c < 3; ++c) {
      auto cols = band_solve(h, w, s, c, kBandRows);
      if (!cols) continue;
      Word2D word = from_columns(*cols, h);
      if (filled_count(word) == target) return word;
    }
  throw consistency_error("diagonal construction misses the maximum at " +
                          std::to_string(h) + "x" + std::to_string(w));
}

// Taller words repeat the stripe: three extra interior rows add exactly 2w
// cells and leave the excess unchanged.
inline Word2D diagonal_general(int h, int w) {
  if (h <= kBandMaxHeight) return diagonal_general_small(h, w, max_filled(2, h, w));
  const int extra = 3 * ((h - kBandMaxHeight + 2) / 3);
  const int h0 = h - extra;
  if (h0 < w)
    throw capacity_error("general construction of width " + std::to_string(w) +
                         " and height " + std::to_string(h) +
                         " is unsupported; widths up to " +
                         std::to_string(kBandMaxHeight - 2) +
                         " work at every height");
  const Word2D base = diagonal_general_small(h0, w, max_filled(2, h0, w));
  // Rows kBandRows+1 .. h0-kBandRows of base are pure stripe; splice after
  // row r, where the stripe's period makes the seam invisible.
  const int r = kBandRows + 1;
  Word2D out(h, w);
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= w; ++j) {
      bool f;
      if (i <= r) {
        f = base.filled(i, j);
      } else if (i > r + extra) {
        f = base.filled(i - extra, j);
      } else {
        f = base.filled(r + 1 + (i - r - 1) % 3, j);
      }
      out.set(i, j, f);
    }
  return out;
}

inline std::pair<int, int> normalized(int h, int w) {
  return h >= w ? std::pair{h, w} : std::pair{w, h};
}

inline Word2D orient(Word2D word, int h) {
  return word.height() == h ? word : transform(word, Transform::transpose);
}

inline void check_dims_positive(int h, int w) {
  if (h < 1 || w < 1)
    throw dimension_error("dimensions must be positive, got " +
                          std::to_string(h) + "x" + std::to_string(w));
}

}  // namespace detail

/// Which generator handles (d, h, w).
inline Strategy recipe(int d, int h, int w) {
  check_degree_bound(d);
  detail::check_dims_positive(h, w);
  const auto [hh, ww] = detail::normalized(h, w);
  switch (d) {
    case 0: return Strategy::checkerboard;
    case 1: return Strategy::tile2x6;
    case 2:
      if (ww == 1) return Strategy::column;
      if (ww == 2) return hh == 2 ? Strategy::full : Strategy::w2period4;
      if (ww == 3) return Strategy::w3cycle;
      if (ww == 4) return Strategy::w4blocks;
      if (ww <= 6) return Strategy::smallw_dp;
      return Strategy::diagonal_general;
    case 3:
      return ww <= 2 ? Strategy::full : Strategy::dominating_complement;
    default: return Strategy::full;
  }
}

/// Checkerboard with (1,1) filled.
inline Word2D construct_d0(int h, int w) {
  detail::check_dims_positive(h, w);
  Word2D out(h, w);
  for (int i = 1; i <= h; ++i)
    for (int j = 1; j <= w; ++j) out.set(i, j, (i + j) % 2 == 0);
  detail::certify(out, 0, h, w, max_filled(0, h, w), "d=0 checkerboard");
  return out;
}

/// Powers of the 2 x 6 tile of dominoes, laid along an even side.
inline Word2D construct_d1(int h, int w) {
  detail::check_dims_positive(h, w);
  static const Word2D tile = parse_text("##.##.\n..#..#\n");
  const auto [hh, ww] = detail::normalized(h, w);
  // Rows of the tile run along the longer side unless only the shorter
  // side is even.
  Word2D out = (ww % 2 == 0)
                   ? power(tile, hh, ww)
                   : transform(power(tile, ww, hh), Transform::transpose);
  detail::certify(out, 1, hh, ww, max_filled(1, hh, ww), "d=1 tiling");
  return detail::orient(std::move(out), h);
}

inline Word2D construct_d2(int h, int w, const ConstructOptions& opt = {}) {
  detail::check_dims_positive(h, w);
  const auto [hh, ww] = detail::normalized(h, w);
  const std::int64_t target = max_filled(2, hh, ww);
  std::optional<Word2D> word;
  switch (recipe(2, hh, ww)) {
    case Strategy::column:
    case Strategy::full:
      word = Word2D::full(hh, ww);
      break;
    case Strategy::w2period4: {
      static const Word2D period = parse_text("##\n.#\n##\n#.\n");
      word = power(period, hh, 2);
      break;
    }
    case Strategy::w3cycle: {
      Word2D out(hh, 3, Cell::Filled);
      for (int i = 2; i < hh; ++i) out.set(i, 2, Cell::Empty);
      word = out;
      break;
    }
    case Strategy::w4blocks:
      word = detail::width4_word(hh);
      break;
    case Strategy::smallw_dp: {
      OracleOptions o = opt.oracle;
      o.width_limit = std::max(o.width_limit, ww);
      DegreeProfileDP dp(2, ww, o);
      word = exact_max(dp, hh).witness;
      break;
    }
    default:
      word = detail::diagonal_general(hh, ww);
  }
  detail::certify(*word, 2, hh, ww, target, "d=2 construction");
  return detail::orient(std::move(*word), h);
}

/// Full word minus a minimum dominating set of the inner grid, using a
/// solver whose width is min(h, w) - 2.
inline Word2D construct_d3(int h, int w, GridDominationSolver& solver) {
  detail::check_dims_positive(h, w);
  const auto [hh, ww] = detail::normalized(h, w);
  Word2D out = Word2D::full(hh, ww);
  std::int64_t target = std::int64_t{hh} * ww;
  if (ww > 2) {
    if (solver.width() != ww - 2)
      throw std::invalid_argument("domination solver has the wrong width");
    const DominationWitness dom = solver.witness(hh - 2);
    for (const Pos& p : dom.chosen) out.set(p.i + 1, p.j + 1, Cell::Empty);
    target -= dom.gamma;
  }
  detail::certify(out, 3, hh, ww, target, "d=3 construction");
  return detail::orient(std::move(out), h);
}

inline Word2D construct_d3(int h, int w, const ConstructOptions& opt = {}) {
  detail::check_dims_positive(h, w);
  const int inner = std::min(h, w) - 2;
  if (inner < 1) {
    Word2D out = Word2D::full(h, w);
    detail::certify(out, 3, h, w, max_filled(3, h, w), "d=3 construction");
    return out;
  }
  GridDominationSolver solver(inner, opt.domination);
  return construct_d3(h, w, solver);
}

inline Word2D construct_d4(int h, int w) {
  detail::check_dims_positive(h, w);
  Word2D out = Word2D::full(h, w);
  detail::certify(out, 4, h, w, max_filled(4, h, w), "d=4 construction");
  return out;
}

/// A d-full h x w word. Throws consistency_error if a generator misses.
inline Word2D construct(int d, int h, int w, const ConstructOptions& opt = {}) {
  check_degree_bound(d);
  switch (d) {
    case 0: return construct_d0(h, w);
    case 1: return construct_d1(h, w);
    case 2: return construct_d2(h, w, opt);
    case 3: return construct_d3(h, w, opt);
    default: return construct_d4(h, w);
  }
}

/// True when rows from..height of `w` repeat with period p.
inline bool has_row_period(const Word2D& w, int p, int from = 1) {
  for (int i = from; i + p <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      if (w.filled(i, j) != w.filled(i + p, j)) return false;
  return true;
}

}  // namespace gridword

#endif  // GRIDWORD_CONSTRUCT_HPP_
