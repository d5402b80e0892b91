#ifndef GRIDWORD_DOMINATION_HPP_
#define GRIDWORD_DOMINATION_HPP_

// Exact minimum dominating sets of grid graphs G_{h,w} by a broken-profile
// dynamic program over ternary row states.
//
// A profile holds one status per column: Chosen, Dominated (not chosen) or
// Open (not chosen and not yet dominated). Cells are added one at a time in
// row-major order; an Open cell must be covered by the cell placed directly
// below it. Layers at row boundaries store costs relative to the layer
// minimum in one byte, since any state more than `width` above the minimum
// can never be part of an optimal solution.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridword/errors.hpp"
#include "gridword/word.hpp"

namespace gridword {

struct DominationOptions {
  int profile_limit = 14;
  std::size_t memory_limit_bytes = std::size_t{1} << 30;
};

struct DominationWitness {
  int h = 0;
  int w = 0;
  std::vector<Pos> chosen;  // row-major
  int gamma = 0;
};

inline bool is_dominating(int h, int w, std::span<const Pos> chosen) {
  if (h < 1 || w < 1) throw dimension_error("grid dimensions must be positive");
  std::vector<char> covered(static_cast<std::size_t>(h) * w, 0);
  auto mark = [&](int i, int j) {
    if (i >= 1 && i <= h && j >= 1 && j <= w)
      covered[static_cast<std::size_t>(i - 1) * w + (j - 1)] = 1;
  };
  for (const Pos& p : chosen) {
    if (p.i < 1 || p.i > h || p.j < 1 || p.j > w)
      throw std::out_of_range("vertex (" + std::to_string(p.i) + "," +
                              std::to_string(p.j) + ") outside grid");
    mark(p.i, p.j);
    mark(p.i - 1, p.j);
    mark(p.i + 1, p.j);
    mark(p.i, p.j - 1);
    mark(p.i, p.j + 1);
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
}

/// Profile DP for grids of a fixed width. Rows may be extended on demand, so
/// one solver answers gamma and witnesses for every height up to the
/// deepest row computed.
class GridDominationSolver {
 public:
  enum Status : std::uint8_t { kChosen = 0, kDominated = 1, kOpen = 2 };

  explicit GridDominationSolver(int width, DominationOptions opts = {})
      : width_(width), opts_(opts) {
    if (width < 1) throw dimension_error("grid width must be positive");
    if (width > opts.profile_limit)
      throw capacity_error("domination profile width " + std::to_string(width) +
                           " exceeds limit " +
                           std::to_string(opts.profile_limit));
    pow3_.assign(width + 1, 1);
    for (int k = 1; k <= width; ++k) pow3_[k] = pow3_[k - 1] * 3;
    states_ = pow3_[width];
    has_open_.assign(states_, 0);
    for (std::size_t s = 0; s < states_; ++s)
      has_open_[s] = (s % 3 == kOpen) || (s >= 3 && has_open_[s / 3]);

    std::vector<std::uint8_t> first(states_, kInf);
    std::size_t all_dominated = 0;
    for (int k = 0; k < width; ++k) all_dominated += kDominated * pow3_[k];
    first[all_dominated] = 0;
    layers_.push_back(std::move(first));
    offsets_.push_back(0);
  }

  int width() const { return width_; }
  int rows_computed() const { return static_cast<int>(layers_.size()) - 1; }

  void extend_to(int rows) {
    if (rows < 1) throw dimension_error("grid height must be positive");
    const std::size_t need = static_cast<std::size_t>(rows + 1) * states_;
    if (need > opts_.memory_limit_bytes)
      throw capacity_error("domination DP for " + std::to_string(rows) + "x" +
                           std::to_string(width_) +
                           " exceeds the memory limit");
    while (rows_computed() < rows) advance();
  }

  int gamma(int rows) {
    extend_to(rows);
    const auto& layer = layers_[rows];
    int best = kInf;
    for (std::size_t s = 0; s < states_; ++s)
      if (!has_open_[s]) best = std::min<int>(best, layer[s]);
    return offsets_[rows] + best;
  }

  /// Minimum dominating set of the rows x width grid, lexicographically
  /// smallest in row-major order among all minimum ones.
  DominationWitness witness(int rows) {
    const int g = gamma(rows);
    // Layer r of the DP is read as physical row rows + 1 - r, so rebuilding
    // from the last layer emits physical rows top to bottom and a greedy
    // choice per row yields the lexicographic minimum.
    std::vector<std::size_t> frontier;
    for (std::size_t s = 0; s < states_; ++s)
      if (!has_open_[s] && absolute(rows, s) == g) frontier.push_back(s);

    DominationWitness out;
    out.h = rows;
    out.w = width_;
    out.gamma = g;
    for (int r = rows; r >= 1; --r) {
      const std::uint32_t best = best_mask(frontier);
      std::vector<std::size_t> kept;
      for (std::size_t s : frontier)
        if (chosen_mask(s) == best) kept.push_back(s);
      const int physical_row = rows + 1 - r;
      for (int k = 0; k < width_; ++k)
        if (best >> k & 1u) out.chosen.push_back({physical_row, k + 1});

      std::set<std::size_t> prev;
      for (std::size_t s : kept) collect_predecessors(r, s, prev);
      frontier.assign(prev.begin(), prev.end());
      if (frontier.empty())
        throw consistency_error("domination back-tracking lost the optimum");
    }
    if (!is_dominating(rows, width_, out.chosen) ||
        static_cast<int>(out.chosen.size()) != g)
      throw consistency_error("domination witness failed verification");
    return out;
  }

 private:
  static constexpr std::uint8_t kInf = 255;

  int digit(std::size_t s, int k) const {
    return static_cast<int>(s / pow3_[k] % 3);
  }

  std::uint32_t chosen_mask(std::size_t s) const {
    std::uint32_t m = 0;
    for (int k = 0; k < width_; ++k, s /= 3)
      if (s % 3 == kChosen) m |= 1u << k;
    return m;
  }

  int absolute(int r, std::size_t s) const {
    const std::uint8_t v = layers_[r][s];
    return v == kInf ? std::numeric_limits<int>::max() : offsets_[r] + v;
  }

  // Lower column index chosen wins at the first difference.
  std::uint32_t best_mask(const std::vector<std::size_t>& states) const {
    std::uint32_t best = 0;
    bool first = true;
    for (std::size_t s : states) {
      const std::uint32_t m = chosen_mask(s);
      if (first) {
        best = m;
        first = false;
        continue;
      }
      const std::uint32_t diff = m ^ best;
      if (diff != 0 && (m & (diff & (~diff + 1u)))) best = m;
    }
    return best;
  }

  // Places a full row with the given chosen mask on top of state `prev`.
  // Returns states_ when the placement leaves an Open cell uncovered.
  std::size_t apply_row(std::size_t prev, std::uint32_t mask) const {
    std::size_t next = 0;
    for (int k = 0; k < width_; ++k) {
      const int above = digit(prev, k);
      const bool here = mask >> k & 1u;
      int st;
      if (here) {
        st = kChosen;
      } else {
        if (above == kOpen) return states_;
        const bool left = k > 0 && (mask >> (k - 1) & 1u);
        const bool right = k + 1 < width_ && (mask >> (k + 1) & 1u);
        st = (above == kChosen || left || right) ? kDominated : kOpen;
      }
      next += static_cast<std::size_t>(st) * pow3_[k];
    }
    return next;
  }

  void collect_predecessors(int r, std::size_t s,
                            std::set<std::size_t>& out) const {
    const std::uint32_t mask = chosen_mask(s);
    const int cost = std::popcount(mask);
    const int target = absolute(r, s);
    // Candidate statuses of the row above, column by column.
    std::vector<std::vector<int>> options(width_);
    for (int k = 0; k < width_; ++k) {
      const int st = digit(s, k);
      const bool horiz = (k > 0 && (mask >> (k - 1) & 1u)) ||
                         (k + 1 < width_ && (mask >> (k + 1) & 1u));
      if (st == kChosen)
        options[k] = {kChosen, kDominated, kOpen};
      else if (st == kOpen)
        options[k] = {kDominated};
      else if (horiz)
        options[k] = {kChosen, kDominated};
      else
        options[k] = {kChosen};
    }
    std::vector<std::size_t> partial{0};
    for (int k = 0; k < width_; ++k) {
      std::vector<std::size_t> grown;
      grown.reserve(partial.size() * options[k].size());
      for (std::size_t p : partial)
        for (int o : options[k])
          grown.push_back(p + static_cast<std::size_t>(o) * pow3_[k]);
      partial.swap(grown);
    }
    for (std::size_t p : partial) {
      const int base = absolute(r - 1, p);
      if (base == std::numeric_limits<int>::max()) continue;
      if (base + cost != target) continue;
      if (apply_row(p, mask) != s) continue;
      out.insert(p);
    }
  }

  void advance() {
    const auto& prev = layers_.back();
    std::vector<std::uint8_t> cur(prev);
    std::vector<std::uint8_t> nxt(states_);
    for (int k = 0; k < width_; ++k) {
      std::fill(nxt.begin(), nxt.end(), kInf);
      step_cell(k, cur, nxt);
      cur.swap(nxt);
    }
    std::uint8_t lo = kInf;
    for (std::uint8_t v : cur) lo = std::min(lo, v);
    if (lo == kInf) throw consistency_error("domination DP has no live state");
    for (auto& v : cur) {
      if (v == kInf) continue;
      v = static_cast<std::uint8_t>(v - lo);
      if (v > width_) v = kInf;
    }
    offsets_.push_back(offsets_.back() + lo);
    layers_.push_back(std::move(cur));
  }

  static void relax(std::uint8_t& slot, std::uint8_t v) {
    if (v < slot) slot = v;
  }

  // Adds cell k of the next row. Digit k holds the status of the cell above,
  // digit k-1 the status of the new left neighbour.
  void step_cell(int k, const std::vector<std::uint8_t>& src,
                 std::vector<std::uint8_t>& dst) const {
    const std::size_t pk = pow3_[k];
    if (k == 0) {
      for (std::size_t hi = 0; hi < states_ / 3; ++hi) {
        const std::size_t base = hi * 3;
        for (int a = 0; a < 3; ++a) {
          const std::uint8_t v = src[base + a];
          if (v == kInf) continue;
          relax(dst[base + kChosen], static_cast<std::uint8_t>(v + 1));
          if (a != kOpen)
            relax(dst[base + (a == kChosen ? kDominated : kOpen)], v);
        }
      }
      return;
    }
    const std::size_t pl = pow3_[k - 1];
    const std::size_t block = pk * 3;
    for (std::size_t hi = 0; hi < states_; hi += block) {
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const std::size_t from = hi + a * pk + b * pl;
          // choose the cell: it becomes Chosen and covers an Open left cell
          const int b_chosen = (b == kOpen) ? kDominated : b;
          const std::size_t to_chosen = hi + kChosen * pk + b_chosen * pl;
          const std::uint8_t* s = src.data() + from;
          std::uint8_t* d1 = dst.data() + to_chosen;
          for (std::size_t lo = 0; lo < pl; ++lo)
            if (s[lo] != kInf) relax(d1[lo], static_cast<std::uint8_t>(s[lo] + 1));
          if (a == kOpen) continue;
          const int st = (a == kChosen || b == kChosen) ? kDominated : kOpen;
          std::uint8_t* d0 = dst.data() + hi + st * pk + b * pl;
          for (std::size_t lo = 0; lo < pl; ++lo) relax(d0[lo], s[lo]);
        }
      }
    }
  }

  int width_;
  DominationOptions opts_;
  std::vector<std::size_t> pow3_;
  std::size_t states_ = 0;
  std::vector<std::uint8_t> has_open_;
  std::vector<std::vector<std::uint8_t>> layers_;
  std::vector<int> offsets_;
};

/// Witness for the h x w grid in the caller's orientation. The profile runs
/// over the smaller dimension.
inline DominationWitness min_dominating_set(int h, int w,
                                            DominationOptions opts = {}) {
  if (h < 1 || w < 1) throw dimension_error("grid dimensions must be positive");
  const bool swapped = w > h;
  GridDominationSolver solver(swapped ? h : w, opts);
  DominationWitness wit = solver.witness(swapped ? w : h);
  if (swapped) {
    for (Pos& p : wit.chosen) std::swap(p.i, p.j);
    std::sort(wit.chosen.begin(), wit.chosen.end());
    wit.h = h;
    wit.w = w;
  }
  return wit;
}

inline int gamma(int h, int w, DominationOptions opts = {}) {
  if (h < 1 || w < 1) throw dimension_error("grid dimensions must be positive");
  GridDominationSolver solver(std::min(h, w), opts);
  return solver.gamma(std::max(h, w));
}

}  // namespace gridword

#endif  // GRIDWORD_DOMINATION_HPP_
