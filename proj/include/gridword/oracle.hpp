#ifndef GRIDWORD_ORACLE_HPP_
#define GRIDWORD_ORACLE_HPP_

// Exact maximisation and enumeration over words of bounded degree by a row
// profile dynamic program. A state is the pair (previous row, current row);
// the degree of a cell in the previous-but-one row is final once the current
// row is fixed, so every admissible transition (a, b) -> (b, c) checks the
// full degree of b and nothing else.
//
// Layers store, per state, the deficit to the layer maximum in one byte.
// A state more than `width` below the maximum can never finish optimally:
// leaving the next row empty costs at most one row of cells.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridword/bitrow.hpp"
#include "gridword/errors.hpp"
#include "gridword/word.hpp"

namespace gridword {

struct OracleOptions {
  int width_limit = 8;
  int row_budget = 100000;
  std::size_t memory_limit_bytes = std::size_t{1} << 30;
  std::uint64_t enumeration_cap = 1000000;
};

/// Thrown when an enumeration hits its cap; carries what was found so far.
class partial_result_error : public capacity_error {
 public:
  partial_result_error(const std::string& what, std::uint64_t lower_bound)
      : capacity_error(what), lower_bound_(lower_bound) {}
  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

inline void check_degree_bound(int d) {
  if (d < 0 || d > 4)
    throw std::invalid_argument("degree bound must lie in [0,4], got " +
                                std::to_string(d));
}

/// Row-pair profile DP for a fixed degree bound and width.
class DegreeProfileDP {
 public:
  DegreeProfileDP(int d, int width, OracleOptions opts = {})
      : d_(d), width_(width), opts_(opts) {
    check_degree_bound(d);
    if (width < 1) throw dimension_error("width must be positive");
    if (width > opts.width_limit)
      throw capacity_error("oracle width " + std::to_string(width) +
                           " exceeds limit " +
                           std::to_string(opts.width_limit));
    full_ = (std::uint32_t{1} << width) - 1;
    build_states();
    build_transitions();
    std::vector<std::uint8_t> first(states_.size(), kPruned);
    std::int64_t best = 0;
    for (std::uint32_t b = 0; b <= full_; ++b) {
      const std::int32_t s = index(0, b);
      if (s >= 0) best = std::max<std::int64_t>(best, std::popcount(b));
    }
    for (std::uint32_t b = 0; b <= full_; ++b) {
      const std::int32_t s = index(0, b);
      if (s >= 0) first[s] = static_cast<std::uint8_t>(best - std::popcount(b));
    }
    prune(first);
    layers_.push_back(std::move(first));
    offsets_.push_back(best);
  }

  int degree_bound() const { return d_; }
  int width() const { return width_; }
  std::size_t state_count() const { return states_.size(); }
  std::size_t transition_count() const { return targets_.size(); }
  int rows_computed() const { return static_cast<int>(layers_.size()); }

  void extend_to(int rows) {
    if (rows < 1) throw dimension_error("height must be positive");
    if (rows > opts_.row_budget)
      throw capacity_error("oracle height " + std::to_string(rows) +
                           " exceeds row budget " +
                           std::to_string(opts_.row_budget));
    if (static_cast<std::size_t>(rows) * states_.size() >
        opts_.memory_limit_bytes)
      throw capacity_error("oracle layers exceed the memory limit");
    while (rows_computed() < rows) advance();
  }

  std::int64_t max_value(int rows) {
    extend_to(rows);
    return offsets_[rows - 1];
  }

  /// Optimal rows (bit j-1 = column j), lexicographically smallest as a
  /// sequence of row patterns read from the top.
  std::vector<std::uint32_t> witness_rows(int rows) {
    extend_to(rows);
    std::vector<std::uint32_t> out;
    // Final layer: smallest b (top row), then smallest a.
    std::int32_t cur = -1;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (layers_[rows - 1][s] != 0) continue;
      if (cur < 0 || states_[s].second < states_[cur].second ||
          (states_[s].second == states_[cur].second &&
           states_[s].first < states_[cur].first))
        cur = static_cast<std::int32_t>(s);
    }
    out.push_back(states_[cur].second);
    for (int r = rows; r >= 2; --r) {
      const auto [a, b] = states_[cur];
      out.push_back(a);
      std::int32_t found = -1;
      for (std::uint32_t x = 0; x <= full_ && found < 0; ++x)
        if (is_predecessor(r, x, a, b)) found = index(x, a);
      if (found < 0)
        throw consistency_error("oracle back-tracking lost the optimum");
      cur = found;
    }
    // DP rows were collected last to first, which through the vertical
    // mirror are the physical rows top to bottom.
    return out;
  }

  /// Every optimal word, as rows from the top. Stops with
  /// partial_result_error once `cap` words have been produced.
  void enumerate_optimal(
      int rows, std::uint64_t cap,
      const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    extend_to(rows);
    std::vector<std::uint32_t> path;
    std::uint64_t produced = 0;
    std::function<void(int, std::int32_t)> dfs = [&](int r, std::int32_t s) {
      const auto [a, b] = states_[s];
      if (r == 1) {
        if (++produced > cap)
          throw partial_result_error("enumeration cap reached", produced - 1);
        visit(path);
        return;
      }
      path.push_back(a);
      for (std::uint32_t x = 0; x <= full_; ++x)
        if (is_predecessor(r, x, a, b)) dfs(r - 1, index(x, a));
      path.pop_back();
    };
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (layers_[rows - 1][s] != 0) continue;
      path.assign(1, states_[s].second);
      dfs(rows, static_cast<std::int32_t>(s));
    }
  }

  /// Number of optimal words (saturating at the maximum of uint64).
  std::uint64_t count_optimal(int rows) {
    extend_to(rows);
    // Counts of optimal prefixes per state, rolled forward layer by layer.
    std::vector<std::uint64_t> cnt(states_.size(), 0);
    for (std::size_t s = 0; s < states_.size(); ++s)
      if (states_[s].first == 0 && layers_[0][s] != kPruned) cnt[s] = 1;
    for (int r = 1; r < rows; ++r) {
      std::vector<std::uint64_t> next(states_.size(), 0);
      for (std::size_t s = 0; s < states_.size(); ++s) {
        if (cnt[s] == 0) continue;
        const std::int64_t v = value(r, s);
        for (std::uint32_t k = first_[s]; k < first_[s + 1]; ++k) {
          const std::uint32_t t = targets_[k];
          if (layers_[r][t] == kPruned) continue;
          if (v + std::popcount(states_[t].second) != value(r + 1, t)) continue;
          const std::uint64_t sum = next[t] + cnt[s];
          next[t] = sum < next[t] ? std::numeric_limits<std::uint64_t>::max()
                                  : sum;
        }
      }
      cnt.swap(next);
    }
    std::uint64_t total = 0;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (layers_[rows - 1][s] != 0) continue;
      const std::uint64_t sum = total + cnt[s];
      total = sum < total ? std::numeric_limits<std::uint64_t>::max() : sum;
    }
    return total;
  }

 private:
  static constexpr std::uint8_t kPruned = 255;

  std::int32_t index(std::uint32_t a, std::uint32_t b) const {
    return index_[(static_cast<std::size_t>(a) << width_) | b];
  }

  // Absolute value at DP row r (1-based).
  std::int64_t value(int r, std::size_t s) const {
    return offsets_[r - 1] - layers_[r - 1][s];
  }

  bool is_predecessor(int r, std::uint32_t x, std::uint32_t a,
                      std::uint32_t b) const {
    const std::int32_t p = index(x, a);
    if (p < 0 || layers_[r - 2][p] == kPruned) return false;
    if (bitrow::row_violations(x, a, b, full_, d_) != 0) return false;
    return value(r - 1, p) + std::popcount(b) == value(r, index(a, b));
  }

  void build_states() {
    index_.assign(std::size_t{1} << (2 * width_), -1);
    for (std::uint32_t a = 0; a <= full_; ++a) {
      for (std::uint32_t b = 0; b <= full_; ++b) {
        // b is checked against a alone; a against b alone (its own upper
        // neighbour was checked when a was appended).
        if (bitrow::row_violations(a, b, 0, full_, d_)) continue;
        if (bitrow::row_violations(0, a, b, full_, d_)) continue;
        index_[(static_cast<std::size_t>(a) << width_) | b] =
            static_cast<std::int32_t>(states_.size());
        states_.emplace_back(a, b);
        popcount_b_.push_back(std::popcount(b));
      }
    }
  }

  void build_transitions() {
    first_.assign(states_.size() + 1, 0);
    std::vector<std::uint32_t> buf;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      const auto [a, b] = states_[s];
      // Cells of b that already sit at the bound forbid a filled cell below.
      const std::uint32_t left = (b << 1) & full_;
      const std::uint32_t right = b >> 1;
      const std::uint32_t saturated =
          d_ == 0 ? b
                  : b & static_cast<std::uint32_t>(
                            bitrow::over_limit({left, right, a}, d_ - 1));
      const std::uint32_t allowed = full_ & ~saturated;
      for (std::uint32_t c = allowed;; c = (c - 1) & allowed) {
        const std::int32_t t = index(b, c);
        if (t >= 0) buf.push_back(static_cast<std::uint32_t>(t));
        if (c == 0) break;
      }
      first_[s + 1] = static_cast<std::uint32_t>(buf.size());
      if (buf.size() * sizeof(std::uint32_t) > opts_.memory_limit_bytes)
        throw capacity_error("oracle transition table exceeds memory limit");
    }
    targets_ = std::move(buf);
  }

  void prune(std::vector<std::uint8_t>& layer) const {
    for (auto& v : layer)
      if (v != kPruned && v > width_) v = kPruned;
  }

  void advance() {
    const auto& prev = layers_.back();
    constexpr std::int32_t kNone = std::numeric_limits<std::int32_t>::min();
    std::vector<std::int32_t> gain(states_.size(), kNone);
    for (std::size_t s = 0; s < states_.size(); ++s) {
      if (prev[s] == kPruned) continue;
      const std::int32_t base = -static_cast<std::int32_t>(prev[s]);
      for (std::uint32_t k = first_[s]; k < first_[s + 1]; ++k) {
        const std::uint32_t t = targets_[k];
        const std::int32_t v = base + popcount_b_[t];
        if (v > gain[t]) gain[t] = v;
      }
    }
    std::int32_t best = kNone;
    for (std::int32_t v : gain) best = std::max(best, v);
    std::vector<std::uint8_t> layer(states_.size(), kPruned);
    for (std::size_t s = 0; s < states_.size(); ++s)
      if (gain[s] != kNone && best - gain[s] <= width_)
        layer[s] = static_cast<std::uint8_t>(best - gain[s]);
    offsets_.push_back(offsets_.back() + best);
    layers_.push_back(std::move(layer));
  }

  int d_;
  int width_;
  OracleOptions opts_;
  std::uint32_t full_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> states_;
  std::vector<std::int32_t> index_;
  std::vector<std::uint32_t> first_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::int32_t> popcount_b_;
  std::vector<std::vector<std::uint8_t>> layers_;
  std::vector<std::int64_t> offsets_;
};


/// Builds a word from row masks (bit j-1 = column j).
inline Word2D word_from_rows(const std::vector<std::uint32_t>& rows,
                             int width) {
  Word2D out(static_cast<int>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < width; ++j)
      if ((rows[i] >> j) & 1u) out.set(static_cast<int>(i) + 1, j + 1, true);
  return out;
}

struct ExactMax {
  std::int64_t value = 0;
  Word2D witness{1, 1};
};

/// Maximum and witness of `rows` x dp.width() from an existing DP.
inline ExactMax exact_max(DegreeProfileDP& dp, int rows) {
  ExactMax r{dp.max_value(rows), word_from_rows(dp.witness_rows(rows),
                                                dp.width())};
  if (!is_degree_bounded(r.witness, dp.degree_bound()) ||
      filled_count(r.witness) != r.value)
    throw consistency_error("oracle witness fails its own certificate");
  return r;
}

/// Exact maximum over h x w words of degree at most d, with a witness in
/// the caller's orientation. The profile runs over the smaller side.
inline ExactMax exact_max(int d, int h, int w, OracleOptions opts = {}) {
  check_degree_bound(d);
  if (h < 1 || w < 1) throw dimension_error("dimensions must be positive");
  const bool flip = w > h;
  DegreeProfileDP dp(d, flip ? h : w, opts);
  ExactMax r = exact_max(dp, flip ? w : h);
  if (flip) r.witness = transform(r.witness, Transform::transpose);
  return r;
}

/// Plain backtracking over all 2^(hw) words; an independent cross-check.
inline std::int64_t exact_max_bruteforce(int d, int h, int w) {
  check_degree_bound(d);
  if (h < 1 || w < 1) throw dimension_error("dimensions must be positive");
  if (h * w > 25)
    throw capacity_error("brute force is limited to 25 cells");
  const int n = h * w;
  std::vector<int> deg(n, 0);
  std::vector<char> on(n, 0);
  std::int64_t best = 0;
  std::function<void(int, std::int64_t)> go = [&](int k, std::int64_t count) {
    if (count + (n - k) <= best) return;
    if (k == n) {
      best = count;
      return;
    }
    const int i = k / w, j = k % w;
    const int up = i > 0 && on[k - w] ? k - w : -1;
    const int left = j > 0 && on[k - 1] ? k - 1 : -1;
    const bool can = (up < 0 || deg[up] < d) && (left < 0 || deg[left] < d) &&
                     (up >= 0) + (left >= 0) <= d;
    if (can) {
      on[k] = 1;
      deg[k] = (up >= 0) + (left >= 0);
      if (up >= 0) ++deg[up];
      if (left >= 0) ++deg[left];
      go(k + 1, count + 1);
      if (up >= 0) --deg[up];
      if (left >= 0) --deg[left];
      on[k] = 0;
      deg[k] = 0;
    }
    go(k + 1, count);
  };
  go(0, 0);
  return best;
}

/// Lexicographically smallest text render over the symmetries of the
/// rectangle (8 for squares, 4 otherwise).
inline std::string canonical_form(const Word2D& w) {
  std::string best;
  const bool square = w.height() == w.width();
  auto consider = [&](Transform t) {
    std::string s = render_text(transform(w, t));
    if (best.empty() || s < best) best = std::move(s);
  };
  if (square)
    for (Transform t : kAllTransforms) consider(t);
  else
    for (Transform t : kRectTransforms) consider(t);
  return best;
}

/// Number of d-full h x w words, optionally counted up to symmetry.
inline std::uint64_t count_maximal(int d, int h, int w, bool up_to_symmetry,
                                   OracleOptions opts = {}) {
  check_degree_bound(d);
  if (h < 1 || w < 1) throw dimension_error("dimensions must be positive");
  const bool flip = w > h;
  const int width = flip ? h : w, rows = flip ? w : h;
  DegreeProfileDP dp(d, width, opts);
  if (!up_to_symmetry) return dp.count_optimal(rows);
  // Orbits do not depend on orientation, so the DP's own is used.
  std::set<std::string> orbits;
  try {
    dp.enumerate_optimal(rows, opts.enumeration_cap,
                         [&](const std::vector<std::uint32_t>& r) {
                           orbits.insert(
                               canonical_form(word_from_rows(r, width)));
                         });
  } catch (const partial_result_error&) {
    throw partial_result_error(
        "enumeration cap reached after " + std::to_string(orbits.size()) +
            " orbits",
        orbits.size());
  }
  return orbits.size();
}

}  // namespace gridword

#endif  // GRIDWORD_ORACLE_HPP_
