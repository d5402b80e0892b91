#ifndef GRIDWORD_WORD_HPP_
#define GRIDWORD_WORD_HPP_

// Two-dimensional binary words over {Empty, Filled}: storage, the word
// algebra (concatenation, powers, factors, dihedral transforms), degree
// computations, exact excess and the '#'/'.' text format.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridword/errors.hpp"

namespace gridword {

enum class Cell : std::uint8_t { Empty = 0, Filled = 1 };

/// A 1-based cell coordinate (row i from the top, column j from the left).
struct Pos {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const Pos&, const Pos&) = default;
};

/// Exact value k/3.
class Third {
 public:
  constexpr Third() = default;
  static constexpr Third from_numerator(std::int64_t k) { return Third(k); }
  static constexpr Third integer(std::int64_t n) { return Third(3 * n); }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr bool is_integer() const { return num_ % 3 == 0; }

  constexpr Third operator+(Third o) const { return Third(num_ + o.num_); }
  constexpr Third operator-(Third o) const { return Third(num_ - o.num_); }
  constexpr Third operator-() const { return Third(-num_); }
  constexpr Third& operator+=(Third o) {
    num_ += o.num_;
    return *this;
  }
  friend constexpr auto operator<=>(Third, Third) = default;

  /// "k/3" in lowest terms; integers print without a denominator.
  std::string str() const {
    if (is_integer()) return std::to_string(num_ / 3);
    return std::to_string(num_) + "/3";
  }
  friend std::ostream& operator<<(std::ostream& os, Third t) {
    return os << t.str();
  }

 private:
  constexpr explicit Third(std::int64_t k) : num_(k) {}
  std::int64_t num_ = 0;
};

enum class Transform {
  identity,
  transpose,
  flip_h,  // mirror left/right
  flip_v,  // mirror top/bottom
  rot90,   // clockwise
  rot180,
  rot270,
  anti_transpose,
};

inline constexpr Transform kAllTransforms[] = {
    Transform::identity, Transform::transpose, Transform::flip_h,
    Transform::flip_v,   Transform::rot90,     Transform::rot180,
    Transform::rot270,   Transform::anti_transpose};

/// Transforms that map an h x w rectangle onto itself when h != w.
inline constexpr Transform kRectTransforms[] = {
    Transform::identity, Transform::flip_h, Transform::flip_v,
    Transform::rot180};

/// Matrix of ø-degrees; 0 at empty cells.
class DegreeWord {
 public:
  DegreeWord(int height, int width, std::vector<std::uint8_t> values)
      : height_(height), width_(width), values_(std::move(values)) {}

  int height() const { return height_; }
  int width() const { return width_; }
  int at(int i, int j) const {
    return values_[static_cast<std::size_t>(i - 1) * width_ + (j - 1)];
  }
  std::span<const std::uint8_t> values() const { return values_; }
  friend bool operator==(const DegreeWord&, const DegreeWord&) = default;

 private:
  int height_;
  int width_;
  std::vector<std::uint8_t> values_;
};

class Word2D {
 public:
  Word2D(int height, int width, Cell fill = Cell::Empty)
      : height_(height), width_(width) {
    if (height < 1 || width < 1)
      throw dimension_error("word dimensions must be positive, got " +
                            std::to_string(height) + "x" +
                            std::to_string(width));
    cells_.assign(static_cast<std::size_t>(height) * width, fill);
  }

  Word2D(int height, int width, std::vector<Cell> cells)
      : Word2D(height, width) {
    if (cells.size() != cells_.size())
      throw dimension_error("cell count does not match dimensions");
    cells_ = std::move(cells);
  }

  static Word2D full(int height, int width) {
    return Word2D(height, width, Cell::Filled);
  }

  int height() const { return height_; }
  int width() const { return width_; }
  std::span<const Cell> cells() const { return cells_; }

  Cell at(int i, int j) const { return cells_[index(i, j)]; }
  bool filled(int i, int j) const { return at(i, j) == Cell::Filled; }

  /// Like filled() but treats out-of-range coordinates as empty.
  bool filled_or_outside(int i, int j) const {
    return i >= 1 && i <= height_ && j >= 1 && j <= width_ && filled(i, j);
  }

  void set(int i, int j, Cell c) { cells_[index(i, j)] = c; }
  void set(int i, int j, bool filled) {
    set(i, j, filled ? Cell::Filled : Cell::Empty);
  }

  /// Row i as a bit mask, bit j-1 set when (i,j) is filled. Requires w <= 64.
  std::uint64_t row_mask(int i) const {
    std::uint64_t m = 0;
    for (int j = 1; j <= width_; ++j)
      if (filled(i, j)) m |= std::uint64_t{1} << (j - 1);
    return m;
  }

  friend bool operator==(const Word2D&, const Word2D&) = default;

 private:
  std::size_t index(int i, int j) const {
    if (i < 1 || i > height_ || j < 1 || j > width_)
      throw std::out_of_range("cell (" + std::to_string(i) + "," +
                              std::to_string(j) + ") outside " +
                              std::to_string(height_) + "x" +
                              std::to_string(width_) + " word");
    return static_cast<std::size_t>(i - 1) * width_ + (j - 1);
  }

  int height_;
  int width_;
  std::vector<Cell> cells_;
};

// ---------------------------------------------------------------------------
// Counting and degrees

inline std::int64_t filled_count(const Word2D& w) {
  return std::count(w.cells().begin(), w.cells().end(), Cell::Filled);
}

/// Number of grid neighbors of (i,j) inside an h x w rectangle.
inline int neighbor_cap(int h, int w, int i, int j) {
  return (i > 1) + (i < h) + (j > 1) + (j < w);
}

inline int degree_at(const Word2D& w, int i, int j) {
  if (!w.filled(i, j)) return 0;
  return w.filled_or_outside(i - 1, j) + w.filled_or_outside(i + 1, j) +
         w.filled_or_outside(i, j - 1) + w.filled_or_outside(i, j + 1);
}

inline DegreeWord degree_word(const Word2D& w) {
  std::vector<std::uint8_t> v;
  v.reserve(static_cast<std::size_t>(w.height()) * w.width());
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      v.push_back(static_cast<std::uint8_t>(degree_at(w, i, j)));
  return DegreeWord(w.height(), w.width(), std::move(v));
}

inline int max_degree(const Word2D& w) {
  int best = 0;
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      best = std::max(best, degree_at(w, i, j));
  return best;
}

inline bool is_degree_bounded(const Word2D& w, int d) {
  return max_degree(w) <= d;
}

inline Third excess(const Word2D& w) {
  return Third::from_numerator(3 * filled_count(w) -
                               2 * std::int64_t{w.height()} * w.width());
}

inline std::vector<int> row_distribution(const Word2D& w) {
  std::vector<int> out;
  out.reserve(w.height());
  for (int i = 1; i <= w.height(); ++i) {
    int n = 0;
    for (int j = 1; j <= w.width(); ++j) n += w.filled(i, j);
    out.push_back(n);
  }
  return out;
}

inline std::vector<Pos> boundary_cells(const Word2D& w) {
  std::vector<Pos> out;
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      if (i == 1 || i == w.height() || j == 1 || j == w.width())
        out.push_back({i, j});
  return out;
}

// ---------------------------------------------------------------------------
// Word algebra

inline Word2D hconcat(const Word2D& u, const Word2D& v) {
  if (u.height() != v.height())
    throw dimension_error("hconcat needs equal heights, got " +
                          std::to_string(u.height()) + " and " +
                          std::to_string(v.height()));
  Word2D out(u.height(), u.width() + v.width());
  for (int i = 1; i <= u.height(); ++i) {
    for (int j = 1; j <= u.width(); ++j) out.set(i, j, u.at(i, j));
    for (int j = 1; j <= v.width(); ++j) out.set(i, u.width() + j, v.at(i, j));
  }
  return out;
}

inline Word2D vconcat(const Word2D& u, const Word2D& v) {
  if (u.width() != v.width())
    throw dimension_error("vconcat needs equal widths, got " +
                          std::to_string(u.width()) + " and " +
                          std::to_string(v.width()));
  Word2D out(u.height() + v.height(), u.width());
  for (int j = 1; j <= u.width(); ++j) {
    for (int i = 1; i <= u.height(); ++i) out.set(i, j, u.at(i, j));
    for (int i = 1; i <= v.height(); ++i) out.set(u.height() + i, j, v.at(i, j));
  }
  return out;
}

/// Periodic extension (or truncation) of w to rows x cols, anchored at the
/// top-left corner.
inline Word2D power(const Word2D& w, int rows, int cols) {
  Word2D out(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      out.set(i, j, w.at((i - 1) % w.height() + 1, (j - 1) % w.width() + 1));
  return out;
}

/// Rows i1..i2 inclusive.
inline Word2D rows_factor(const Word2D& w, int i1, int i2) {
  if (i1 < 1 || i2 < i1 || i2 > w.height())
    throw std::out_of_range("row range [" + std::to_string(i1) + "," +
                            std::to_string(i2) + "] invalid for height " +
                            std::to_string(w.height()));
  Word2D out(i2 - i1 + 1, w.width());
  for (int i = i1; i <= i2; ++i)
    for (int j = 1; j <= w.width(); ++j) out.set(i - i1 + 1, j, w.at(i, j));
  return out;
}

/// Columns j1..j2 inclusive.
inline Word2D cols_factor(const Word2D& w, int j1, int j2) {
  if (j1 < 1 || j2 < j1 || j2 > w.width())
    throw std::out_of_range("column range [" + std::to_string(j1) + "," +
                            std::to_string(j2) + "] invalid for width " +
                            std::to_string(w.width()));
  Word2D out(w.height(), j2 - j1 + 1);
  for (int i = 1; i <= w.height(); ++i)
    for (int j = j1; j <= j2; ++j) out.set(i, j - j1 + 1, w.at(i, j));
  return out;
}

inline Word2D transform(const Word2D& w, Transform t) {
  const int h = w.height();
  const int n = w.width();
  const bool swaps = t == Transform::transpose || t == Transform::rot90 ||
                     t == Transform::rot270 || t == Transform::anti_transpose;
  Word2D out(swaps ? n : h, swaps ? h : n);
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= n; ++j) {
      int r = i, c = j;
      switch (t) {
        case Transform::identity: break;
        case Transform::transpose: r = j; c = i; break;
        case Transform::flip_h: c = n + 1 - j; break;
        case Transform::flip_v: r = h + 1 - i; break;
        case Transform::rot90: r = j; c = h + 1 - i; break;
        case Transform::rot180: r = h + 1 - i; c = n + 1 - j; break;
        case Transform::rot270: r = n + 1 - j; c = i; break;
        case Transform::anti_transpose: r = n + 1 - j; c = h + 1 - i; break;
      }
      out.set(r, c, w.at(i, j));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Induced subgraph structure

enum class ComponentShape { path, cycle, other };

struct Component {
  std::vector<Pos> cells;  // row-major order
  ComponentShape shape = ComponentShape::other;
};

inline std::vector<Component> induced_components(const Word2D& w) {
  const int h = w.height(), n = w.width();
  std::vector<int> label(static_cast<std::size_t>(h) * n, -1);
  auto idx = [n](int i, int j) { return static_cast<std::size_t>(i - 1) * n + (j - 1); };
  std::vector<Component> comps;
  constexpr int di[] = {-1, 1, 0, 0};
  constexpr int dj[] = {0, 0, -1, 1};
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!w.filled(i, j) || label[idx(i, j)] >= 0) continue;
      const int id = static_cast<int>(comps.size());
      Component comp;
      std::vector<Pos> stack{{i, j}};
      label[idx(i, j)] = id;
      std::int64_t degree_sum = 0;
      int ends = 0, branch = 0;
      while (!stack.empty()) {
        Pos p = stack.back();
        stack.pop_back();
        comp.cells.push_back(p);
        int deg = 0;
        for (int k = 0; k < 4; ++k) {
          int a = p.i + di[k], b = p.j + dj[k];
          if (!w.filled_or_outside(a, b)) continue;
          ++deg;
          if (label[idx(a, b)] < 0) {
            label[idx(a, b)] = id;
            stack.push_back({a, b});
          }
        }
        degree_sum += deg;
        if (deg == 1) ++ends;
        if (deg >= 3) ++branch;
      }
      std::sort(comp.cells.begin(), comp.cells.end());
      const auto vertices = static_cast<std::int64_t>(comp.cells.size());
      const std::int64_t edges = degree_sum / 2;
      if (branch == 0 && edges == vertices - 1 && ends <= 2)
        comp.shape = ComponentShape::path;
      else if (branch == 0 && ends == 0 && edges == vertices)
        comp.shape = ComponentShape::cycle;
      else
        comp.shape = ComponentShape::other;
      comps.push_back(std::move(comp));
    }
  }
  return comps;
}

inline bool is_linear_forest(const Word2D& w) {
  for (const auto& c : induced_components(w))
    if (c.shape != ComponentShape::path) return false;
  return true;
}

inline bool is_snake(const Word2D& w) {
  auto comps = induced_components(w);
  return comps.size() == 1 && comps.front().shape == ComponentShape::path;
}

// ---------------------------------------------------------------------------
// Text format: '#' filled, '.' empty, one row per line.

inline std::string render_text(const Word2D& w) {
  std::string s;
  s.reserve(static_cast<std::size_t>(w.height()) * (w.width() + 1));
  for (int i = 1; i <= w.height(); ++i) {
    for (int j = 1; j <= w.width(); ++j) s += w.filled(i, j) ? '#' : '.';
    s += '\n';
  }
  return s;
}

inline std::vector<std::string> render_rows(const Word2D& w) {
  std::vector<std::string> rows;
  for (int i = 1; i <= w.height(); ++i) {
    std::string r;
    for (int j = 1; j <= w.width(); ++j) r += w.filled(i, j) ? '#' : '.';
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Word2D parse_text(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view line = s.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  // A single trailing newline is allowed.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front().empty())
    throw parse_error("empty grid", 1, 1);

  const std::size_t width = lines.front().size();
  std::vector<Cell> cells;
  cells.reserve(lines.size() * width);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width)
      throw parse_error("ragged row: expected " + std::to_string(width) +
                            " cells, got " + std::to_string(lines[r].size()),
                        r + 1, std::min(lines[r].size(), width) + 1);
    for (std::size_t c = 0; c < width; ++c) {
      char ch = lines[r][c];
      if (ch == '#')
        cells.push_back(Cell::Filled);
      else if (ch == '.')
        cells.push_back(Cell::Empty);
      else
        throw parse_error(std::string("illegal character '") + ch + "'",
                          r + 1, c + 1);
    }
  }
  return Word2D(static_cast<int>(lines.size()), static_cast<int>(width),
                std::move(cells));
}

inline std::ostream& operator<<(std::ostream& os, const Word2D& w) {
  return os << render_text(w);
}

}  // namespace gridword

#endif  // GRIDWORD_WORD_HPP_
