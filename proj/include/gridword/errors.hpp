#ifndef GRIDWORD_ERRORS_HPP_
#define GRIDWORD_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gridword {

/// Dimension mismatch or non-positive dimension.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid text that does not parse; line and column are 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A solver was asked for an instance beyond its configured limits.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor produced a word that misses its target; always a bug.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gridword

#endif  // GRIDWORD_ERRORS_HPP_
