#ifndef GRIDWORD_RENDER_HPP_
#define GRIDWORD_RENDER_HPP_

// Static renderings: SVG with 16px cells and TikZ unit squares.

#include <sstream>
#include <string>

#include "gridword/word.hpp"

namespace gridword {

inline constexpr int kSvgCell = 16;

inline std::string render_svg(const Word2D& w) {
  const int width = w.width() * kSvgCell, height = w.height() * kSvgCell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 1
     << "\" height=\"" << height + 1 << "\" viewBox=\"-0.5 -0.5 "
     << width + 1 << " " << height + 1 << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n";
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      if (w.filled(i, j))
        os << "<rect x=\"" << (j - 1) * kSvgCell << "\" y=\""
           << (i - 1) * kSvgCell << "\" width=\"" << kSvgCell
           << "\" height=\"" << kSvgCell << "\" fill=\"#333333\"/>\n";
  os << "<g stroke=\"#999999\" stroke-width=\"1\">\n";
  for (int i = 0; i <= w.height(); ++i)
    os << "<line x1=\"0\" y1=\"" << i * kSvgCell << "\" x2=\"" << width
       << "\" y2=\"" << i * kSvgCell << "\"/>\n";
  for (int j = 0; j <= w.width(); ++j)
    os << "<line x1=\"" << j * kSvgCell << "\" y1=\"0\" x2=\"" << j * kSvgCell
       << "\" y2=\"" << height << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

/// Row 1 is drawn on top, so y runs from h down to 0.
inline std::string render_tikz(const Word2D& w) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.4]\n";
  for (int i = 1; i <= w.height(); ++i)
    for (int j = 1; j <= w.width(); ++j)
      if (w.filled(i, j))
        os << "  \\fill[black!80] (" << j - 1 << "," << w.height() - i
           << ") rectangle (" << j << "," << w.height() - i + 1 << ");\n";
  os << "  \\draw[gray, very thin] (0,0) grid (" << w.width() << ","
     << w.height() << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace gridword

#endif  // GRIDWORD_RENDER_HPP_
