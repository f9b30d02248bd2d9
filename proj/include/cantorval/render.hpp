#ifndef CANTORVAL_RENDER_HPP
#define CANTORVAL_RENDER_HPP

/// \file
/// Depth-stack pictures of C_n - C_n: one row per depth, parts as filled
/// bars. Geometry stays exact until the final mapping to pixels or cells.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cantorval/interval.hpp"

namespace cantorval {

struct RenderRow {
  std::size_t depth = 0;
  IntervalUnion parts;
  std::vector<OpenInterval> highlighted;  // drawn over the row, e.g. persistent gaps
};

struct SvgStyle {
  int width = 960;
  int row_height = 18;
  int row_gap = 6;
  int margin = 40;
  const char* part_fill = "#1f4e79";
  const char* highlight_fill = "#d62728";
};

namespace detail {
inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}
}  // namespace detail

/// Rows over the window [lo, hi].
inline std::string render_svg(const std::vector<RenderRow>& rows, const ClosedInterval& window,
                              const SvgStyle& style = {}) {
  const Rational span = window.length();
  if (sgn(span) <= 0) throw DomainError("render window must have positive length");
  const int plot_width = style.width - 2 * style.margin;
  auto px = [&](const Rational& x) { return style.margin + to_double((x - window.lo) / span) * plot_width; };
  const int height = 2 * style.margin + static_cast<int>(rows.size()) * (style.row_height + style.row_gap);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << style.width << ' ' << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int y = style.margin + static_cast<int>(i) * (style.row_height + style.row_gap);
    out << "<g data-depth=\"" << rows[i].depth << "\">\n";
    out << "<text x=\"" << style.margin - 6 << "\" y=\"" << y + style.row_height - 4
        << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << rows[i].depth << "</text>\n";
    for (const auto& p : rows[i].parts.parts()) {
      const double x0 = px(p.lo);
      // Degenerate parts still get a hairline.
      const double w = std::max(px(p.hi) - x0, 0.5);
      out << "<rect x=\"" << detail::fmt(x0) << "\" y=\"" << y << "\" width=\"" << detail::fmt(w) << "\" height=\""
          << style.row_height << "\" fill=\"" << style.part_fill << "\"><title>[" << to_string(p.lo) << ", "
          << to_string(p.hi) << "]</title></rect>\n";
    }
    for (const auto& g : rows[i].highlighted) {
      const double x0 = px(g.lo);
      const double w = std::max(px(g.hi) - x0, 0.5);
      out << "<rect x=\"" << detail::fmt(x0) << "\" y=\"" << y + style.row_height / 3 << "\" width=\""
          << detail::fmt(w) << "\" height=\"" << style.row_height / 3 << "\" fill=\"" << style.highlight_fill
          << "\"><title>gap (" << to_string(g.lo) << ", " << to_string(g.hi) << ")</title></rect>\n";
    }
    out << "</g>\n";
  }
  out << "<text x=\"" << style.margin << "\" y=\"" << height - style.margin / 3
      << "\" font-family=\"monospace\" font-size=\"11\">" << to_string(window.lo) << "</text>\n";
  out << "<text x=\"" << style.width - style.margin << "\" y=\"" << height - style.margin / 3
      << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"end\">" << to_string(window.hi) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

/// One text line per row. A cell is '#' when the union meets its interior,
/// '!' when it lies inside a highlighted gap, '.' otherwise.
inline std::string render_ascii(const std::vector<RenderRow>& rows, const ClosedInterval& window,
                                std::size_t columns = 72) {
  if (columns == 0) throw DomainError("ascii rendering needs at least one column");
  const Rational cell = window.length() / static_cast<unsigned long>(columns);
  if (sgn(cell) <= 0) throw DomainError("render window must have positive length");
  std::ostringstream out;
  for (const auto& row : rows) {
    char label[16];
    std::snprintf(label, sizeof label, "%3zu ", row.depth);
    out << label;
    for (std::size_t c = 0; c < columns; ++c) {
      const OpenInterval open(window.lo + cell * static_cast<unsigned long>(c),
                              window.lo + cell * static_cast<unsigned long>(c + 1));
      char ch = '.';
      if (row.parts.intersects(open)) {
        ch = '#';
      } else {
        for (const auto& g : row.highlighted)
          if (g.lo <= open.lo && open.hi <= g.hi) ch = '!';
      }
      out << ch;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace cantorval

#endif  // CANTORVAL_RENDER_HPP
