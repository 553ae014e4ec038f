#pragma once

// Static SVG view of a polygon, its lattice points and diameter segments.
// Coordinates are converted to decimal strings only here; no computed value
// ever passes back into the library.

#include <sstream>
#include <string>
#include <vector>

#include "latdiam/core.hpp"
#include "latdiam/diameter2d.hpp"

namespace latdiam {

namespace detail {

inline std::string decimal(const Rational& r) {
  // Three decimals, rounded toward negative infinity.
  Integer scaled = floor(r * 1000);
  Integer whole = floor_div(scaled, 1000), frac = mod_floor(scaled, 1000);
  std::string f = to_string(frac);
  while (f.size() < 3) f = "0" + f;
  return to_string(whole) + "." + f;
}

inline const char* palette(std::size_t i) {
  static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return colors[i % 8];
}

}  // namespace detail

inline std::string render_svg(const Polygon2& p, const DiameterReport& report) {
  Integer xmin = p.vertex(0)[0], xmax = xmin, ymin = p.vertex(0)[1], ymax = ymin;
  for (const auto& v : p.vertices()) {
    xmin = std::min(xmin, v[0]);
    xmax = std::max(xmax, v[0]);
    ymin = std::min(ymin, v[1]);
    ymax = std::max(ymax, v[1]);
  }
  xmin -= 1;
  ymin -= 1;
  xmax += 1;
  ymax += 1;
  const Integer scale = 40;
  // Flip y so the picture has the usual orientation.
  auto X = [&](const Rational& x) { return detail::decimal((x - Rational(xmin)) * Rational(scale)); };
  auto Y = [&](const Rational& y) { return detail::decimal((Rational(ymax) - y) * Rational(scale)); };
  const Integer width = (xmax - xmin) * scale, height = (ymax - ymin) * scale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (Integer x = xmin; x <= xmax; ++x)
    out << "    <line x1=\"" << X(x) << "\" y1=\"0.000\" x2=\"" << X(x) << "\" y2=\"" << height
        << ".000\"/>\n";
  for (Integer y = ymin; y <= ymax; ++y)
    out << "    <line x1=\"0.000\" y1=\"" << Y(y) << "\" x2=\"" << width << ".000\" y2=\"" << Y(y)
        << "\"/>\n";
  out << "  </g>\n";
  out << "  <polygon fill=\"#f4f4f4\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << (i ? " " : "") << X(p.vertex(i)[0]) << ',' << Y(p.vertex(i)[1]);
  out << "\"/>\n";

  for (std::size_t d = 0; d < report.directions.size(); ++d)
    for (const auto& line : report.lines) {
      if (!(line.dir() == report.directions[d])) continue;
      auto seg = clip_line(p, line);
      if (!seg) continue;
      out << "  <line class=\"diameter\" stroke=\"" << detail::palette(d) << "\" stroke-width=\"3\" x1=\""
          << X(seg->a[0]) << "\" y1=\"" << Y(seg->a[1]) << "\" x2=\"" << X(seg->b[0])
          << "\" y2=\"" << Y(seg->b[1]) << "\"/>\n";
    }

  out << "  <g fill=\"#000000\">\n";
  for (const auto& q : enumerate_lattice_points(p))
    out << "    <circle cx=\"" << X(q[0]) << "\" cy=\"" << Y(q[1]) << "\" r=\"4\"/>\n";
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace latdiam
