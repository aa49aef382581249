#ifndef LINKPARITY_TOOLS_SVG_PLOT_HPP
#define LINKPARITY_TOOLS_SVG_PLOT_HPP

#include <algorithm>
#include <sstream>
#include <string>

#include "linkparity/errors.hpp"
#include "linkparity/linking.hpp"

namespace linkparity {

/// Planar drawing of a five-point report: every segment in grey, linked
/// segments in red, boundary crossings as dots.
inline std::string render_planar_svg(const LinkReport& report) {
  const Configuration& c = report.config;
  if (c.dimension() != 2) throw ContractError("plot needs a planar configuration");
  const int n = static_cast<int>(c.size());

  auto x_of = [&](const Point& p) { return p(0).gmp().get_d(); };
  auto y_of = [&](const Point& p) { return p(1).gmp().get_d(); };
  double xmin = x_of(c.point(1)), xmax = xmin, ymin = y_of(c.point(1)), ymax = ymin;
  for (int i = 2; i <= n; ++i) {
    xmin = std::min(xmin, x_of(c.point(i)));
    xmax = std::max(xmax, x_of(c.point(i)));
    ymin = std::min(ymin, y_of(c.point(i)));
    ymax = std::max(ymax, y_of(c.point(i)));
  }
  constexpr double kSize = 480, kMargin = 40;
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  auto sx = [&](double x) { return kMargin + (x - xmin) * scale; };
  auto sy = [&](double y) { return kSize - kMargin - (y - ymin) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const SubsetLinkage& s : report.per_subset) {
    if (s.subject.size() != 2) continue;
    const Point a = c.point(s.subject[0]);
    const Point b = c.point(s.subject[1]);
    const bool linked = s.linked();
    svg << "<line x1=\"" << sx(x_of(a)) << "\" y1=\"" << sy(y_of(a)) << "\" x2=\"" << sx(x_of(b))
        << "\" y2=\"" << sy(y_of(b)) << "\" stroke=\"" << (linked ? "#c0392b" : "#bbbbbb")
        << "\" stroke-width=\"" << (linked ? 2.5 : 1) << "\"><title>" << s.subject.str() << ": "
        << s.boundary_points << " boundary point(s)</title></line>\n";
  }
  for (const SubsetLinkage& s : report.per_subset) {
    for (const FaceHit& hit : s.hits) {
      if (!hit.result.point) continue;
      svg << "<circle cx=\"" << sx(x_of(*hit.result.point)) << "\" cy=\"" << sy(y_of(*hit.result.point))
          << "\" r=\"3\" fill=\"#2471a3\"/>\n";
    }
  }
  for (int i = 1; i <= n; ++i) {
    const Point p = c.point(i);
    svg << "<circle cx=\"" << sx(x_of(p)) << "\" cy=\"" << sy(y_of(p)) << "\" r=\"5\" fill=\"black\"/>\n";
    svg << "<text x=\"" << sx(x_of(p)) + 8 << "\" y=\"" << sy(y_of(p)) - 8
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << i << "</text>\n";
  }
  svg << "<text x=\"" << kMargin << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">"
      << "linked pairs: " << report.total_linked << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace linkparity

#endif  // LINKPARITY_TOOLS_SVG_PLOT_HPP
