#include "latticircle/cli/svg.hpp"

#include <algorithm>
#include <ostream>

namespace latticircle::cli {

void write_path_svg(std::ostream& os, const std::vector<LatticePoint>& points, Coord r, bool closed,
                    const SvgOptions& options) {
  Coord min_x = 0, max_x = r, min_y = 0, max_y = r;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (options.overlay_circle) {
    if (min_x < 0) min_x = std::min(min_x, -r);
    if (min_y < 0) min_y = std::min(min_y, -r);
  }
  min_x -= options.margin_units;
  min_y -= options.margin_units;
  max_x += options.margin_units;
  max_y += options.margin_units;

  const Coord u = options.unit_px;
  const Coord width = (max_x - min_x) * u;
  const Coord height = (max_y - min_y) * u;
  auto sx = [&](Coord x) { return (x - min_x) * u; };
  auto sy = [&](Coord y) { return (max_y - y) * u; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"white\"/>\n";

  os << "  <g id=\"grid\" stroke=\"#d0d0d0\" stroke-width=\"0.5\">\n";
  for (Coord x = min_x; x <= max_x; ++x)
    os << "    <line x1=\"" << sx(x) << "\" y1=\"0\" x2=\"" << sx(x) << "\" y2=\"" << height << "\"/>\n";
  for (Coord y = min_y; y <= max_y; ++y)
    os << "    <line x1=\"0\" y1=\"" << sy(y) << "\" x2=\"" << width << "\" y2=\"" << sy(y) << "\"/>\n";
  os << "  </g>\n";

  os << "  <g id=\"axes\" stroke=\"#808080\" stroke-width=\"1\">\n"
     << "    <line x1=\"" << sx(min_x) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(max_x) << "\" y2=\""
     << sy(0) << "\"/>\n"
     << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(min_y) << "\" x2=\"" << sx(0) << "\" y2=\""
     << sy(max_y) << "\"/>\n"
     << "  </g>\n";

  if (options.overlay_circle)
    os << "  <circle id=\"circle\" cx=\"" << sx(0) << "\" cy=\"" << sy(0) << "\" r=\"" << r * u
       << "\" fill=\"none\" stroke=\"#a0a0a0\" stroke-width=\"1\"/>\n";

  os << "  <" << (closed ? "polygon" : "polyline") << " id=\"path\" fill=\"none\" stroke=\"black\""
     << " stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << ' ';
    os << sx(points[i].x) << ',' << sy(points[i].y);
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace latticircle::cli
