#pragma once

#include "tropgeo/core.hpp"
#include "tropgeo/honeycomb.hpp"
#include "tropgeo/polytope.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace tropgeo {

/// 2D SVG rendering. Convention: y-axis up, 40 px per unit.
namespace svg {

constexpr double kScale = 40.0;

struct Canvas {
  double min_x, min_y, max_x, max_y;
  std::ostringstream body;

  Canvas(double x0, double y0, double x1, double y1) : min_x(x0), min_y(y0), max_x(x1), max_y(y1) {}

  double tx(double x) const { return (x - min_x) * kScale; }
  double ty(double y) const { return (max_y - y) * kScale; }  // y up

  void polygon(const std::vector<Point>& cyc, const std::string& fill,
               const std::string& stroke = "#222222", double stroke_width = 1.0) {
    body << "  <polygon points=\"";
    for (const auto& v : cyc) body << tx(to_double(v[0])) << "," << ty(to_double(v[1])) << " ";
    body << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << stroke_width << "\"/>\n";
  }

  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (max_x - min_x) * kScale
        << "\" height=\"" << (max_y - min_y) * kScale << "\" viewBox=\"0 0 "
        << (max_x - min_x) * kScale << " " << (max_y - min_y) * kScale << "\">\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

inline std::string render_polygon(const std::vector<Point>& cyc) {
  double x0 = 1e18, y0 = 1e18, x1 = -1e18, y1 = -1e18;
  for (const auto& v : cyc) {
    x0 = std::min(x0, to_double(v[0]));
    x1 = std::max(x1, to_double(v[0]));
    y0 = std::min(y0, to_double(v[1]));
    y1 = std::max(y1, to_double(v[1]));
  }
  Canvas c(x0 - 1, y0 - 1, x1 + 1, y1 + 1);
  c.polygon(cyc, "#9db8e8");
  return c.str();
}

/// Honeycomb tiling of unit tropical disks over the window; cells filled by
/// lattice class parity (cosmetic).
inline std::string render_tiling_2d(const std::vector<Point>& centers, const Rational& window) {
  double W = to_double(window);
  Canvas c(-W - 2, -W - 2, W + 2, W + 2);
  // window outline
  Polytope win = trop_ball(2, window);
  c.polygon(detail::hull2d(win.vertices), "none", "#aa3333", 2.0);
  for (const auto& center : centers) {
    Polytope cell = trop_ball(2, 1, center);
    // parity of the lattice class: (c1 - c2)/3 mod 2 distinguishes stripes
    long long c1 = static_cast<long long>(to_double(center[0]));
    long long c2 = static_cast<long long>(to_double(center[1]));
    long long cls = (c1 - c2) / 3;
    bool odd = ((cls % 2) + 2) % 2 == 1;
    c.polygon(detail::hull2d(cell.vertices), odd ? "#b8d8f8" : "#88b8e8");
  }
  return c.str();
}

}  // namespace svg
}  // namespace tropgeo
