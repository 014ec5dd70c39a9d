#ifndef VANGLE_SVG_HPP
#define VANGLE_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "vangle/extremal.hpp"
#include "vangle/hyperbolic.hpp"

namespace vangle {

// Construction figures. Geometry is written in model coordinates inside one
// group whose transform maps the viewing window onto a fixed 800x800
// viewport, so every emitted coordinate is a model coordinate.

inline constexpr double kSvgSize = 800.0;

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct Viewport {
  double left = -1.1, bottom = -1.1, width = 2.2;
  double scale() const { return kSvgSize / width; }
  Point screen(Point p) const { return {(p.x - left) * scale(), kSvgSize - (p.y - bottom) * scale()}; }
};

inline double wrap(double a) {
  const double t = 2.0 * std::numbers::pi;
  a = std::fmod(a, t);
  return a < 0.0 ? a + t : a;
}

// Path along circle c from a to b passing through m. Arc flags are read in
// the path's own (model) coordinates, where sweep-flag 1 is counterclockwise.
inline std::string arc_path(const Circle& c, Point a, Point m, Point b) {
  const double ta = std::atan2(a.y - c.center.y, a.x - c.center.x);
  const double tm = std::atan2(m.y - c.center.y, m.x - c.center.x);
  const double tb = std::atan2(b.y - c.center.y, b.x - c.center.x);
  const double ab = wrap(tb - ta), am = wrap(tm - ta);
  const bool ccw = am < ab;
  const double sweep = ccw ? ab : 2.0 * std::numbers::pi - ab;
  const int large = sweep > std::numbers::pi ? 1 : 0;
  const int flag = ccw ? 1 : 0;
  return "M " + num(a.x) + " " + num(a.y) + " A " + num(c.radius) + " " + num(c.radius) + " 0 " +
         std::to_string(large) + " " + std::to_string(flag) + " " + num(b.x) + " " + num(b.y);
}

inline Viewport halfplane_viewport(const std::vector<Point>& pts) {
  double lo = pts.front().x, hi = lo, top = 0.0;
  for (Point p : pts) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
    top = std::max(top, p.y);
  }
  const double w = 1.2 * std::max({hi - lo, top, 1e-9});
  return {0.5 * (lo + hi) - 0.5 * w, -0.08 * w, w};
}

}  // namespace detail

/// SVG of the extremal construction: the model boundary, the geodesic
/// segment J[x,y], the bisector L_xy, the extremal circle through x, y and
/// the extremal point, and the three points.
inline std::string construction_svg(Point x, Point y, const ExtremalResult& r) {
  using detail::num;
  const Model m = r.model;
  const Geodesic seg = geodesic_through(x, y, m);
  const Geodesic& bis = r.bisector;
  const Point mid = hyperbolic_midpoint(x, y, m);
  const bool has_circle = !r.extremal_point.is_infinite();
  const Point z = has_circle ? r.extremal_point.point() : Point{};
  const Circle circle = has_circle ? circle_through(x, y, z) : Circle{};

  detail::Viewport vp;
  if (m == Model::HalfPlane) {
    std::vector<Point> pts{x, y, mid};
    for (const IdealPoint& e : bis.ends)
      if (!e.is_infinite()) pts.push_back(e.point());
    if (has_circle) {
      pts.push_back(circle.center + Point{circle.radius, circle.radius});
      pts.push_back(circle.center - Point{circle.radius, 0.0});
    }
    vp = detail::halfplane_viewport(pts);
  }
  const double s = vp.scale();
  const double top = vp.bottom + vp.width;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  out += "<g id=\"model\" transform=\"matrix(" + num(s) + " 0 0 " + num(-s) + " " + num(-vp.left * s) + " " +
         num(kSvgSize + vp.bottom * s) + ")\" fill=\"none\" stroke-width=\"1.5\">\n";

  const std::string ns = " vector-effect=\"non-scaling-stroke\"";
  if (m == Model::Disk)
    out += "<circle id=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"black\"" + ns + "/>\n";
  else
    out += "<line id=\"boundary\" x1=\"" + num(vp.left) + "\" y1=\"0\" x2=\"" + num(vp.left + vp.width) +
           "\" y2=\"0\" stroke=\"black\"" + ns + "/>\n";

  auto geodesic_path = [&](const Geodesic& g, Point a, Point through, Point b) {
    if (g.shape == Geodesic::Shape::Arc) return detail::arc_path(g.arc, a, through, b);
    return "M " + num(a.x) + " " + num(a.y) + " L " + num(b.x) + " " + num(b.y);
  };

  out += "<path id=\"segment\" d=\"" + geodesic_path(seg, x, mid, y) + "\" stroke=\"#1f5fbf\" stroke-width=\"2.5\"" + ns + "/>\n";

  {
    Point a, b;
    if (bis.shape == Geodesic::Shape::Line && m == Model::HalfPlane) {
      a = bis.line_point;
      b = {bis.line_point.x, top};
    } else {
      a = bis.ends[0].point();
      b = bis.ends[1].point();
    }
    out += "<path id=\"bisector\" d=\"" + geodesic_path(bis, a, mid, b) + "\" stroke=\"#2f8f2f\" stroke-dasharray=\"6 4\"" + ns + "/>\n";
  }

  if (has_circle)
    out += "<circle id=\"extremal-circle\" cx=\"" + num(circle.center.x) + "\" cy=\"" + num(circle.center.y) + "\" r=\"" +
           num(circle.radius) + "\" stroke=\"#c03030\"" + ns + "/>\n";

  const double dot = 4.0 / s;
  auto marker = [&](const char* id, Point p, const char* color) {
    out += "<circle id=\"" + std::string(id) + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(dot) +
           "\" fill=\"" + color + "\" stroke=\"none\"/>\n";
  };
  marker("x", x, "black");
  marker("y", y, "black");
  if (has_circle) marker("z", z, "#c03030");
  out += "</g>\n";

  auto label = [&](const char* text, Point p) {
    const Point q = vp.screen(p);
    out += "<text x=\"" + num(q.x + 6.0) + "\" y=\"" + num(q.y - 6.0) + "\" font-family=\"sans-serif\" font-size=\"14\">" +
           text + "</text>\n";
  };
  label("x", x);
  label("y", y);
  if (has_circle) label("z", z);
  out += "</svg>\n";
  return out;
}

}  // namespace vangle

#endif  // VANGLE_SVG_HPP
