#ifndef VANGLE_EUCLID_HPP
#define VANGLE_EUCLID_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "vangle/errors.hpp"

namespace vangle {

/// Relative tolerance for coincidence tests.
inline constexpr double kRelTol = 1e-10;
/// Collinearity threshold on |cross| relative to the squared point scale.
inline constexpr double kCollinearTol = 1e-12;

/// A point (or vector) of the Euclidean plane.
struct Point {
  double x = 0.0;
  double y = 0.0;

  constexpr Point& operator+=(Point o) { x += o.x; y += o.y; return *this; }
  constexpr Point& operator-=(Point o) { x -= o.x; y -= o.y; return *this; }
  constexpr Point& operator*=(double s) { x *= s; y *= s; return *this; }

  friend constexpr Point operator+(Point a, Point b) { return a += b; }
  friend constexpr Point operator-(Point a, Point b) { return a -= b; }
  friend constexpr Point operator-(Point a) { return {-a.x, -a.y}; }
  friend constexpr Point operator*(Point a, double s) { return a *= s; }
  friend constexpr Point operator*(double s, Point a) { return a *= s; }
  friend constexpr Point operator/(Point a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(Point, Point) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
constexpr double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
/// Counterclockwise quarter turn.
constexpr Point perp(Point a) { return {-a.y, a.x}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline void require_finite(Point p, const char* what) {
  if (!is_finite(p)) throw DomainError(std::string(what) + ": non-finite coordinate");
}

/// Lexicographic order on coordinates; used to break ties deterministically.
constexpr bool lex_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// True when a and b agree within kRelTol relative to their magnitude.
inline bool nearly_equal(Point a, Point b, double rel = kRelTol) {
  return dist(a, b) <= rel * std::max({1.0, norm(a), norm(b)});
}

/// Oriented line: a point on it and a unit direction.
struct Line {
  Point origin;
  Point direction;

  static Line through(Point a, Point b) {
    const Point d = b - a;
    const double n = norm(d);
    if (n == 0.0) throw DomainError("Line::through: coincident points");
    return {a, d / n};
  }
};

/// Closed segment [a, b].
struct Segment {
  Point a;
  Point b;

  bool degenerate() const { return nearly_equal(a, b); }
  Point at(double t) const { return a + (b - a) * t; }
  double length() const { return dist(a, b); }
};

struct Circle {
  Point center;
  double radius = 0.0;
};

/// Thrown by circle_through for collinear input; carries the common line.
class CollinearError : public DegenerateError {
public:
  CollinearError(const std::string& what, Line line) : DegenerateError(what), line_(line) {}
  const Line& line() const { return line_; }

private:
  Line line_;
};

/// The angle at z between the segments [x,z] and [y,z], in [0, pi].
inline double angle(Point x, Point z, Point y) {
  const Point a = x - z;
  const Point b = y - z;
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) throw DomainError("angle: vertex coincides with an endpoint");
  const double c = dot(a, b) / (na * nb);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

/// Mirror image of p in the line. The direction need not be normalized, but
/// must be nonzero.
inline Point reflect_across_line(Point p, const Line& line) {
  const double n = norm(line.direction);
  if (n == 0.0) throw DomainError("reflect_across_line: zero direction");
  const Point u = line.direction / n;
  const Point d = p - line.origin;
  const Point along = u * dot(d, u);
  return line.origin + along * 2.0 - d;
}

/// Signed distance from p to the line, positive on the left of the direction.
inline double signed_distance(Point p, const Line& line) {
  return cross(line.direction, p - line.origin) / norm(line.direction);
}

inline double distance_to_segment(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = norm2(d);
  if (len2 == 0.0) return dist(p, s.a);
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return dist(p, s.at(t));
}

/// Circumcenter of (0, p, q) relative to the origin; D is twice the signed
/// area. Shared by circle_through and the tangency certificate.
struct LocalCircumcenter {
  Point offset;
  double twice_area;
};

inline LocalCircumcenter local_circumcenter(Point p, Point q) {
  const double d = 2.0 * cross(p, q);
  const double p2 = norm2(p);
  const double q2 = norm2(q);
  return {{(q.y * p2 - p.y * q2) / d, (p.x * q2 - q.x * p2) / d}, d};
}

/// Unique circle through three non-collinear points.
inline Circle circle_through(Point p, Point q, Point r) {
  require_finite(p, "circle_through");
  require_finite(q, "circle_through");
  require_finite(r, "circle_through");
  const double scale = std::max({dist(p, q), dist(q, r), dist(p, r)});
  if (scale == 0.0 || nearly_equal(p, q) || nearly_equal(q, r) || nearly_equal(p, r))
    throw DomainError("circle_through: points are not pairwise distinct");
  if (std::abs(cross(q - p, r - p)) < kCollinearTol * scale * scale) {
    const Point far = dist(p, q) >= dist(p, r) ? q : r;
    throw CollinearError("circle_through: collinear points", Line::through(p, far));
  }
  const auto lc = local_circumcenter(q - p, r - p);
  return {p + lc.offset, norm(lc.offset)};
}

/// A circle through two points tangent to a line, with its tangency point.
struct Tangency {
  Circle circle;
  Point point;
};

/// Circles through x and y tangent to the line. Two circles in general; one
/// when line(x,y) is parallel to the line. The tangency points t satisfy
/// |t - f|^2 = |f - x| |f - y| where f = line(x,y) meets the line.
inline std::vector<Tangency> tangent_circles_through_two_points(Point x, Point y, const Line& line) {
  require_finite(x, "tangent_circles_through_two_points");
  require_finite(y, "tangent_circles_through_two_points");
  const double n = norm(line.direction);
  if (n == 0.0) throw DomainError("tangent_circles_through_two_points: zero direction");
  const Point u = line.direction / n;
  Point normal = perp(u);
  double hx = dot(x - line.origin, normal);
  double hy = dot(y - line.origin, normal);
  if (hx < 0.0) {
    normal = -normal;
    hx = -hx;
    hy = -hy;
  }
  const double scale = std::max({1.0, norm(x - line.origin), norm(y - line.origin)});
  if (hx <= kRelTol * scale || hy <= kRelTol * scale)
    throw DomainError("tangent_circles_through_two_points: points must lie strictly on one side");

  const double ax = dot(x - line.origin, u);
  const double ay = dot(y - line.origin, u);
  // Frame coordinates: abscissa along u, height along normal.
  auto make = [&](double t) {
    const double r = ((t - ax) * (t - ax) + hx * hx) / (2.0 * hx);
    const Point foot = line.origin + u * t;
    return Tangency{{foot + normal * r, r}, foot};
  };

  std::vector<Tangency> out;
  if (std::abs(hx - hy) <= 1e-12 * std::max(hx, hy)) {
    out.push_back(make(0.5 * (ax + ay)));
    return out;
  }
  const double f = ax - hx * (ay - ax) / (hy - hx);
  const double power = std::hypot(ax - f, hx) * std::hypot(ay - f, hy);
  const double root = std::sqrt(power);
  out.push_back(make(f - root));
  out.push_back(make(f + root));
  return out;
}

}  // namespace vangle

#endif  // VANGLE_EUCLID_HPP
