#ifndef VANGLE_DOMAIN_HPP
#define VANGLE_DOMAIN_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "vangle/euclid.hpp"
#include "vangle/hyperbolic.hpp"

namespace vangle {

struct HalfPlane {};
struct UnitDisk {};
/// B^2 minus the origin; its boundary is the unit circle together with 0.
struct PuncturedDisk {};

/// A strictly convex polygon with counterclockwise vertices.
class ConvexPolygon {
public:
  explicit ConvexPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw ConfigError("ConvexPolygon: need at least three vertices");
    double scale = 0.0;
    for (const Point& p : vertices_) {
      if (!is_finite(p)) throw ConfigError("ConvexPolygon: non-finite vertex");
      scale = std::max(scale, norm(p - vertices_[0]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = vertices_[i];
      const Point b = vertices_[(i + 1) % n];
      const Point c = vertices_[(i + 2) % n];
      if (nearly_equal(a, b)) throw ConfigError("ConvexPolygon: repeated vertex");
      if (!(cross(b - a, c - b) > kCollinearTol * scale * scale))
        throw ConfigError("ConvexPolygon: vertices are not a strictly convex counterclockwise chain");
    }
    // Consecutive left turns can still wind more than once.
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Point e1 = vertices_[(i + 1) % n] - vertices_[i];
      const Point e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
      turning += std::atan2(cross(e1, e2), dot(e1, e2));
    }
    if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6)
      throw ConfigError("ConvexPolygon: vertex chain winds more than once");
  }

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  Segment edge(std::size_t i) const { return {vertices_[i], vertices_[(i + 1) % vertices_.size()]}; }

private:
  std::vector<Point> vertices_;
};

using Domain = std::variant<HalfPlane, UnitDisk, ConvexPolygon, PuncturedDisk>;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

inline std::string variant_name(const Domain& d) {
  return std::visit(Overloaded{[](const HalfPlane&) { return std::string("halfplane"); },
                               [](const UnitDisk&) { return std::string("disk"); },
                               [](const ConvexPolygon&) { return std::string("polygon"); },
                               [](const PuncturedDisk&) { return std::string("punctured"); }},
                    d);
}

inline bool is_convex(const Domain& d) { return !std::holds_alternative<PuncturedDisk>(d); }

/// Strict interior membership.
inline bool contains(const Domain& d, Point p) {
  if (!is_finite(p)) return false;
  return std::visit(Overloaded{[&](const HalfPlane&) { return p.y > 0.0; },
                               [&](const UnitDisk&) { return norm2(p) < 1.0; },
                               [&](const PuncturedDisk&) { return norm2(p) < 1.0 && p != Point{}; },
                               [&](const ConvexPolygon& poly) {
                                 for (std::size_t i = 0; i < poly.size(); ++i) {
                                   const Segment e = poly.edge(i);
                                   if (!(cross(e.b - e.a, p - e.a) > 0.0)) return false;
                                 }
                                 return true;
                               }},
                    d);
}

inline void require_inside(const Domain& d, Point p, const char* what) {
  if (!contains(d, p)) throw DomainError(std::string(what) + ": point is not interior to the " + variant_name(d));
}

/// Euclidean distance from an interior point to the boundary.
inline double dist_to_boundary(const Domain& d, Point p) {
  require_inside(d, p, "dist_to_boundary");
  return std::visit(Overloaded{[&](const HalfPlane&) { return p.y; },
                               [&](const UnitDisk&) { return 1.0 - norm(p); },
                               [&](const PuncturedDisk&) { return std::min(1.0 - norm(p), norm(p)); },
                               [&](const ConvexPolygon& poly) {
                                 double best = std::numeric_limits<double>::infinity();
                                 for (std::size_t i = 0; i < poly.size(); ++i)
                                   best = std::min(best, distance_to_segment(p, poly.edge(i)));
                                 return best;
                               }},
                    d);
}

/// Distance from a point to the boundary set, for checking witnesses.
inline double distance_from_boundary_set(const Domain& d, Point p) {
  return std::visit(Overloaded{[&](const HalfPlane&) { return std::abs(p.y); },
                               [&](const UnitDisk&) { return std::abs(1.0 - norm(p)); },
                               [&](const PuncturedDisk&) { return std::min(std::abs(1.0 - norm(p)), norm(p)); },
                               [&](const ConvexPolygon& poly) {
                                 double best = std::numeric_limits<double>::infinity();
                                 for (std::size_t i = 0; i < poly.size(); ++i)
                                   best = std::min(best, distance_to_segment(p, poly.edge(i)));
                                 return best;
                               }},
                    d);
}

/// Named domains: disk, halfplane, punctured, square (unit square), triangle
/// (equilateral, circumradius 1).
inline Domain domain_preset(const std::string& name) {
  if (name == "disk") return UnitDisk{};
  if (name == "halfplane") return HalfPlane{};
  if (name == "punctured") return PuncturedDisk{};
  if (name == "square") return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  if (name == "triangle") {
    std::vector<Point> v;
    for (int k = 0; k < 3; ++k) {
      const double th = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
      v.push_back({std::cos(th), std::sin(th)});
    }
    return ConvexPolygon(std::move(v));
  }
  throw ConfigError("unknown domain preset '" + name + "'");
}

}  // namespace vangle

#endif  // VANGLE_DOMAIN_HPP
