#ifndef VANGLE_METRICS_HPP
#define VANGLE_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "vangle/boundary_sup.hpp"
#include "vangle/domain.hpp"
#include "vangle/extremal.hpp"
#include "vangle/golden.hpp"

namespace vangle {

/// Distance ratio metric j_G(x,y) = log(1 + |x-y| / min(d(x), d(y))).
inline double j_metric(const Domain& d, Point x, Point y) {
  const double m = std::min(dist_to_boundary(d, x), dist_to_boundary(d, y));
  return std::log1p(dist(x, y) / m);
}

// ---------------------------------------------------------------------------
// Closed forms that accept points of any dimension n >= 2.

/// j in the unit ball.
inline double j_ball(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  const double nx = detail::length(x), ny = detail::length(y);
  if (!(nx < 1.0) || !(ny < 1.0)) throw DomainError("j_ball: point not in the open unit ball");
  return std::log1p(detail::distance(x, y) / std::min(1.0 - nx, 1.0 - ny));
}

/// j in the upper half-space.
inline double j_halfspace(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  if (!(x.back() > 0.0) || !(y.back() > 0.0)) throw DomainError("j_halfspace: point not in the upper half-space");
  return std::log1p(detail::distance(x, y) / std::min(x.back(), y.back()));
}

/// v in the unit ball for x, y collinear with the origin:
/// arctan(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
inline double v_ball_radial(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  const double nx = detail::length(x), ny = detail::length(y);
  if (!(nx < 1.0) || !(ny < 1.0)) throw DomainError("v_ball_radial: point not in the open unit ball");
  double xy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) xy += x[i] * y[i];
  const double gram = nx * nx * ny * ny - xy * xy;
  if (nx > 0.0 && ny > 0.0 && gram > 1e-12 * nx * nx * ny * ny)
    throw DomainError("v_ball_radial: points are not collinear with the origin");
  return std::atan(detail::distance(x, y) / std::sqrt(detail::one_minus_sq(nx) * detail::one_minus_sq(ny)));
}

/// v in the upper half-space for x, y on a common vertical line:
/// arctan(|x-y| / (2 sqrt(x_n y_n))).
inline double v_halfspace_vertical(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  if (!(x.back() > 0.0) || !(y.back() > 0.0)) throw DomainError("v_halfspace_vertical: point not in the upper half-space");
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > 1e-12 * std::max({1.0, std::abs(x[i]), std::abs(y[i])}))
      throw DomainError("v_halfspace_vertical: points are not on a common vertical line");
  return std::atan(detail::distance(x, y) / (2.0 * std::sqrt(x.back() * y.back())));
}

// ---------------------------------------------------------------------------
// Triangular ratio metric.

namespace detail {

inline constexpr int kDiskGrid = 720;

// inf over the unit circle of |x-z| + |z-y|, with its minimizer.
inline std::pair<double, Point> disk_path_infimum(Point x, Point y) {
  auto path = [&](double th) {
    const Point z{std::cos(th), std::sin(th)};
    return dist(x, z) + dist(z, y);
  };
  const double h = 2.0 * std::numbers::pi / kDiskGrid;
  std::vector<double> vals(kDiskGrid);
  for (int i = 0; i < kDiskGrid; ++i) vals[static_cast<std::size_t>(i)] = path(h * i);
  double best = std::numeric_limits<double>::infinity();
  double best_th = 0.0;
  for (int i = 0; i < kDiskGrid; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    const double prev = vals[static_cast<std::size_t>((i + kDiskGrid - 1) % kDiskGrid)];
    const double next = vals[static_cast<std::size_t>((i + 1) % kDiskGrid)];
    if (v > prev || v > next) continue;
    const ScalarExtremum e = golden_section_min(path, h * (i - 1), h * (i + 1), 1e-14);
    const double cand = std::min(e.value, v);
    if (cand < best) {
      best = cand;
      best_th = e.value <= v ? e.arg : h * i;
    }
  }
  return {best, Point{std::cos(best_th), std::sin(best_th)}};
}

inline MetricReport s_polygon(const ConvexPolygon& poly, Point x, Point y) {
  double best = std::numeric_limits<double>::infinity();
  Point witness;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const Line line = Line::through(e.a, e.b);
    const double hx = signed_distance(x, line);
    const double hy = signed_distance(y, line);
    // The straight path from x to the mirror image of y meets the edge line
    // where the broken path x -> z -> y is shortest.
    const Point z = x + (reflect_across_line(y, line) - x) * (hx / (hx + hy));
    const double s = dot(z - e.a, e.b - e.a) / norm2(e.b - e.a);
    if (s >= 0.0 && s <= 1.0) {
      const double len = dist(x, z) + dist(z, y);
      if (len < best) { best = len; witness = z; }
      continue;
    }
    for (Point v : {e.a, e.b}) {
      const double len = dist(x, v) + dist(v, y);
      if (len < best) { best = len; witness = v; }
    }
  }
  return {dist(x, y) / best, IdealPoint(witness), Method::PerEdgeAnalytic};
}

}  // namespace detail

/// Triangular ratio metric s_G(x,y) = sup_z |x-y| / (|x-z| + |z-y|).
inline MetricReport s_metric(const Domain& d, Point x, Point y) {
  require_inside(d, x, "s_metric");
  require_inside(d, y, "s_metric");
  if (x == y) return {0.0, std::nullopt, Method::ClosedForm};
  const double num = dist(x, y);
  return std::visit(
      Overloaded{[&](const HalfPlane&) {
                   const Point mirrored{y.x, -y.y};
                   const Point z = x + (mirrored - x) * (x.y / (x.y + y.y));
                   return MetricReport{num / dist(x, mirrored), IdealPoint(Point{z.x, 0.0}), Method::ClosedForm};
                 },
                 [&](const UnitDisk&) {
                   const auto [len, z] = detail::disk_path_infimum(x, y);
                   return MetricReport{num / len, IdealPoint(z), Method::NumericSup};
                 },
                 [&](const PuncturedDisk&) {
                   const auto [len, z] = detail::disk_path_infimum(x, y);
                   const double at_origin = num / (norm(x) + norm(y));
                   if (at_origin >= num / len) return MetricReport{at_origin, IdealPoint(Point{}), Method::ClosedForm};
                   return MetricReport{num / len, IdealPoint(z), Method::NumericSup};
                 },
                 [&](const ConvexPolygon& poly) { return detail::s_polygon(poly, x, y); }},
      d);
}

// ---------------------------------------------------------------------------
// Visual angle metric.

namespace detail {

inline void consider(MetricReport& best, Point x, Point y, Point z, Method m) {
  const double a = angle(x, z, y);
  if (a > best.value) best = {a, IdealPoint(z), m};
}

inline MetricReport v_polygon(const ConvexPolygon& poly, Point x, Point y) {
  MetricReport best{-1.0, std::nullopt, Method::PerEdgeAnalytic};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    consider(best, x, y, e.a, Method::PerEdgeAnalytic);
    const Line line = Line::through(e.a, e.b);
    try {
      // Along the edge line the angle peaks only at tangency points, so its
      // maximum on the edge is at one of those or at a vertex.
      for (const Tangency& t : tangent_circles_through_two_points(x, y, line)) {
        const double s = dot(t.point - e.a, e.b - e.a) / norm2(e.b - e.a);
        if (s >= 0.0 && s <= 1.0) consider(best, x, y, t.point, Method::PerEdgeAnalytic);
      }
    } catch (const DomainError&) {
      // A point numerically on the edge line: search the edge instead.
      auto f = [&](double s) { return angle(x, e.at(s), y); };
      constexpr int n = 256;
      int arg = 0;
      double top = -1.0;
      for (int k = 0; k <= n; ++k)
        if (const double v = f(static_cast<double>(k) / n); v > top) { top = v; arg = k; }
      const ScalarExtremum r = golden_section_max(f, std::max(0.0, (arg - 1.0) / n), std::min(1.0, (arg + 1.0) / n));
      consider(best, x, y, e.at(r.arg), Method::NumericSup);
    }
  }
  return best;
}

inline MetricReport from_extremal(Point x, Point y, Model m) {
  if (rho(x, y, m) < kMinBisectorSeparation) {
    const Domain d = m == Model::HalfPlane ? Domain{HalfPlane{}} : Domain{UnitDisk{}};
    return brute_force_sup(d, x, y, Functional::Angle, 4096);
  }
  const ExtremalResult r = extremal(x, y, m);
  return {r.value, r.extremal_point, r.fallback ? Method::NumericSup : Method::Construction};
}

}  // namespace detail

/// Visual angle metric v_G(x,y) = sup_z angle(x, z, y).
inline MetricReport v_metric(const Domain& d, Point x, Point y) {
  require_inside(d, x, "v_metric");
  require_inside(d, y, "v_metric");
  if (x == y) return {0.0, std::nullopt, Method::ClosedForm};
  return std::visit(Overloaded{[&](const HalfPlane&) { return detail::from_extremal(x, y, Model::HalfPlane); },
                               [&](const UnitDisk&) { return detail::from_extremal(x, y, Model::Disk); },
                               [&](const PuncturedDisk&) {
                                 MetricReport r = detail::from_extremal(x, y, Model::Disk);
                                 const double at_origin = angle(x, Point{}, y);
                                 if (at_origin > r.value) r = {at_origin, IdealPoint(Point{}), Method::ClosedForm};
                                 return r;
                               },
                               [&](const ConvexPolygon& poly) { return detail::v_polygon(poly, x, y); }},
                    d);
}

}  // namespace vangle

#endif  // VANGLE_METRICS_HPP
