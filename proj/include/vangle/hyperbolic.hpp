#ifndef VANGLE_HYPERBOLIC_HPP
#define VANGLE_HYPERBOLIC_HPP

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "vangle/euclid.hpp"

namespace vangle {

/// The two planar models of the hyperbolic plane: the upper half-plane H^2
/// and the unit disk B^2.
enum class Model { HalfPlane, Disk };

inline const char* to_string(Model m) { return m == Model::HalfPlane ? "halfplane" : "disk"; }

/// A boundary point of a model, or the point at infinity of H^2.
class IdealPoint {
public:
  explicit IdealPoint(Point p) : point_(p) {}
  static IdealPoint infinity() { return IdealPoint(); }

  bool is_infinite() const { return !point_.has_value(); }
  Point point() const {
    if (!point_) throw DomainError("IdealPoint: point at infinity has no coordinates");
    return *point_;
  }

  friend bool operator==(const IdealPoint&, const IdealPoint&) = default;

private:
  IdealPoint() = default;
  std::optional<Point> point_;
};

/// A complete geodesic of H^2 or B^2. Line-type geodesics are vertical rays
/// (H^2) or diameters (B^2); arc-type ones are circles orthogonal to the
/// model boundary.
struct Geodesic {
  enum class Shape { Line, Arc };

  Model model = Model::Disk;
  Shape shape = Shape::Line;
  Circle arc;                 // Shape::Arc
  Point line_point;           // Shape::Line: (a,0) in H^2, the origin in B^2
  Point line_direction;       // Shape::Line: unit direction
  std::array<IdealPoint, 2> ends{IdealPoint::infinity(), IdealPoint::infinity()};

  /// Euclidean distance from p to the carrier circle or line.
  double distance_to(Point p) const {
    if (shape == Shape::Arc) return std::abs(dist(p, arc.center) - arc.radius);
    return std::abs(cross(line_direction, p - line_point));
  }
};

// ---------------------------------------------------------------------------
// Membership and the closed-form metric.

inline bool in_model(Point p, Model m) {
  if (!is_finite(p)) return false;
  return m == Model::HalfPlane ? p.y > 0.0 : norm2(p) < 1.0;
}

inline void require_in_model(Point p, Model m, const char* what) {
  if (!in_model(p, m))
    throw DomainError(std::string(what) + ": point is not interior to the " + to_string(m) + " model");
}

namespace detail {

inline double one_minus_sq(double r) { return (1.0 - r) * (1.0 + r); }

inline void check_same_dimension(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("mixed-dimension points");
  if (x.size() < 2) throw DomainError("points need at least two coordinates");
  for (double c : x) if (!std::isfinite(c)) throw DomainError("non-finite coordinate");
  for (double c : y) if (!std::isfinite(c)) throw DomainError("non-finite coordinate");
}

inline double distance(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(s);
}

inline double length(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

}  // namespace detail

/// Hyperbolic distance in the upper half-space, any dimension >= 2.
/// ch rho = 1 + |x-y|^2 / (2 x_n y_n), evaluated as 2 arsinh(|x-y| / (2 sqrt(x_n y_n))).
inline double rho_halfplane(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  const double xn = x.back();
  const double yn = y.back();
  if (!(xn > 0.0) || !(yn > 0.0)) throw DomainError("rho_halfplane: point not in the upper half-space");
  return 2.0 * std::asinh(detail::distance(x, y) / (2.0 * std::sqrt(xn * yn)));
}

inline double rho_halfplane(Point x, Point y) {
  const std::array<double, 2> a{x.x, x.y}, b{y.x, y.y};
  return rho_halfplane(std::span<const double>(a), std::span<const double>(b));
}

/// Hyperbolic distance in the unit ball via sh(rho/2) = |x-y| / sqrt((1-|x|^2)(1-|y|^2)).
inline double rho_disk(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  const double nx = detail::length(x);
  const double ny = detail::length(y);
  if (!(nx < 1.0) || !(ny < 1.0)) throw DomainError("rho_disk: point not in the open unit ball");
  const double d = detail::distance(x, y);
  return 2.0 * std::asinh(d / std::sqrt(detail::one_minus_sq(nx) * detail::one_minus_sq(ny)));
}

inline double rho_disk(Point x, Point y) {
  const std::array<double, 2> a{x.x, x.y}, b{y.x, y.y};
  return rho_disk(std::span<const double>(a), std::span<const double>(b));
}

/// The same distance through th(rho/2) = |x-y| / sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)).
inline double rho_disk_tanh_form(std::span<const double> x, std::span<const double> y) {
  detail::check_same_dimension(x, y);
  const double nx = detail::length(x);
  const double ny = detail::length(y);
  if (!(nx < 1.0) || !(ny < 1.0)) throw DomainError("rho_disk: point not in the open unit ball");
  const double d = detail::distance(x, y);
  const double w = detail::one_minus_sq(nx) * detail::one_minus_sq(ny);
  return 2.0 * std::atanh(d / std::sqrt(d * d + w));
}

inline double rho_disk_tanh_form(Point x, Point y) {
  const std::array<double, 2> a{x.x, x.y}, b{y.x, y.y};
  return rho_disk_tanh_form(std::span<const double>(a), std::span<const double>(b));
}

inline double rho(Point x, Point y, Model m) {
  return m == Model::HalfPlane ? rho_halfplane(x, y) : rho_disk(x, y);
}

// ---------------------------------------------------------------------------
// Moebius transformations.

/// Fractional-linear map z -> (az + b)/(cz + d) on the extended complex plane,
/// normalized to ad - bc = 1.
class Mobius {
public:
  using Complex = std::complex<double>;

  Mobius(Complex a, Complex b, Complex c, Complex d) {
    const Complex det = a * d - b * c;
    if (std::abs(det) == 0.0) throw DomainError("Mobius: singular coefficient matrix");
    const Complex s = std::sqrt(det);
    a_ = a / s;
    b_ = b / s;
    c_ = c / s;
    d_ = d / s;
  }

  static Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  IdealPoint apply(const IdealPoint& p) const {
    if (p.is_infinite()) {
      if (std::abs(c_) == 0.0) return IdealPoint::infinity();
      return IdealPoint(from_complex(a_ / c_));
    }
    const Complex z = to_complex(p.point());
    const Complex den = c_ * z + d_;
    if (std::abs(den) == 0.0) return IdealPoint::infinity();
    return IdealPoint(from_complex((a_ * z + b_) / den));
  }

  /// Image of a finite point that is known to stay finite.
  Point apply(Point p) const {
    const IdealPoint q = apply(IdealPoint(p));
    if (q.is_infinite()) throw DomainError("Mobius::apply: point mapped to infinity");
    return q.point();
  }

  Mobius inverse() const { return {d_, -b_, -c_, a_}; }

  /// (*this) o inner.
  Mobius compose(const Mobius& inner) const {
    return {a_ * inner.a_ + b_ * inner.c_, a_ * inner.b_ + b_ * inner.d_,
            c_ * inner.a_ + d_ * inner.c_, c_ * inner.b_ + d_ * inner.d_};
  }

  static Complex to_complex(Point p) { return {p.x, p.y}; }
  static Point from_complex(Complex z) { return {z.real(), z.imag()}; }

private:
  Complex a_, b_, c_, d_;
};

/// Cayley map H^2 -> B^2, z -> (z - i)/(z + i). It sends i to 0.
inline Mobius cayley_to_disk() { return {1.0, {0.0, -1.0}, 1.0, {0.0, 1.0}}; }
inline Mobius cayley_to_halfplane() { return cayley_to_disk().inverse(); }

/// Disk automorphism z -> (z - m)/(1 - conj(m) z), sending m to 0.
inline Mobius disk_translation(Point m) {
  const Mobius::Complex mc = Mobius::to_complex(m);
  return {1.0, -mc, -std::conj(mc), 1.0};
}

/// An element of Mob(H^2) sending the boundary point w to infinity; the
/// identity when w is already infinity.
inline Mobius mobius_halfplane_send_to_infinity(const IdealPoint& w) {
  if (w.is_infinite()) return Mobius::identity();
  const Point p = w.point();
  if (std::abs(p.y) > kRelTol * std::max(1.0, std::abs(p.x)))
    throw DomainError("mobius_halfplane_send_to_infinity: w is not on the real axis");
  // z -> -1/(z - w)
  return {0.0, -1.0, 1.0, -p.x};
}

// ---------------------------------------------------------------------------
// Constructions.

namespace detail {

inline void require_pair(Point x, Point y, Model m, const char* what) {
  require_in_model(x, m, what);
  require_in_model(y, m, what);
  if (x == y) throw DomainError(std::string(what) + ": coincident points");
}

inline std::array<IdealPoint, 2> ordered(Point a, Point b) {
  if (lex_less(b, a)) std::swap(a, b);
  return {IdealPoint(a), IdealPoint(b)};
}

// Endpoints on the unit circle of a circle orthogonal to it with center c.
inline std::array<IdealPoint, 2> orthogonal_circle_ends(Point c) {
  const double c2 = norm2(c);
  const Point foot = c / c2;
  const Point side = perp(c / std::sqrt(c2)) * std::sqrt(std::max(0.0, 1.0 - 1.0 / c2));
  return ordered(foot - side, foot + side);
}

inline Geodesic disk_line(Point direction) {
  Geodesic g;
  g.model = Model::Disk;
  g.shape = Geodesic::Shape::Line;
  g.line_point = {0.0, 0.0};
  g.line_direction = direction / norm(direction);
  g.ends = ordered(g.line_direction, -g.line_direction);
  return g;
}

inline Geodesic halfplane_vertical(double a) {
  Geodesic g;
  g.model = Model::HalfPlane;
  g.shape = Geodesic::Shape::Line;
  g.line_point = {a, 0.0};
  g.line_direction = {0.0, 1.0};
  g.ends = {IdealPoint(Point{a, 0.0}), IdealPoint::infinity()};
  return g;
}

inline Geodesic halfplane_arc(double t1, double t2) {
  Geodesic g;
  g.model = Model::HalfPlane;
  g.shape = Geodesic::Shape::Arc;
  g.arc = {{0.5 * (t1 + t2), 0.0}, 0.5 * std::abs(t2 - t1)};
  g.ends = ordered({t1, 0.0}, {t2, 0.0});
  return g;
}

inline Point disk_midpoint(Point x, Point y) {
  using C = Mobius::Complex;
  const C xc = Mobius::to_complex(x);
  const C yc = Mobius::to_complex(y);
  const C moved = (yc - xc) / (1.0 - std::conj(xc) * yc);
  const double r = std::abs(moved);
  // artanh t = artanh(r) / 2
  const double t = r / (1.0 + std::sqrt(one_minus_sq(r)));
  const C half = moved * (t / r);
  return Mobius::from_complex((half + xc) / (1.0 + std::conj(xc) * half));
}

}  // namespace detail

/// The complete geodesic through two distinct interior points.
inline Geodesic geodesic_through(Point x, Point y, Model m) {
  detail::require_pair(x, y, m, "geodesic_through");
  if (m == Model::HalfPlane) {
    const double scale = std::max({1.0, std::abs(x.x), std::abs(y.x)});
    if (std::abs(x.x - y.x) <= 1e-12 * scale) return detail::halfplane_vertical(0.5 * (x.x + y.x));
    const double c = (norm2(y) - norm2(x)) / (2.0 * (y.x - x.x));
    const double r = std::hypot(x.x - c, x.y);
    Geodesic g = detail::halfplane_arc(c - r, c + r);
    g.arc = {{c, 0.0}, r};
    return g;
  }
  const double scale = std::max(norm2(x), norm2(y));
  if (std::abs(cross(x, y)) <= 1e-12 * scale) return detail::disk_line(norm2(x) >= norm2(y) ? x : y);
  // The orthogonal circle: 2 x.c = |x|^2 + 1 and 2 y.c = |y|^2 + 1.
  const double det = cross(x, y);
  const double rx = 0.5 * (norm2(x) + 1.0);
  const double ry = 0.5 * (norm2(y) + 1.0);
  const Point c{(rx * y.y - ry * x.y) / det, (x.x * ry - y.x * rx) / det};
  Geodesic g;
  g.model = Model::Disk;
  g.shape = Geodesic::Shape::Arc;
  g.arc = {c, std::sqrt(norm2(c) - 1.0)};
  g.ends = detail::orthogonal_circle_ends(c);
  return g;
}

/// The point of J[x,y] at equal hyperbolic distance from x and y. Computed in
/// the disk by moving x to 0, halving the radial distance and moving back; the
/// half-plane case goes through the Cayley map.
inline Point hyperbolic_midpoint(Point x, Point y, Model m) {
  detail::require_pair(x, y, m, "hyperbolic_midpoint");
  if (m == Model::Disk) return detail::disk_midpoint(x, y);
  const Mobius to_disk = cayley_to_disk();
  const Point md = detail::disk_midpoint(to_disk.apply(x), to_disk.apply(y));
  return to_disk.inverse().apply(md);
}

/// Smallest hyperbolic separation for which a bisector is constructed.
inline constexpr double kMinBisectorSeparation = 1e-8;

/// The hyperbolic perpendicular bisector L_xy: the locus of points at equal
/// hyperbolic distance from x and y.
///
/// In both models the locus is an Apollonius-type curve. In H^2 it is
/// y_n |p - x|^2 = x_n |p - y|^2; in B^2 it is (1-|y|^2)|p - x|^2 =
/// (1-|x|^2)|p - y|^2. The ideal endpoints are obtained directly by
/// intersecting with the model boundary, which stays well conditioned when
/// one endpoint runs off to infinity.
inline Geodesic perpendicular_bisector(Point x, Point y, Model m) {
  detail::require_pair(x, y, m, "perpendicular_bisector");
  if (rho(x, y, m) < kMinBisectorSeparation)
    throw DomainError("perpendicular_bisector: points are hyperbolically too close");

  if (m == Model::HalfPlane) {
    // Boundary points (t,0): A t^2 - 2 B t + C = 0.
    const double a = y.y - x.y;
    const double b = y.y * x.x - x.y * y.x;
    const double c = y.y * norm2(x) - x.y * norm2(y);
    if (std::abs(a) <= 1e-12 * std::max(x.y, y.y)) return detail::halfplane_vertical(0.5 * (x.x + y.x));
    const double disc = std::sqrt(std::max(0.0, b * b - a * c));
    const double q = b + std::copysign(disc, b);
    if (q == 0.0) return detail::halfplane_arc(-std::sqrt(-c / a), std::sqrt(-c / a));
    return detail::halfplane_arc(q / a, c / q);
  }

  const double a = detail::one_minus_sq(norm(x));
  const double b = detail::one_minus_sq(norm(y));
  // Boundary points p: p.g = h.
  const Point g = y * a - x * b;
  const double h = 0.5 * (a * (1.0 + norm2(y)) - b * (1.0 + norm2(x)));
  const double gn = norm(g);
  if (std::abs(h) <= 1e-12 * gn) return detail::disk_line(perp(g));
  Geodesic out;
  out.model = Model::Disk;
  out.shape = Geodesic::Shape::Arc;
  const Point c = g * (1.0 / h);
  out.arc = {c, std::sqrt(norm2(c) - 1.0)};
  out.ends = detail::orthogonal_circle_ends(c);
  return out;
}

/// A disk automorphism T with T(x) = -T(y): the translation taking the
/// hyperbolic midpoint of x and y to the origin. It is the identity when x
/// and y are already symmetric.
inline Mobius mobius_disk_symmetrize(Point x, Point y) {
  detail::require_pair(x, y, Model::Disk, "mobius_disk_symmetrize");
  if (x == -y) return Mobius::identity();
  return disk_translation(hyperbolic_midpoint(x, y, Model::Disk));
}

/// Interior points spread along a geodesic; used by property checks.
inline std::vector<Point> sample_geodesic(const Geodesic& g, int count) {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double s = (i + 1.0) / (count + 1.0);
    if (g.shape == Geodesic::Shape::Line) {
      if (g.model == Model::HalfPlane) {
        out.push_back(g.line_point + g.line_direction * std::exp(-4.0 + 8.0 * s));
      } else {
        out.push_back(g.line_direction * std::tanh(-3.0 + 6.0 * s));
      }
      continue;
    }
    if (g.model == Model::HalfPlane) {
      const double th = std::numbers::pi * s;
      out.push_back(g.arc.center + Point{std::cos(th), std::sin(th)} * g.arc.radius);
      continue;
    }
    // The interior arc of an orthogonal circle is its minor arc.
    const Point e1 = g.ends[0].point() - g.arc.center;
    const Point e2 = g.ends[1].point() - g.arc.center;
    const double a1 = std::atan2(e1.y, e1.x);
    const double sweep = std::atan2(cross(e1, e2), dot(e1, e2));
    const double th = a1 + sweep * s;
    out.push_back(g.arc.center + Point{std::cos(th), std::sin(th)} * g.arc.radius);
  }
  return out;
}

}  // namespace vangle

#endif  // VANGLE_HYPERBOLIC_HPP
