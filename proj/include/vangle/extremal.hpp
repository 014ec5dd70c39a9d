#ifndef VANGLE_EXTREMAL_HPP
#define VANGLE_EXTREMAL_HPP

#include <array>
#include <cmath>

#include "vangle/boundary_sup.hpp"
#include "vangle/hyperbolic.hpp"

namespace vangle {

// The visual angle metric of H^2 and B^2 is attained at an ideal endpoint of
// the hyperbolic perpendicular bisector L_xy of x and y. Both endpoints carry
// a circle through x and y tangent to the boundary; the one subtending the
// larger angle is extremal. When L_xy ends at infinity (equal heights in
// H^2), the finite endpoint wins.

enum class CaseTag { Symmetric, Generic, InfiniteEndpoint };

inline const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::Symmetric: return "symmetric";
    case CaseTag::Generic: return "generic";
    case CaseTag::InfiniteEndpoint: return "infinite-endpoint";
  }
  return "?";
}

struct Candidate {
  IdealPoint point;
  double angle = 0.0;
};

struct ExtremalResult {
  Model model = Model::Disk;
  double value = 0.0;
  IdealPoint extremal_point = IdealPoint::infinity();
  Geodesic bisector;
  std::array<Candidate, 2> candidates{Candidate{IdealPoint::infinity(), 0.0}, Candidate{IdealPoint::infinity(), 0.0}};
  CaseTag case_tag = CaseTag::Generic;
  /// Tangency defect at extremal_point.
  double certificate = 0.0;
  /// Set when the certificate failed and the value came from brute_force_sup.
  bool fallback = false;
  /// brute-force value minus construction value, when fallback is set.
  double discrepancy = 0.0;
};

/// Certificates above this reject the construction.
inline constexpr double kCertificateTol = 1e-8;
/// Candidate angles closer than this are treated as a tie.
inline constexpr double kTieMargin = 1e-10;

/// Tangency defect of the circle through x, z, y against the model boundary,
/// with z a finite boundary point. In H^2 it is radius - |center_y|, in B^2
/// |center| + radius - 1. Both are >= 0 for any circle through a boundary
/// point and vanish exactly when the circle is internally tangent there.
/// Evaluated in a frame centered at z to avoid cancellation.
inline double tangency_certificate(Point x, Point y, const IdealPoint& z, Model m) {
  if (z.is_infinite()) throw DomainError("tangency_certificate: z must be finite");
  require_in_model(x, m, "tangency_certificate");
  require_in_model(y, m, "tangency_certificate");
  const Point zp = z.point();
  const Point p = x - zp;
  const Point q = y - zp;
  const double scale = std::max({norm(p), norm(q), dist(x, y)});
  if (std::abs(cross(p, q)) < kCollinearTol * scale * scale)
    throw DegenerateError("tangency_certificate: x, y and z are collinear");
  const Point c = local_circumcenter(p, q).offset;
  const double r = norm(c);
  if (m == Model::HalfPlane) return c.x * c.x / (r + std::abs(c.y));

  const Point zhat = zp / norm(zp);
  const double along = dot(zhat, c);
  const double across = cross(zhat, c);
  // delta = r + z.c >= 0, rewritten without cancellation.
  const double delta = across * across / (r - along);
  const double s = 1.0 - r;
  const double root = std::sqrt(s * s + 2.0 * delta);
  return s > 0.0 ? 2.0 * delta / (root + s) : root - s;
}

namespace detail {

inline ExtremalResult pick_extremal(Point x, Point y, Model m, const Geodesic& bisector, CaseTag tag) {
  ExtremalResult r;
  r.model = m;
  r.bisector = bisector;
  r.case_tag = tag;
  for (std::size_t i = 0; i < 2; ++i)
    r.candidates[i] = {bisector.ends[i], evaluate_functional(Functional::Angle, x, y, bisector.ends[i])};

  const Candidate& a = r.candidates[0];
  const Candidate& b = r.candidates[1];
  const Candidate* win = a.angle >= b.angle ? &a : &b;
  if (std::abs(a.angle - b.angle) < kTieMargin && !a.point.is_infinite() && !b.point.is_infinite())
    win = lex_less(b.point.point(), a.point.point()) ? &b : &a;
  r.value = win->angle;
  r.extremal_point = win->point;
  r.certificate = tangency_certificate(x, y, r.extremal_point, m);

  if (!(std::abs(r.certificate) < kCertificateTol)) {
    const Domain d = m == Model::HalfPlane ? Domain{HalfPlane{}} : Domain{UnitDisk{}};
    const MetricReport brute = brute_force_sup(d, x, y, Functional::Angle, 4096);
    r.fallback = true;
    r.discrepancy = brute.value - r.value;
    r.value = brute.value;
    if (brute.witness) r.extremal_point = *brute.witness;
  }
  return r;
}

}  // namespace detail

/// Extremal point of v_{H^2}(x, y) from the bisector construction.
inline ExtremalResult extremal_halfplane(Point x, Point y) {
  const Geodesic bisector = perpendicular_bisector(x, y, Model::HalfPlane);
  const bool infinite = bisector.ends[0].is_infinite() || bisector.ends[1].is_infinite();
  return detail::pick_extremal(x, y, Model::HalfPlane, bisector, infinite ? CaseTag::InfiniteEndpoint : CaseTag::Generic);
}

/// Extremal point of v_{B^2}(x, y) from the bisector construction. The
/// symmetric tag (x = -y) is diagnostic; both endpoints are always compared.
inline ExtremalResult extremal_disk(Point x, Point y) {
  const Geodesic bisector = perpendicular_bisector(x, y, Model::Disk);
  const bool symmetric = norm(x + y) <= 1e-12;
  return detail::pick_extremal(x, y, Model::Disk, bisector, symmetric ? CaseTag::Symmetric : CaseTag::Generic);
}

inline ExtremalResult extremal(Point x, Point y, Model m) {
  return m == Model::HalfPlane ? extremal_halfplane(x, y) : extremal_disk(x, y);
}

}  // namespace vangle

#endif  // VANGLE_EXTREMAL_HPP
