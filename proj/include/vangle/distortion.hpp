#ifndef VANGLE_DISTORTION_HPP
#define VANGLE_DISTORTION_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "vangle/domain.hpp"
#include "vangle/metrics.hpp"
#include "vangle/specfun.hpp"

namespace vangle {

/// Groetzsch ring constant of the plane.
inline constexpr double kLambda2 = 4.0;

/// Known enclosure of the Groetzsch ring constant in dimension n:
/// [4, 2 e^{n-1}].
inline std::pair<double, double> lambda_interval(int n) { return {4.0, 2.0 * std::exp(n - 1.0)}; }

/// Constants of the Hoelder-type distortion bounds for K-quasiconformal maps.
///
/// alpha = K^{1/(1-n)}, and with L = lambda_n^{2-alpha}:
///   L t0^alpha = 1/2,  L t1^alpha = 1/4,
///   C1 = max{2 L (2+t0)^alpha, ((2+t0)/t0)^alpha}     (triangular ratio),
///   C2 = max{2^{3+2 alpha} L, pi (4/t1)^alpha}          (visual angle).
///
/// For n = 2 lambda is exactly 4. For n >= 3 only the enclosure is known and
/// the upper end 2e^{n-1} is used; every constant grows with lambda, so the
/// bounds stay valid.
struct DistortionConstants {
  double K = 1.0;
  int n = 2;
  double alpha = 1.0;
  double lambda = kLambda2;
  double lambda_lo = 4.0;
  double lambda_hi = 4.0;
  double t0 = 0.0;
  double t1 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
};

inline DistortionConstants constants(double k, int n) {
  if (!(k >= 1.0) || !std::isfinite(k)) throw DomainError("constants: K must be >= 1");
  if (n < 2) throw DomainError("constants: dimension must be >= 2");
  DistortionConstants c;
  c.K = k;
  c.n = n;
  c.alpha = std::pow(k, 1.0 / (1.0 - n));
  std::tie(c.lambda_lo, c.lambda_hi) = lambda_interval(n);
  c.lambda = n == 2 ? kLambda2 : c.lambda_hi;
  const double a = c.alpha;
  const double l = std::pow(c.lambda, 2.0 - a);
  c.t0 = std::pow(2.0 * l, -1.0 / a);
  c.t1 = std::pow(4.0 * l, -1.0 / a);
  c.C1 = std::max(2.0 * l * std::pow(2.0 + c.t0, a), std::pow((2.0 + c.t0) / c.t0, a));
  c.C2 = std::max(std::pow(2.0, 3.0 + 2.0 * a) * l, std::numbers::pi * std::pow(4.0 / c.t1, a));
  return c;
}

/// Upper bound lambda^{1-alpha} r^alpha for phi_K(r) in the plane (alpha = 1/K).
inline double phi_upper_bound(double k, double r) {
  const double a = 1.0 / k;
  return std::pow(kLambda2, 1.0 - a) * std::pow(r, a);
}

// ---------------------------------------------------------------------------
// Example maps.

/// f(x) = |x|^{alpha-1} x on the unit disk; K-quasiconformal with K = 1/alpha.
struct RadialStretch {
  double alpha = 1.0;
};

/// g(z) = exp((z+1)/(z-1)), an analytic map of B^2 onto B^2 minus the origin.
/// It is not quasiconformal.
struct ExpCayley {};

using QcMap = std::variant<RadialStretch, ExpCayley>;

inline Domain source_domain(const QcMap&) { return UnitDisk{}; }

inline Domain target_domain(const QcMap& m) {
  return std::holds_alternative<ExpCayley>(m) ? Domain{PuncturedDisk{}} : Domain{UnitDisk{}};
}

/// Maximal dilatation; infinity for ExpCayley.
inline double dilatation(const QcMap& m) {
  if (const auto* s = std::get_if<RadialStretch>(&m)) return 1.0 / s->alpha;
  return std::numeric_limits<double>::infinity();
}

inline Point apply_qc_map(const QcMap& m, Point p) {
  if (!(norm2(p) < 1.0)) throw DomainError("apply_qc_map: point outside the unit disk");
  if (const auto* s = std::get_if<RadialStretch>(&m)) {
    if (!(s->alpha > 0.0 && s->alpha <= 1.0)) throw DomainError("RadialStretch: alpha must lie in (0,1]");
    const double r = norm(p);
    if (r == 0.0) return p;
    return p * std::pow(r, s->alpha - 1.0);
  }
  const std::complex<double> z{p.x, p.y};
  const std::complex<double> w = std::exp((z + 1.0) / (z - 1.0));
  if (std::abs(w) < 1e-300) throw DomainError("apply_qc_map: image underflows towards the puncture");
  return {w.real(), w.imag()};
}

// ---------------------------------------------------------------------------
// Numerical verification of the distortion theorems.

enum class QcTheorem { TriangularRatio, VisualAngle, Both };

struct QcPairResult {
  Point x, y;
  double s_lhs = 0.0, s_bound = 0.0, s_margin = 0.0;
  double v_lhs = 0.0, v_bound = 0.0, v_margin = 0.0;
};

struct QcReport {
  DistortionConstants constants;
  bool s_checked = false;
  bool v_checked = false;
  std::vector<QcPairResult> pairs;
  std::size_t s_violations = 0;
  std::size_t v_violations = 0;
  double s_worst_margin = -std::numeric_limits<double>::infinity();
  double v_worst_margin = -std::numeric_limits<double>::infinity();
  /// Largest margin over both inequalities; <= tolerance means no violation.
  double max_violation() const { return std::max(s_worst_margin, v_worst_margin); }
};

/// Scale-free margin (lhs - bound) / max(1, bound); positive means violated.
inline double scaled_margin(double lhs, double bound) { return (lhs - bound) / std::max(1.0, std::abs(bound)); }

/// Checks s_{D'}(f x, f y) <= C1 s_D(x,y)^alpha and v_{D'}(f x, f y) <=
/// C2 v_D(x,y)^alpha pair by pair. The s inequality needs a connected
/// boundary of D and the v inequality a convex D; a request that violates
/// these hypotheses is rejected.
template <class Map>
QcReport verify_theorem_qc(double k, Map&& f, const Domain& source, const Domain& target,
                           std::span<const std::pair<Point, Point>> pairs, QcTheorem which = QcTheorem::Both,
                           double tolerance = 1e-9) {
  const bool want_s = which != QcTheorem::VisualAngle;
  const bool want_v = which != QcTheorem::TriangularRatio;
  // Of the supported domains only the punctured disk has a disconnected
  // boundary, and it is also the only nonconvex one.
  if (want_s && std::holds_alternative<PuncturedDisk>(source))
    throw DomainError("verify_theorem_qc: the triangular ratio bound needs a source domain with connected boundary");
  if (want_v && !is_convex(source))
    throw DomainError("verify_theorem_qc: the visual angle bound needs a convex source domain");

  QcReport report;
  report.constants = constants(k, 2);
  report.s_checked = want_s;
  report.v_checked = want_v;
  const double a = report.constants.alpha;
  for (const auto& [x, y] : pairs) {
    QcPairResult r{x, y};
    const Point fx = f(x);
    const Point fy = f(y);
    if (want_s) {
      r.s_lhs = s_metric(target, fx, fy).value;
      r.s_bound = report.constants.C1 * std::pow(s_metric(source, x, y).value, a);
      r.s_margin = scaled_margin(r.s_lhs, r.s_bound);
      report.s_worst_margin = std::max(report.s_worst_margin, r.s_margin);
      if (r.s_margin > tolerance) ++report.s_violations;
    }
    if (want_v) {
      r.v_lhs = v_metric(target, fx, fy).value;
      r.v_bound = report.constants.C2 * std::pow(v_metric(source, x, y).value, a);
      r.v_margin = scaled_margin(r.v_lhs, r.v_bound);
      report.v_worst_margin = std::max(report.v_worst_margin, r.v_margin);
      if (r.v_margin > tolerance) ++report.v_violations;
    }
    report.pairs.push_back(r);
  }
  return report;
}

inline QcReport verify_theorem_qc(double k, const QcMap& map, std::span<const std::pair<Point, Point>> pairs,
                                  QcTheorem which = QcTheorem::Both, double tolerance = 1e-9) {
  return verify_theorem_qc(
      k, [&](Point p) { return apply_qc_map(map, p); }, source_domain(map), target_domain(map), pairs, which,
      tolerance);
}

}  // namespace vangle

#endif  // VANGLE_DISTORTION_HPP
