#ifndef VANGLE_BOUNDARY_SUP_HPP
#define VANGLE_BOUNDARY_SUP_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "vangle/domain.hpp"
#include "vangle/golden.hpp"

namespace vangle {

enum class Method { ClosedForm, Construction, PerEdgeAnalytic, NumericSup };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Construction: return "construction";
    case Method::PerEdgeAnalytic: return "per-edge-analytic";
    case Method::NumericSup: return "numeric-sup";
  }
  return "?";
}

/// Value of a boundary-dependent metric, with the boundary point that
/// attains the supremum when there is one.
struct MetricReport {
  double value = 0.0;
  std::optional<IdealPoint> witness;
  Method method = Method::ClosedForm;
};

/// The two functionals whose boundary suprema define v_G and s_G.
enum class Functional { Angle, Ratio };

/// angle(x,z,y) or |x-y| / (|x-z| + |z-y|) at a finite boundary point z.
inline double evaluate_functional(Functional f, Point x, Point y, Point z) {
  if (f == Functional::Angle) return angle(x, z, y);
  return dist(x, y) / (dist(x, z) + dist(z, y));
}

/// Value of the functional at an ideal point; infinity contributes 0.
inline double evaluate_functional(Functional f, Point x, Point y, const IdealPoint& z) {
  return z.is_infinite() ? 0.0 : evaluate_functional(f, x, y, z.point());
}

namespace detail {

// One smooth piece of the boundary, parametrized on [lo, hi].
struct BoundaryPiece {
  std::function<Point(double)> at;
  double lo = 0.0;
  double hi = 1.0;
  bool periodic = false;
};

struct Sample {
  double value;
  std::size_t piece;
  std::size_t index;
};

}  // namespace detail

/// Independent numeric supremum over the boundary: samples every boundary
/// piece on a grid, then refines the three best discrete local maxima by
/// golden-section search. Polygon edges get grid_size samples each, the
/// circle grid_size angles, and the half-plane boundary a sinh-spaced window
/// of half-width 1e6 scaled by max(x_n, y_n, |x - reflected y|). Isolated
/// boundary points (the puncture, infinity) are evaluated directly.
inline MetricReport brute_force_sup(const Domain& d, Point x, Point y, Functional f, int grid_size = 4096) {
  require_inside(d, x, "brute_force_sup");
  require_inside(d, y, "brute_force_sup");
  if (grid_size < 16) throw DomainError("brute_force_sup: grid_size must be at least 16");
  if (x == y) return {0.0, std::nullopt, Method::NumericSup};

  std::vector<detail::BoundaryPiece> pieces;
  std::vector<IdealPoint> isolated;
  auto circle = [](double th) { return Point{std::cos(th), std::sin(th)}; };

  std::visit(Overloaded{[&](const HalfPlane&) {
                          const double scale = std::max({x.y, y.y, dist(x, Point{y.x, -y.y})});
                          const double c = 0.5 * (x.x + y.x);
                          const double u = std::asinh(1e6);
                          pieces.push_back({[=](double s) { return Point{c + scale * std::sinh(s), 0.0}; }, -u, u, false});
                          isolated.push_back(IdealPoint::infinity());
                        },
                        [&](const UnitDisk&) { pieces.push_back({circle, 0.0, 2.0 * std::numbers::pi, true}); },
                        [&](const PuncturedDisk&) {
                          pieces.push_back({circle, 0.0, 2.0 * std::numbers::pi, true});
                          isolated.push_back(IdealPoint(Point{0.0, 0.0}));
                        },
                        [&](const ConvexPolygon& poly) {
                          for (std::size_t i = 0; i < poly.size(); ++i) {
                            const Segment e = poly.edge(i);
                            pieces.push_back({[=](double s) { return e.at(s); }, 0.0, 1.0, false});
                          }
                        }},
             d);

  auto value_at = [&](const detail::BoundaryPiece& p, double s) { return evaluate_functional(f, x, y, p.at(s)); };
  auto param = [&](const detail::BoundaryPiece& p, long i) {
    const long n = p.periodic ? grid_size : grid_size - 1;
    return p.lo + (p.hi - p.lo) * static_cast<double>(i) / static_cast<double>(n);
  };

  std::vector<detail::Sample> maxima;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    std::vector<double> vals(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) vals[static_cast<std::size_t>(i)] = value_at(p, param(p, i));
    const std::size_t n = vals.size();
    for (std::size_t i = 0; i < n; ++i) {
      const bool has_prev = p.periodic || i > 0;
      const bool has_next = p.periodic || i + 1 < n;
      const double prev = has_prev ? vals[(i + n - 1) % n] : -1.0;
      const double next = has_next ? vals[(i + 1) % n] : -1.0;
      if (vals[i] >= prev && vals[i] >= next) maxima.push_back({vals[i], k, i});
    }
  }
  std::sort(maxima.begin(), maxima.end(), [](const auto& a, const auto& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.piece != b.piece ? a.piece < b.piece : a.index < b.index;
  });

  MetricReport best{-1.0, std::nullopt, Method::NumericSup};
  for (const IdealPoint& z : isolated) {
    const double v = evaluate_functional(f, x, y, z);
    if (v > best.value) best = {v, z, Method::NumericSup};
  }
  const std::size_t rounds = std::min<std::size_t>(3, maxima.size());
  for (std::size_t r = 0; r < rounds; ++r) {
    const auto& m = maxima[r];
    const auto& p = pieces[m.piece];
    const long i = static_cast<long>(m.index);
    double a = param(p, i - 1);
    double b = param(p, i + 1);
    if (!p.periodic) {
      a = std::max(a, p.lo);
      b = std::min(b, p.hi);
    }
    const ScalarExtremum e = golden_section_max([&](double s) { return value_at(p, s); }, a, b, 1e-14 * std::max(1.0, std::abs(p.hi - p.lo)));
    const double v = std::max(e.value, m.value);
    if (v > best.value) {
      const double s = e.value >= m.value ? e.arg : param(p, i);
      best = {v, IdealPoint(p.at(s)), Method::NumericSup};
    }
  }
  return best;
}

}  // namespace vangle

#endif  // VANGLE_BOUNDARY_SUP_HPP
