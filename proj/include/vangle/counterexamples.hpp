#ifndef VANGLE_COUNTEREXAMPLES_HPP
#define VANGLE_COUNTEREXAMPLES_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "vangle/distortion.hpp"
#include "vangle/metrics.hpp"

namespace vangle {

/// s and v on the punctured disk at x_k = (1/k, 0), y_k = (1/k^2, 0). The
/// puncture makes s tend to 1 while v tends to 0, so no inequality
/// v <= C s can hold there.
struct PuncturedRow {
  int k = 0;
  double s = 0.0;
  double v = 0.0;
  double ratio = 0.0;
  double s_closed = 0.0;         // (k-1)/(k+1)
  double v_closed = 0.0;         // arctan(k / ((k+1) sqrt(1+k^2)))
  double ratio_lower_bound = 0.0;  // (k-1) / ((k+1) arctan(1/(k+1)))
};

inline std::vector<PuncturedRow> punctured_table(int kmax) {
  if (kmax < 2) throw DomainError("punctured_table: kmax must be at least 2");
  std::vector<PuncturedRow> rows;
  const Domain g = PuncturedDisk{};
  for (int k = 2; k <= kmax; ++k) {
    const double kk = k;
    const Point x{1.0 / kk, 0.0};
    const Point y{1.0 / (kk * kk), 0.0};
    PuncturedRow r;
    r.k = k;
    r.s = s_metric(g, x, y).value;
    r.v = v_metric(g, x, y).value;
    r.ratio = r.s / r.v;
    r.s_closed = (kk - 1.0) / (kk + 1.0);
    r.v_closed = std::atan(kk / ((kk + 1.0) * std::sqrt(1.0 + kk * kk)));
    r.ratio_lower_bound = (kk - 1.0) / ((kk + 1.0) * std::atan(1.0 / (kk + 1.0)));
    rows.push_back(r);
  }
  return rows;
}

/// The analytic map g(z) = exp((z+1)/(z-1)) on r_k = (k-1)/(k+1): s in B^2
/// decays like 1/(3+2k) while s of the images in B^2 minus 0 stays at
/// (e-1)/(e+1).
struct AnalyticRow {
  int k = 0;
  double r_k = 0.0;
  double r_next = 0.0;
  double s_before = 0.0;
  double s_before_closed = 0.0;  // 1/(3+2k)
  double s_after = 0.0;
  double s_after_closed = 0.0;   // (e-1)/(e+1)
};

inline std::vector<AnalyticRow> analytic_table(int kmax) {
  if (kmax < 1) throw DomainError("analytic_table: kmax must be at least 1");
  std::vector<AnalyticRow> rows;
  const QcMap g = ExpCayley{};
  const double e = std::numbers::e;
  for (int k = 1; k <= kmax; ++k) {
    const double kk = k;
    AnalyticRow r;
    r.k = k;
    r.r_k = (kk - 1.0) / (kk + 1.0);
    r.r_next = kk / (kk + 2.0);
    const Point a{r.r_k, 0.0};
    const Point b{r.r_next, 0.0};
    r.s_before = s_metric(UnitDisk{}, a, b).value;
    r.s_before_closed = 1.0 / (3.0 + 2.0 * kk);
    r.s_after = s_metric(PuncturedDisk{}, apply_qc_map(g, a), apply_qc_map(g, b)).value;
    r.s_after_closed = (e - 1.0) / (e + 1.0);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace vangle

#endif  // VANGLE_COUNTEREXAMPLES_HPP
