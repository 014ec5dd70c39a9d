#ifndef VANGLE_GOLDEN_HPP
#define VANGLE_GOLDEN_HPP

#include <cmath>

namespace vangle {

struct ScalarExtremum {
  double arg = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of a unimodal f on [a, b]. Stops when
/// the bracket is narrower than tol (absolute) or after max_iter steps. The
/// bracket endpoints are evaluated too, so a monotone f returns its endpoint
/// maximum.
template <class F>
ScalarExtremum golden_section_max(F&& f, double a, double b, double tol = 1e-13, int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  ScalarExtremum best = fc >= fd ? ScalarExtremum{c, fc} : ScalarExtremum{d, fd};
  for (double e : {a, b}) {
    const double fe = f(e);
    if (fe > best.value) best = {e, fe};
  }
  return best;
}

/// Minimizing counterpart of golden_section_max.
template <class F>
ScalarExtremum golden_section_min(F&& f, double a, double b, double tol = 1e-13, int max_iter = 200) {
  ScalarExtremum r = golden_section_max([&](double t) { return -f(t); }, a, b, tol, max_iter);
  r.value = -r.value;
  return r;
}

}  // namespace vangle

#endif  // VANGLE_GOLDEN_HPP
