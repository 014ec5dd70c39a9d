#ifndef VANGLE_SPECFUN_HPP
#define VANGLE_SPECFUN_HPP

#include <cmath>
#include <numbers>

#include "vangle/errors.hpp"

namespace vangle {

// Plane Groetzsch ring machinery. With r' = sqrt(1 - r^2) and K(r) the
// complete elliptic integral of the first kind,
//
//   mu(r)    = (pi/2) K(r') / K(r),         the Groetzsch modulus,
//   phi_K(r) = mu^{-1}(mu(r) / K),          the plane distortion function,
//
// and the capacity of the Groetzsch ring is gamma_2(1/r) = 2 pi / mu(r).

/// Arithmetic-geometric mean of two positive numbers.
inline double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("agm: arguments must be positive and finite");
  for (int i = 0; i < 64 && std::abs(a - b) >= 1e-15 * a; ++i) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return 0.5 * (a + b);
}

/// sqrt(1 - r^2) without cancellation near r = 1.
inline double complementary(double r) { return std::sqrt((1.0 - r) * (1.0 + r)); }

/// Complete elliptic integral of the first kind K(r) = pi / (2 agm(1, r')).
inline double ellip_k(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("ellip_k: modulus must lie in (0,1)");
  return std::numbers::pi / (2.0 * agm(1.0, complementary(r)));
}

/// Groetzsch modulus mu(r), strictly decreasing from +inf to 0 on (0,1).
/// Written as (pi/2) agm(1, r') / agm(1, r), so mu(r) mu(r') = pi^2/4 holds
/// to rounding.
inline double mu(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("mu: argument must lie in (0,1)");
  return 0.5 * std::numbers::pi * agm(1.0, complementary(r)) / agm(1.0, r);
}

namespace detail {

inline constexpr double kMuLow = 1e-15;
inline constexpr double kMuHigh = 1.0 - 1e-15;

// mu^{-1}(m) for m >= pi/2, i.e. r <= 1/sqrt(2): bisection to the last bit.
inline double mu_inv_small_r(double m) {
  // Below kMuLow, mu(r) = log(4/r) to double precision.
  if (m >= mu(kMuLow)) return 4.0 * std::exp(-m);
  double lo = kMuLow;
  double hi = std::numbers::sqrt2 / 2.0 + 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (mu(mid) > m ? lo : hi) = mid;
  }
  return std::abs(mu(lo) - m) <= std::abs(mu(hi) - m) ? lo : hi;
}

}  // namespace detail

/// The complement sqrt(1 - r^2) of r = mu^{-1}(m), computed through
/// mu(r) mu(r') = pi^2/4 so that it keeps full relative precision when r is
/// close to 1.
inline double mu_inv_complement(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mu_inv: argument must be positive and finite");
  const double dual = std::numbers::pi * std::numbers::pi / (4.0 * m);
  if (dual >= std::numbers::pi / 2.0) return detail::mu_inv_small_r(dual);
  return complementary(detail::mu_inv_small_r(m));
}

/// The unique r in (0,1) with mu(r) = m.
inline double mu_inv(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mu_inv: argument must be positive and finite");
  if (m >= std::numbers::pi / 2.0) return detail::mu_inv_small_r(m);
  const double r = complementary(mu_inv_complement(m));
  return r < 1.0 ? r : std::nextafter(1.0, 0.0);
}

/// Plane distortion function phi_K(r) = mu^{-1}(mu(r) / K).
inline double phi(double k, double r) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("phi: K must be positive");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi: r must lie in (0,1)");
  return mu_inv(mu(r) / k);
}

/// sqrt(1 - phi_K(r)^2), accurate when phi_K(r) is close to 1.
inline double phi_complement(double k, double r) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("phi: K must be positive");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi: r must lie in (0,1)");
  return mu_inv_complement(mu(r) / k);
}

/// Theta_{K,2}(t) = x^2 / (1 - x^2) with x = phi_{2K}(t).
inline double theta(double k, double t) {
  if (!(k >= 1.0)) throw DomainError("theta: K must be at least 1");
  const double x = phi(2.0 * k, t);
  const double xc = phi_complement(2.0 * k, t);
  return x * x / (xc * xc);
}

}  // namespace vangle

#endif  // VANGLE_SPECFUN_HPP
