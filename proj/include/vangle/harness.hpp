#ifndef VANGLE_HARNESS_HPP
#define VANGLE_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "vangle/counterexamples.hpp"
#include "vangle/distortion.hpp"
#include "vangle/io.hpp"
#include "vangle/metrics.hpp"
#include "vangle/specfun.hpp"

namespace vangle {

inline constexpr std::uint64_t kDefaultSeed = 20250101;
inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSeedEnv = "ANGLES_SEED";

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "convex-comparison", "disk-chain",   "disk-s-bounds", "disk-v-bounds", "extremal-oracle", "monotonicity",
      "noncomparability",  "qc-s",         "qc-v",          "analytic-counterexample", "specfun"};
  return names;
}

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 10000;
  double tolerance = 1e-9;
  /// Domains for convex-comparison; empty means disk, half-plane, punctured
  /// disk and 50 random convex polygons.
  std::vector<Domain> domains;
  /// Empty means every suite.
  std::vector<std::string> suites;
  /// 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 0;

  void validate() const {
    if (samples < 1) throw ConfigError("samples: must be at least 1");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw ConfigError("tolerance: must be positive");
    for (std::size_t i = 0; i < suites.size(); ++i)
      if (std::find(suite_names().begin(), suite_names().end(), suites[i]) == suite_names().end())
        throw ConfigError("suites[" + std::to_string(i) + "]: unknown suite '" + suites[i] + "'");
  }
};

/// Seed from ANGLES_SEED when set, otherwise the default.
inline std::uint64_t seed_from_environment() {
  const char* s = std::getenv(kSeedEnv);
  if (s == nullptr || *s == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 0);
  if (end == s || *end != '\0') throw ConfigError(std::string(kSeedEnv) + ": not an unsigned integer");
  return v;
}

struct SuiteResult {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  Json worst_case = nullptr;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = 0.0;
  std::map<std::string, SuiteResult> suites;
  double wall_seconds = 0.0;

  std::size_t total_violations() const {
    std::size_t n = 0;
    for (const auto& [name, r] : suites) n += r.violations;
    return n;
  }
  bool passed() const { return total_violations() == 0; }
};

/// Report as JSON. Wall time is left out so that a fixed seed gives
/// byte-identical output.
inline Json to_json(const VerificationReport& r) {
  Json suites = Json::object();
  for (const auto& [name, s] : r.suites) {
    suites[name] = {{"checked", s.checked},
                    {"violations", s.violations},
                    {"worst_margin", std::isfinite(s.worst_margin) ? Json(s.worst_margin) : Json(nullptr)},
                    {"worst_case", s.worst_case}};
  }
  return {{"suites", suites},
          {"seed", r.seed},
          {"metadata", {{"version", kVersion}, {"samples", r.samples}, {"tolerance", r.tolerance}}}};
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, const std::string& suite, std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return splitmix64(splitmix64(seed ^ h) + index);
}

using Rng = std::mt19937_64;

inline double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

inline Point sample_disk(Rng& g) {
  const double r = std::sqrt(uniform(g, 0.0, 1.0));
  const double t = uniform(g, 0.0, 2.0 * std::numbers::pi);
  return {r * std::cos(t), r * std::sin(t)};
}

inline Point sample_halfplane(Rng& g) { return {uniform(g, -5.0, 5.0), std::pow(10.0, uniform(g, -3.0, 3.0))}; }

inline Point sample_polygon(const ConvexPolygon& poly, Rng& g) {
  Point lo = poly.vertices()[0], hi = lo;
  for (Point p : poly.vertices()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  for (;;) {
    const Point p{uniform(g, lo.x, hi.x), uniform(g, lo.y, hi.y)};
    if (contains(Domain{poly}, p)) return p;
  }
}

inline Point sample_point(const Domain& d, Rng& g) {
  return std::visit(Overloaded{[&](const HalfPlane&) { return sample_halfplane(g); },
                               [&](const UnitDisk&) { return sample_disk(g); },
                               [&](const PuncturedDisk&) {
                                 Point p = sample_disk(g);
                                 while (p == Point{}) p = sample_disk(g);
                                 return p;
                               },
                               [&](const ConvexPolygon& poly) { return sample_polygon(poly, g); }},
                    d);
}

/// Vertices at sorted random angles on a random ellipse.
inline ConvexPolygon random_convex_polygon(Rng& g) {
  for (;;) {
    const int m = std::uniform_int_distribution<int>(3, 10)(g);
    std::vector<double> t(static_cast<std::size_t>(m));
    for (double& a : t) a = uniform(g, 0.0, 2.0 * std::numbers::pi);
    std::sort(t.begin(), t.end());
    double gap = 2.0 * std::numbers::pi - (t.back() - t.front());
    for (std::size_t i = 1; i < t.size(); ++i) gap = std::min(gap, t[i] - t[i - 1]);
    if (gap < 0.05) continue;
    const double a = uniform(g, 0.5, 3.0), b = uniform(g, 0.5, 3.0);
    const double rot = uniform(g, 0.0, 2.0 * std::numbers::pi);
    const Point c{uniform(g, -2.0, 2.0), uniform(g, -2.0, 2.0)};
    std::vector<Point> v;
    for (double s : t) {
      const Point e{a * std::cos(s), b * std::sin(s)};
      v.push_back(c + Point{e.x * std::cos(rot) - e.y * std::sin(rot), e.x * std::sin(rot) + e.y * std::cos(rot)});
    }
    try {
      return ConvexPolygon(std::move(v));
    } catch (const ConfigError&) {
    }
  }
}

inline Json pair_echo(const Domain& d, Point x, Point y) {
  return {{"domain", to_json(d)}, {"x", to_json(x)}, {"y", to_json(y)}};
}

/// Accumulates checks of one suite. A check passes when its margin is at
/// most the tolerance.
class Tally {
public:
  explicit Tally(double tolerance) : tol_(tolerance) {}

  /// lhs <= bound, scale-free margin.
  void le(const char* name, double lhs, double bound, const std::function<Json()>& echo) {
    record(name, lhs, bound, scaled_margin(lhs, bound), echo);
  }

  /// lhs < bound. An exact tie or reversal always counts as a violation.
  void lt(const char* name, double lhs, double bound, const std::function<Json()>& echo) {
    double m = scaled_margin(lhs, bound);
    if (!(lhs < bound)) m = std::max(m, std::nextafter(tol_, 1.0));
    record(name, lhs, bound, m, echo);
  }

  /// |value - expected| <= allowed. The margin is tolerance * error / allowed
  /// so that the pass threshold coincides with the suite tolerance.
  void close(const char* name, double value, double expected, double allowed, const std::function<Json()>& echo) {
    const double err = std::abs(value - expected);
    double m = tol_ * err / allowed;
    if (!std::isfinite(err)) m = std::numeric_limits<double>::infinity();
    record(name, value, expected, m, echo);
  }

  void merge(const Tally& o) {
    r_.checked += o.r_.checked;
    r_.violations += o.r_.violations;
    if (o.r_.worst_margin > r_.worst_margin) {
      r_.worst_margin = o.r_.worst_margin;
      r_.worst_case = o.r_.worst_case;
    }
  }

  const SuiteResult& result() const { return r_; }

private:
  void record(const char* name, double lhs, double bound, double margin, const std::function<Json()>& echo) {
    if (std::isnan(margin)) margin = std::numeric_limits<double>::infinity();
    ++r_.checked;
    if (margin > tol_) ++r_.violations;
    if (margin > r_.worst_margin) {
      r_.worst_margin = margin;
      r_.worst_case = {{"check", name}, {"lhs", lhs}, {"bound", bound}, {"input", echo ? echo() : Json(nullptr)}};
    }
  }

  double tol_;
  SuiteResult r_;
};

/// Runs body(i, tally) for i in [0, n) on contiguous chunks and merges the
/// partial tallies in index order, so the result does not depend on the
/// thread count.
template <class Body>
Tally run_indexed(std::size_t n, unsigned threads, double tol, Body body) {
  const std::size_t t = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  std::vector<Tally> parts(t, Tally(tol));
  std::vector<std::exception_ptr> errors(t);
  auto work = [&](std::size_t c) {
    try {
      for (std::size_t i = n * c / t; i < n * (c + 1) / t; ++i) body(i, parts[c]);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  if (t == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t c = 0; c < t; ++c) pool.emplace_back(work, c);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally total(tol);
  for (const auto& p : parts) total.merge(p);
  return total;
}

// --- suites ---------------------------------------------------------------

inline Tally suite_convex_comparison(const SuiteConfig& cfg, unsigned threads) {
  std::vector<Domain> domains = cfg.domains;
  std::vector<Domain> polygons;
  if (domains.empty()) {
    domains = {UnitDisk{}, HalfPlane{}, PuncturedDisk{}};
    Rng g(stream_seed(cfg.seed, "convex-comparison/polygons", 0));
    for (int i = 0; i < 50; ++i) polygons.push_back(random_convex_polygon(g));
  }
  // Each listed domain gets `samples` pairs; the random polygons share
  // another `samples` pairs between them.
  const std::size_t n = cfg.samples;
  const std::size_t blocks = domains.size() + (polygons.empty() ? 0 : 1);
  return run_indexed(n * blocks, threads, cfg.tolerance, [&](std::size_t i, Tally& t) {
    const std::size_t block = i / n, k = i % n;
    const Domain& d = block < domains.size() ? domains[block] : polygons[k % polygons.size()];
    Rng g(stream_seed(cfg.seed, "convex-comparison", i));
    const Point x = sample_point(d, g), y = sample_point(d, g);
    const double s = s_metric(d, x, y).value;
    const double v = v_metric(d, x, y).value;
    auto echo = [&] { return pair_echo(d, x, y); };
    t.le("sin(v/2) <= s", std::sin(v / 2.0), s, echo);
    t.le("v <= pi s", v, std::numbers::pi * s, echo);
    if (is_convex(d)) t.le("s <= v", s, v, echo);
  });
}

template <class Checks>
Tally disk_pairs(const SuiteConfig& cfg, unsigned threads, const char* suite, Checks checks) {
  return run_indexed(cfg.samples, threads, cfg.tolerance, [&](std::size_t i, Tally& t) {
    Rng g(stream_seed(cfg.seed, suite, i));
    const Point x = sample_disk(g), y = sample_disk(g);
    checks(x, y, t, [&] { return pair_echo(UnitDisk{}, x, y); });
  });
}

inline Tally suite_disk_chain(const SuiteConfig& cfg, unsigned threads) {
  return disk_pairs(cfg, threads, "disk-chain", [](Point x, Point y, Tally& t, const std::function<Json()>& echo) {
    const double v = v_metric(UnitDisk{}, x, y).value;
    const double r = rho_disk(x, y);
    const double j = j_metric(UnitDisk{}, x, y);
    t.le("v <= rho", v, r, echo);
    t.le("rho <= 2j", r, 2.0 * j, echo);
  });
}

inline Tally suite_disk_s_bounds(const SuiteConfig& cfg, unsigned threads) {
  return disk_pairs(cfg, threads, "disk-s-bounds", [](Point x, Point y, Tally& t, const std::function<Json()>& echo) {
    const double s = s_metric(UnitDisk{}, x, y).value;
    const double th = std::tanh(rho_disk(x, y) / 2.0);
    t.le("th(rho/2)/2 <= s", th / 2.0, s, echo);
    t.le("s <= th(rho/2)", s, th, echo);
  });
}

inline Tally suite_disk_v_bounds(const SuiteConfig& cfg, unsigned threads) {
  return disk_pairs(cfg, threads, "disk-v-bounds", [](Point x, Point y, Tally& t, const std::function<Json()>& echo) {
    const double v = v_metric(UnitDisk{}, x, y).value;
    const double a = std::atan(std::sinh(rho_disk(x, y) / 2.0));
    t.le("arctan(sh(rho/2)) <= v", a, v, echo);
    t.le("v <= 2 arctan(sh(rho/2))", v, 2.0 * a, echo);
  });
}

inline Tally suite_extremal_oracle(const SuiteConfig& cfg, unsigned threads) {
  const std::size_t n = std::max<std::size_t>(1, cfg.samples / 10);
  return run_indexed(2 * n, threads, cfg.tolerance, [&](std::size_t i, Tally& t) {
    const Model m = i < n ? Model::HalfPlane : Model::Disk;
    const Domain d = m == Model::HalfPlane ? Domain{HalfPlane{}} : Domain{UnitDisk{}};
    Rng g(stream_seed(cfg.seed, "extremal-oracle", i));
    const Point x = sample_point(d, g), y = sample_point(d, g);
    auto echo = [&] { return pair_echo(d, x, y); };
    const ExtremalResult r = extremal(x, y, m);
    const MetricReport brute = brute_force_sup(d, x, y, Functional::Angle, 4096);
    t.close("construction = brute force", r.value, brute.value, 1e-6, echo);
    t.le("certificate < 1e-8", r.certificate, kCertificateTol, echo);
    t.le("no fallback", r.fallback ? 1.0 : 0.0, 0.0, echo);
  });
}

inline Tally suite_monotonicity(const SuiteConfig& cfg, unsigned threads) {
  const std::size_t n = cfg.samples;
  return run_indexed(2 * n, threads, cfg.tolerance, [&](std::size_t i, Tally& t) {
    Rng g(stream_seed(cfg.seed, "monotonicity", i));
    const Domain h = HalfPlane{};
    if (i < n) {
      // x_n < y_n < z_n on a common vertical line.
      const double a = uniform(g, -5.0, 5.0);
      double hs[3];
      for (double& e : hs) e = std::pow(10.0, uniform(g, -3.0, 3.0));
      std::sort(hs, hs + 3);
      const Point x{a, hs[0]}, y{a, hs[1]}, z{a, hs[2]};
      if (!(x.y < y.y && y.y < z.y)) return;
      const double vxy = v_metric(h, x, y).value;
      const double vxz = v_metric(h, x, z).value;
      t.lt("v(x,y) < v(x,z)", vxy, vxz, [&] {
        return Json{{"domain", "halfplane"}, {"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
      });
      return;
    }
    const double lambda = static_cast<double>((i - n) % 99 + 1) / 100.0;
    const Point x = sample_halfplane(g);
    const double th = uniform(g, 0.0, 2.0 * std::numbers::pi);
    const Point y = x + Point{std::cos(th), std::sin(th)} * (lambda * x.y);
    const double lower = std::atan(lambda / (2.0 * std::sqrt(1.0 + lambda)));
    auto echo = [&] { return Json{{"lambda", lambda}, {"x", to_json(x)}, {"y", to_json(y)}}; };
    t.le("arctan(l/(2 sqrt(1+l))) <= v", lower, v_metric(h, x, y).value, echo);
    t.lt("l/4 < arctan(l/(2 sqrt(1+l)))", lambda / 4.0, lower, echo);
  });
}

inline Tally suite_noncomparability(const SuiteConfig& cfg) {
  Tally t(cfg.tolerance);
  const auto rows = punctured_table(100);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const PuncturedRow& r = rows[i];
    auto echo = [&] { return Json{{"k", r.k}, {"s", r.s}, {"v", r.v}, {"ratio", r.ratio}}; };
    t.close("s = (k-1)/(k+1)", r.s, r.s_closed, 1e-10, echo);
    t.close("v = arctan(k/((k+1) sqrt(1+k^2)))", r.v, r.v_closed, 1e-10, echo);
    t.le("ratio lower bound <= s/v", r.ratio_lower_bound, r.ratio, echo);
    if (i > 0) t.lt("s/v increasing", rows[i - 1].ratio, r.ratio, echo);
    if (r.k == 50) t.lt("s/v > 10 at k = 50", 10.0, r.ratio, echo);
  }
  return t;
}

inline Tally suite_qc(const SuiteConfig& cfg, unsigned threads, QcTheorem which) {
  const char* suite = which == QcTheorem::TriangularRatio ? "qc-s" : "qc-v";
  const double alphas[] = {0.5, 1.0 / 3.0};
  const std::size_t n = cfg.samples;
  return run_indexed(2 * n, threads, cfg.tolerance, [&](std::size_t i, Tally& t) {
    const double alpha = alphas[i / n];
    Rng g(stream_seed(cfg.seed, suite, i));
    const std::pair<Point, Point> pair{sample_disk(g), sample_disk(g)};
    const QcReport r = verify_theorem_qc(1.0 / alpha, RadialStretch{alpha}, {&pair, 1}, which, cfg.tolerance);
    const QcPairResult& p = r.pairs.front();
    auto echo = [&] {
      return Json{{"map", "radial-stretch"}, {"alpha", alpha}, {"x", to_json(p.x)}, {"y", to_json(p.y)}};
    };
    if (which == QcTheorem::TriangularRatio)
      t.le("s(fx,fy) <= C1 s(x,y)^alpha", p.s_lhs, p.s_bound, echo);
    else
      t.le("v(fx,fy) <= C2 v(x,y)^alpha", p.v_lhs, p.v_bound, echo);
  });
}

inline Tally suite_analytic_counterexample(const SuiteConfig& cfg) {
  Tally t(cfg.tolerance);
  for (const AnalyticRow& r : analytic_table(50)) {
    auto echo = [&] { return Json{{"k", r.k}, {"r_k", r.r_k}, {"r_next", r.r_next}}; };
    t.close("s(r_k, r_k+1) = 1/(3+2k)", r.s_before, r.s_before_closed, 1e-10, echo);
    t.close("s(g(r_k), g(r_k+1)) = (e-1)/(e+1)", r.s_after, r.s_after_closed, 1e-10, echo);
  }
  return t;
}

inline Tally suite_specfun(const SuiteConfig& cfg) {
  Tally t(cfg.tolerance);
  const double pi = std::numbers::pi;
  auto at = [](const char* key, double v) { return [=] { return Json{{key, v}}; }; };
  auto at2 = [](double k, double r) { return [=] { return Json{{"K", k}, {"r", r}}; }; };

  t.close("mu(1/sqrt2) = pi/2", mu(std::numbers::sqrt2 / 2.0), pi / 2.0, 1e-12, nullptr);
  for (int i = 1; i <= 100; ++i) {
    const double r = i / 101.0;
    t.close("mu(r) mu(r') = pi^2/4", mu(r) * mu(complementary(r)), pi * pi / 4.0, 1e-12, at("r", r));
  }
  for (int i = 1; i < 1000; ++i) {
    const double r = i / 1001.0;
    t.lt("mu decreasing", mu((i + 1) / 1001.0), mu(r), at("r", r));
  }
  for (int i = 1; i <= 9; ++i) {
    const double r = i / 10.0;
    t.close("mu_inv(mu(r)) = r", mu_inv(mu(r)), r, 1e-12, at("r", r));
    t.close("phi_1(r) = r", phi(1.0, r), r, 1e-12, at("r", r));
    t.close("phi_2(r) = 2 sqrt(r)/(1+r)", phi(2.0, r), 2.0 * std::sqrt(r) / (1.0 + r), 1e-10, at("r", r));
  }
  t.close("mu_inv(pi/2) = 1/sqrt2", mu_inv(pi / 2.0), std::numbers::sqrt2 / 2.0, 1e-12, nullptr);
  t.close("mu_inv(pi) = sqrt(1 - mu_inv(pi/4)^2)", mu_inv(pi), complementary(mu_inv(pi / 4.0)), 1e-12, nullptr);

  for (double k : {1.0, 2.0, 4.0}) {
    const DistortionConstants c = constants(k, 2);
    const double a = c.alpha;
    for (int i = 1; i <= 99; ++i) {
      const double r = i / 100.0;
      t.le("phi_K(r) <= 4^(1-1/K) r^(1/K)", phi(k, r), phi_upper_bound(k, r), at2(k, r));
      if (k > 1.0) t.close("phi_K(phi_1/K(r)) = r", phi(k, phi(1.0 / k, r)), r, 1e-10, at2(k, r));
      const double s0 = c.t0 * r;
      t.le("Theta(t) <= 2 lambda^(2-alpha) t^alpha, t <= t0", theta(k, s0),
           2.0 * std::pow(c.lambda, 2.0 - a) * std::pow(s0, a), at2(k, s0));
      const double s1 = c.t1 * r;
      t.le("Theta(t) <= 1/2, t <= t1", theta(k, s1), 0.5, at2(k, s1));
    }
    t.le("Theta(t0) <= 2 lambda^(2-alpha) t0^alpha", theta(k, c.t0), 2.0 * std::pow(c.lambda, 2.0 - a) * std::pow(c.t0, a),
         at2(k, c.t0));
    t.le("Theta(t1) <= 1/2", theta(k, c.t1), 0.5, at2(k, c.t1));
  }
  for (int i = 1; i <= 99; ++i) {
    const double s = i / 100.0;
    t.close("Theta_1(t) = 4t/(1-t)^2", theta(1.0, s), 4.0 * s / ((1.0 - s) * (1.0 - s)), 1e-9, at("t", s));
  }
  t.close("Theta_1(1/2) = 8", theta(1.0, 0.5), 8.0, 1e-9, nullptr);

  for (int i = 1; i <= 1000; ++i) {
    const double th = pi * i / 1000.0;
    t.le("theta / sin(theta/2) <= pi", th / std::sin(th / 2.0), pi, at("theta", th));
  }
  for (int i = 1; i < 1000; ++i) {
    const double x = i / 1000.0;
    t.le("pi/4 x <= arctan x", pi / 4.0 * x, std::atan(x), at("x", x));
    t.le("arctan x <= x", std::atan(x), x, at("x", x));
  }

  const DistortionConstants c1 = constants(1.0, 2);
  t.close("constants(1,2).t0 = 1/8", c1.t0, 0.125, 1e-12, nullptr);
  t.close("constants(1,2).t1 = 1/16", c1.t1, 0.0625, 1e-12, nullptr);
  t.close("constants(1,2).C1 = 17", c1.C1, 17.0, 1e-12, nullptr);
  t.close("constants(1,2).C2 = 64 pi", c1.C2, 64.0 * pi, 1e-12, nullptr);
  t.close("constants(2,2).t0 = 1/256", constants(2.0, 2).t0, 1.0 / 256.0, 1e-12, nullptr);
  for (double k : {1.0, 1.25, 1.5, 2.0, 4.0}) {
    for (int n : {2, 3}) {
      const DistortionConstants c = constants(k, n);
      const double l = std::pow(c.lambda, 2.0 - c.alpha);
      auto echo = [=] { return Json{{"K", k}, {"n", n}}; };
      t.close("lambda^(2-alpha) t0^alpha = 1/2", l * std::pow(c.t0, c.alpha), 0.5, 1e-12, echo);
      t.close("lambda^(2-alpha) t1^alpha = 1/4", l * std::pow(c.t1, c.alpha), 0.25, 1e-12, echo);
      t.le("t1 <= t0", c.t1, c.t0, echo);
    }
  }
  return t;
}

}  // namespace detail

inline VerificationReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  VerificationReport report;
  report.seed = cfg.seed;
  report.samples = cfg.samples;
  report.tolerance = cfg.tolerance;
  const std::vector<std::string>& wanted = cfg.suites.empty() ? suite_names() : cfg.suites;
  for (const std::string& name : wanted) {
    detail::Tally t(cfg.tolerance);
    if (name == "convex-comparison") t = detail::suite_convex_comparison(cfg, threads);
    else if (name == "disk-chain") t = detail::suite_disk_chain(cfg, threads);
    else if (name == "disk-s-bounds") t = detail::suite_disk_s_bounds(cfg, threads);
    else if (name == "disk-v-bounds") t = detail::suite_disk_v_bounds(cfg, threads);
    else if (name == "extremal-oracle") t = detail::suite_extremal_oracle(cfg, threads);
    else if (name == "monotonicity") t = detail::suite_monotonicity(cfg, threads);
    else if (name == "noncomparability") t = detail::suite_noncomparability(cfg);
    else if (name == "qc-s") t = detail::suite_qc(cfg, threads, QcTheorem::TriangularRatio);
    else if (name == "qc-v") t = detail::suite_qc(cfg, threads, QcTheorem::VisualAngle);
    else if (name == "analytic-counterexample") t = detail::suite_analytic_counterexample(cfg);
    else if (name == "specfun") t = detail::suite_specfun(cfg);
    report.suites[name] = t.result();
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vangle

#endif  // VANGLE_HARNESS_HPP
