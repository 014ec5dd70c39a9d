#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vangle/hyperbolic.hpp"

using namespace vangle;

namespace {

Point random_disk(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0, 1);
  const double r = std::sqrt(u(g)) * 0.999, t = 2 * std::numbers::pi * u(g);
  return {r * std::cos(t), r * std::sin(t)};
}

Point random_halfplane(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0, 1);
  return {-5 + 10 * u(g), std::pow(10.0, -2 + 4 * u(g))};
}

}  // namespace

TEST(Rho, HalfPlaneVertical) {
  // Along a vertical line rho = |log(y2/y1)|.
  EXPECT_NEAR(rho_halfplane(Point{0, 1}, Point{0, 4}), std::log(4.0), 1e-14);
}

TEST(Rho, DiskFromOrigin) {
  // rho(0, r) = log((1+r)/(1-r)).
  EXPECT_NEAR(rho_disk(Point{0, 0}, Point{0.5, 0}), std::log(3.0), 1e-14);
}

TEST(Rho, TanhFormAgrees) {
  std::mt19937_64 g(3);
  for (int i = 0; i < 500; ++i) {
    const Point x = random_disk(g), y = random_disk(g);
    EXPECT_NEAR(rho_disk(x, y), rho_disk_tanh_form(x, y), 1e-9 * std::max(1.0, rho_disk(x, y)));
  }
}

TEST(Rho, HigherDimensions) {
  const std::vector<double> x{0, 0, 1}, y{0, 0, 4};
  EXPECT_NEAR(rho_halfplane(x, y), std::log(4.0), 1e-14);
  const std::vector<double> a{0, 0, 0}, b{0, 0.5, 0};
  EXPECT_NEAR(rho_disk(a, b), std::log(3.0), 1e-14);
}

TEST(Rho, OutsideModelThrows) {
  EXPECT_THROW(rho_halfplane(Point{0, -1}, Point{0, 1}), DomainError);
  EXPECT_THROW(rho_disk(Point{1, 0}, Point{0, 0}), DomainError);
}

TEST(Rho, CayleyInvariance) {
  std::mt19937_64 g(5);
  const Mobius c = cayley_to_disk();
  for (int i = 0; i < 300; ++i) {
    const Point x = random_halfplane(g), y = random_halfplane(g);
    const double a = rho_halfplane(x, y), b = rho_disk(c.apply(x), c.apply(y));
    EXPECT_NEAR(a, b, 1e-7 * std::max(1.0, a));
  }
}

TEST(Rho, DiskTranslationInvariance) {
  std::mt19937_64 g(6);
  for (int i = 0; i < 300; ++i) {
    const Point x = random_disk(g), y = random_disk(g), m = random_disk(g);
    const Mobius t = disk_translation(m);
    EXPECT_NEAR(rho_disk(x, y), rho_disk(t.apply(x), t.apply(y)), 1e-7 * std::max(1.0, rho_disk(x, y)));
  }
}

TEST(Mobius, CayleySendsIToOrigin) {
  const Point z = cayley_to_disk().apply(Point{0, 1});
  EXPECT_NEAR(norm(z), 0.0, 1e-16);
}

TEST(Mobius, InverseAndCompose) {
  const Mobius t = disk_translation({0.3, -0.2});
  const Point p{0.1, 0.4};
  const Point q = t.inverse().compose(t).apply(p);
  EXPECT_NEAR(q.x, p.x, 1e-15);
  EXPECT_NEAR(q.y, p.y, 1e-15);
}

TEST(Mobius, SendToInfinity) {
  const Mobius m = mobius_halfplane_send_to_infinity(IdealPoint(Point{2, 0}));
  EXPECT_TRUE(m.apply(IdealPoint(Point{2, 0})).is_infinite());
  EXPECT_THROW(mobius_halfplane_send_to_infinity(IdealPoint(Point{2, 1})), DomainError);
}

TEST(Bisector, DiskExample) {
  // x = 0, y = (1/2, 0): bisector is the circle centered (2,0), radius sqrt 3,
  // with ideal endpoints (1/2, +-sqrt3/2).
  const Geodesic g = perpendicular_bisector({0, 0}, {0.5, 0}, Model::Disk);
  ASSERT_EQ(g.shape, Geodesic::Shape::Arc);
  EXPECT_NEAR(g.arc.center.x, 2.0, 1e-14);
  EXPECT_NEAR(g.arc.center.y, 0.0, 1e-14);
  EXPECT_NEAR(g.arc.radius, std::sqrt(3.0), 1e-14);
  for (const IdealPoint& e : g.ends) {
    EXPECT_NEAR(e.point().x, 0.5, 1e-14);
    EXPECT_NEAR(std::abs(e.point().y), std::sqrt(3.0) / 2, 1e-14);
  }
}

TEST(Bisector, HalfPlaneVerticalPair) {
  // x = (0,1), y = (0,4): the semicircle |z| = 2.
  const Geodesic g = perpendicular_bisector({0, 1}, {0, 4}, Model::HalfPlane);
  ASSERT_EQ(g.shape, Geodesic::Shape::Arc);
  EXPECT_NEAR(g.arc.radius, 2.0, 1e-14);
  EXPECT_NEAR(g.ends[0].point().x, -2.0, 1e-14);
  EXPECT_NEAR(g.ends[1].point().x, 2.0, 1e-14);
}

TEST(Bisector, EqualHeightsEndAtInfinity) {
  const Geodesic g = perpendicular_bisector({-1, 2}, {3, 2}, Model::HalfPlane);
  EXPECT_EQ(g.shape, Geodesic::Shape::Line);
  EXPECT_TRUE(g.ends[0].is_infinite() || g.ends[1].is_infinite());
  EXPECT_NEAR(g.line_point.x, 1.0, 1e-14);
}

TEST(Bisector, SymmetricDiskPairIsDiameter) {
  const Geodesic g = perpendicular_bisector({0.4, 0.1}, {-0.4, -0.1}, Model::Disk);
  EXPECT_EQ(g.shape, Geodesic::Shape::Line);
  EXPECT_NEAR(dot(g.line_direction, Point{0.4, 0.1}), 0.0, 1e-14);
}

TEST(Bisector, CoincidentPointsThrow) {
  EXPECT_THROW(perpendicular_bisector({0.1, 0.1}, {0.1, 0.1}, Model::Disk), DomainError);
}

// Every point on the bisector is hyperbolically equidistant from x and y,
// and the carrier meets the boundary orthogonally.
TEST(BisectorProperty, EquidistantSamples) {
  std::mt19937_64 g(9);
  for (Model m : {Model::Disk, Model::HalfPlane}) {
    for (int i = 0; i < 300; ++i) {
      const Point x = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Point y = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Geodesic b = perpendicular_bisector(x, y, m);
      for (Point p : sample_geodesic(b, 9)) {
        if (!in_model(p, m)) continue;
        const double dx = rho(p, x, m), dy = rho(p, y, m);
        EXPECT_NEAR(dx, dy, 1e-6 * std::max(1.0, dx)) << "model " << to_string(m);
      }
      if (b.shape == Geodesic::Shape::Arc) {
        if (m == Model::Disk)
          EXPECT_NEAR(norm2(b.arc.center), 1.0 + b.arc.radius * b.arc.radius, 1e-8 * norm2(b.arc.center));
        else
          EXPECT_NEAR(b.arc.center.y, 0.0, 1e-12);
      }
    }
  }
}

TEST(Midpoint, EquidistantAndOnSegment) {
  std::mt19937_64 g(10);
  for (Model m : {Model::Disk, Model::HalfPlane}) {
    for (int i = 0; i < 200; ++i) {
      const Point x = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Point y = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Point c = hyperbolic_midpoint(x, y, m);
      const double d = rho(x, y, m);
      EXPECT_NEAR(rho(x, c, m), d / 2, 1e-6 * std::max(1.0, d));
      EXPECT_NEAR(rho(c, y, m), d / 2, 1e-6 * std::max(1.0, d));
    }
  }
}

TEST(Symmetrize, MapsPairToAntipodes) {
  std::mt19937_64 g(12);
  for (int i = 0; i < 200; ++i) {
    const Point x = random_disk(g), y = random_disk(g);
    const Mobius t = mobius_disk_symmetrize(x, y);
    const Point a = t.apply(x), b = t.apply(y);
    EXPECT_NEAR(a.x, -b.x, 1e-8);
    EXPECT_NEAR(a.y, -b.y, 1e-8);
  }
}

TEST(GeodesicThrough, ContainsBothPoints) {
  std::mt19937_64 g(13);
  for (Model m : {Model::Disk, Model::HalfPlane}) {
    for (int i = 0; i < 200; ++i) {
      const Point x = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Point y = m == Model::Disk ? random_disk(g) : random_halfplane(g);
      const Geodesic c = geodesic_through(x, y, m);
      const double scale = c.shape == Geodesic::Shape::Arc ? std::max(1.0, c.arc.radius) : 1.0;
      EXPECT_LT(c.distance_to(x), 1e-9 * scale);
      EXPECT_LT(c.distance_to(y), 1e-9 * scale);
    }
  }
}
