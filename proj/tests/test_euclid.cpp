#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "vangle/euclid.hpp"

using namespace vangle;

TEST(Angle, RightAngleAtOrigin) { EXPECT_NEAR(angle({1, 0}, {0, 0}, {0, 1}), std::numbers::pi / 2, 1e-15); }

TEST(Angle, StraightAndZero) {
  EXPECT_NEAR(angle({-1, 0}, {0, 0}, {1, 0}), std::numbers::pi, 1e-15);
  EXPECT_EQ(angle({1, 0}, {0, 0}, {2, 0}), 0.0);
}

TEST(Angle, VertexAtEndpointThrows) { EXPECT_THROW(angle({1, 0}, {1, 0}, {0, 1}), DomainError); }

TEST(Reflect, AcrossXAxis) {
  const Point r = reflect_across_line({2, 3}, Line{{0, 0}, {1, 0}});
  EXPECT_DOUBLE_EQ(r.x, 2.0);
  EXPECT_DOUBLE_EQ(r.y, -3.0);
}

TEST(Reflect, Involution) {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 200; ++i) {
    const Line l{{u(g), u(g)}, {u(g), u(g)}};
    const Point p{u(g), u(g)};
    const Point back = reflect_across_line(reflect_across_line(p, l), l);
    EXPECT_NEAR(back.x, p.x, 1e-12);
    EXPECT_NEAR(back.y, p.y, 1e-12);
  }
}

TEST(Reflect, ZeroDirectionThrows) { EXPECT_THROW(reflect_across_line({1, 1}, Line{{0, 0}, {0, 0}}), DomainError); }

TEST(CircleThrough, UnitCircle) {
  const Circle c = circle_through({1, 0}, {0, 1}, {-1, 0});
  EXPECT_NEAR(c.center.x, 0.0, 1e-15);
  EXPECT_NEAR(c.center.y, 0.0, 1e-15);
  EXPECT_NEAR(c.radius, 1.0, 1e-15);
}

TEST(CircleThrough, CollinearCarriesLine) {
  try {
    circle_through({0, 0}, {1, 1}, {3, 3});
    FAIL() << "expected CollinearError";
  } catch (const CollinearError& e) {
    EXPECT_NEAR(std::abs(cross(e.line().direction, Point{1, 1})), 0.0, 1e-12);
  }
}

TEST(CircleThrough, RepeatedPointThrows) { EXPECT_THROW(circle_through({0, 0}, {0, 0}, {1, 0}), DomainError); }

TEST(CircleThrough, RandomTriplesEquidistant) {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 500; ++i) {
    const Point p{u(g), u(g)}, q{u(g), u(g)}, r{u(g), u(g)};
    if (std::abs(cross(q - p, r - p)) < 1e-3) continue;
    const Circle c = circle_through(p, q, r);
    for (Point s : {p, q, r}) EXPECT_NEAR(dist(s, c.center), c.radius, 1e-9 * std::max(1.0, c.radius));
  }
}

TEST(TangentCircles, TwoPointsAboveAxis) {
  // Through (0,1) and (0,4) tangent to y = 0: tangency at (+-2, 0).
  const auto t = tangent_circles_through_two_points({0, 1}, {0, 4}, Line{{0, 0}, {1, 0}});
  ASSERT_EQ(t.size(), 2u);
  for (const Tangency& c : t) {
    EXPECT_NEAR(std::abs(c.point.x), 2.0, 1e-14);
    EXPECT_NEAR(c.point.y, 0.0, 1e-14);
    EXPECT_NEAR(c.circle.radius, c.circle.center.y, 1e-14);
    EXPECT_NEAR(dist(c.circle.center, {0, 1}), c.circle.radius, 1e-13);
    EXPECT_NEAR(dist(c.circle.center, {0, 4}), c.circle.radius, 1e-13);
  }
}

TEST(TangentCircles, ParallelChordGivesOne) {
  const auto t = tangent_circles_through_two_points({-1, 2}, {3, 2}, Line{{0, 0}, {1, 0}});
  ASSERT_EQ(t.size(), 1u);
  EXPECT_NEAR(t[0].point.x, 1.0, 1e-14);
}

TEST(TangentCircles, OppositeSidesThrow) {
  EXPECT_THROW(tangent_circles_through_two_points({0, 1}, {0, -1}, Line{{0, 0}, {1, 0}}), DomainError);
}

TEST(Segment, DistanceClampsToEndpoints) {
  const Segment s{{0, 0}, {1, 0}};
  EXPECT_DOUBLE_EQ(distance_to_segment({0.5, 2}, s), 2.0);
  EXPECT_DOUBLE_EQ(distance_to_segment({4, 4}, s), 5.0);
}

TEST(SignedDistance, LeftIsPositive) {
  EXPECT_DOUBLE_EQ(signed_distance({0, 3}, Line{{0, 0}, {2, 0}}), 3.0);
  EXPECT_DOUBLE_EQ(signed_distance({0, -3}, Line{{0, 0}, {2, 0}}), -3.0);
}
