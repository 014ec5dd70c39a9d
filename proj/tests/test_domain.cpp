#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "vangle/domain.hpp"
#include "vangle/io.hpp"

using namespace vangle;

TEST(Domain, Presets) {
  EXPECT_EQ(variant_name(domain_preset("disk")), "disk");
  EXPECT_EQ(variant_name(domain_preset("halfplane")), "halfplane");
  EXPECT_EQ(variant_name(domain_preset("punctured")), "punctured");
  EXPECT_EQ(std::get<ConvexPolygon>(domain_preset("square")).size(), 4u);
  const Domain td = domain_preset("triangle");
  const auto& tri = std::get<ConvexPolygon>(td);
  for (Point p : tri.vertices()) EXPECT_NEAR(norm(p), 1.0, 1e-15);
  EXPECT_THROW(domain_preset("hexagon"), ConfigError);
}

TEST(Domain, Membership) {
  EXPECT_TRUE(contains(UnitDisk{}, {0, 0}));
  EXPECT_FALSE(contains(PuncturedDisk{}, {0, 0}));
  EXPECT_FALSE(contains(UnitDisk{}, {1, 0}));
  EXPECT_FALSE(contains(HalfPlane{}, {3, 0}));
  EXPECT_TRUE(contains(domain_preset("square"), {0.5, 0.5}));
  EXPECT_FALSE(contains(domain_preset("square"), {1.0, 0.5}));
}

TEST(Domain, BoundaryDistance) {
  EXPECT_DOUBLE_EQ(dist_to_boundary(UnitDisk{}, {0.25, 0}), 0.75);
  EXPECT_DOUBLE_EQ(dist_to_boundary(PuncturedDisk{}, {0.25, 0}), 0.25);
  EXPECT_DOUBLE_EQ(dist_to_boundary(HalfPlane{}, {7, 2}), 2.0);
  EXPECT_DOUBLE_EQ(dist_to_boundary(domain_preset("square"), {0.5, 0.2}), 0.2);
  EXPECT_THROW(dist_to_boundary(UnitDisk{}, {2, 0}), DomainError);
}

TEST(Polygon, RejectsNonConvexAndClockwise) {
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}}), ConfigError);
  EXPECT_THROW(ConvexPolygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), ConfigError);
  EXPECT_THROW(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), ConfigError);
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), ConfigError);
}

TEST(DomainJson, RoundTrip) {
  const Domain d = domain_from_json(Json::parse(R"({"variant":"polygon","vertices":[[0,0],[2,0],[0,2]]})"));
  const Json back = to_json(d);
  EXPECT_EQ(back["variant"], "polygon");
  EXPECT_EQ(back["vertices"].size(), 3u);
  EXPECT_EQ(variant_name(domain_from_json(Json("square"))), "polygon");
  EXPECT_EQ(variant_name(domain_from_json(Json::parse(R"({"variant":"disk"})"))), "disk");
}

TEST(DomainJson, ErrorsNameTheLocation) {
  try {
    domain_from_json(Json::parse(R"({"variant":"polygon","vertices":[[0,0],[1],[0,1]]})"), "domains[3]");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("domains[3].vertices[1]"), std::string::npos) << e.what();
  }
  try {
    domain_from_json(Json::parse(R"({"variant":"annulus"})"), "domains[0]");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("domains[0].variant"), std::string::npos) << e.what();
  }
  EXPECT_THROW(domain_from_json(Json::parse("42")), ConfigError);
}
