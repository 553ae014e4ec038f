#include <gtest/gtest.h>

#include "support.hpp"

using namespace latdiam;
using latdiam::testing::period3_quad;

TEST(SegmentCount, Examples) {
  EXPECT_EQ(segment_lattice_count({0, 0}, {0, 0}), 0);
  EXPECT_EQ(segment_lattice_count({0, 0}, {4, 6}), 2);
  EXPECT_EQ(segment_lattice_count({1, 0, 0}, {-1, 0, 0}), 2);
  EXPECT_THROW(segment_lattice_count({1, 0}, {1, 0, 0}), ValidationError);
}

TEST(SegmentCount, SymmetricAndHomogeneous) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> c(-30, 30), lam(-7, 7);
  for (int i = 0; i < 2000; ++i) {
    LatticePoint x{c(rng), c(rng), c(rng)}, y{c(rng), c(rng), c(rng)};
    Integer f = segment_lattice_count(x, y);
    EXPECT_EQ(f, segment_lattice_count(y, x));
    EXPECT_EQ(f == 0, x == y);
    Integer l = lam(rng);
    EXPECT_EQ(segment_lattice_count(l * x, l * y), abs(l) * f);
  }
}

TEST(Direction, NormalizationIdempotentAndSignFree) {
  Direction u({-4, 6});
  EXPECT_EQ(u.vec(), (std::vector<Integer>{2, -3}));
  EXPECT_EQ(Direction(u.vec()), u);
  EXPECT_EQ(Direction({0, -5, 10}), Direction({0, 1, -2}));
  EXPECT_THROW(Direction({0, 0}), ValidationError);
}

TEST(Polygon, ValidationAndOrientation) {
  EXPECT_THROW(Polygon2({{0, 0}, {1, 1}, {2, 2}}), ValidationError);
  EXPECT_THROW(Polygon2({{0, 0}, {1, 0}}), ValidationError);
  EXPECT_THROW(Polygon2({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}}), ValidationError);
  Polygon2 cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  EXPECT_GT(cw.twice_area(), 0);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_lattice_points(Polygon2({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).size(), 4u);
  EXPECT_EQ(enumerate_lattice_points(Polygon2({{0, 1}, {1, 0}, {2, 2}})),
            PointSet({{0, 1}, {1, 0}, {1, 1}, {2, 2}}));
  // Box scan in an independent script gives 17 (area 14, 4 boundary points).
  EXPECT_EQ(enumerate_lattice_points(period3_quad()).size(), 17u);
}

TEST(Pick, Examples) {
  EXPECT_EQ(count_lattice_points_polygon(Polygon2({{0, 0}, {1, 0}, {1, 1}, {0, 1}})), 4);
  EXPECT_EQ(count_lattice_points_polygon(Polygon2({{1, 1}, {3, 4}, {-4, -5}})), 4);
  EXPECT_EQ(count_lattice_points_polygon(period3_quad()), 17);
}

TEST(Pick, MatchesScanOnRandomPolygons) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    Polygon2 p = latdiam::testing::random_polygon(rng, 25);
    EXPECT_EQ(count_lattice_points_polygon(p), Integer(enumerate_lattice_points(p).size()));
  }
}

TEST(Width, Examples) {
  EXPECT_EQ(lattice_width(PointSet({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), LatticePoint{1, 0}), 1);
  EXPECT_EQ(lattice_width(period3_quad(), LatticePoint{0, 1}), 4);
  std::vector<LatticePoint> none;
  EXPECT_THROW(lattice_width(std::span<const LatticePoint>(none), LatticePoint{1, 0}), ValidationError);
}

TEST(Rational, ParseAndSign) {
  EXPECT_EQ(parse_rational("17/3"), ratio(17, 3));
  EXPECT_EQ(parse_rational("4/-6"), ratio(-2, 3));
  EXPECT_EQ(to_string(ratio(3, -9)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), ValidationError);
  EXPECT_THROW(parse_rational("x"), ValidationError);
  EXPECT_EQ(floor(ratio(-2, 3)), -1);
  EXPECT_EQ(ceil(ratio(-2, 3)), 0);
}

TEST(Arithmetic, LargeCoordinatesStayExact) {
  Integer big = Integer(1) << 200;
  LatticePoint x{0, 0};
  LatticePoint y(std::vector<Integer>{6 * big, 10 * big});
  EXPECT_EQ(segment_lattice_count(x, y), 2 * big);
}
