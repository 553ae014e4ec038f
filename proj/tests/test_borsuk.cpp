#include <gtest/gtest.h>

#include "support.hpp"

using namespace latdiam;
using latdiam::testing::cube01;

TEST(BorsukGraph, Cube) {
  auto g = build_borsuk_graph(cube01(3));
  EXPECT_EQ(g.diam, 1);
  EXPECT_EQ(g.edges.size(), 28u);
  EXPECT_EQ(g.max_degree(), 7u);
  EXPECT_TRUE(g.adjacent(0, 7));
  EXPECT_THROW(build_borsuk_graph(PointSet({{1, 2}})), ValidationError);
}

TEST(BorsukGraph, Collinear) {
  auto g = build_borsuk_graph(PointSet({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(g.diam, 2);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(exact_borsuk_number(PointSet({{0, 0}, {1, 0}, {2, 0}})), 2u);
}

TEST(Partition, ValidityCheck) {
  PointSet s({{0, 0}, {1, 0}, {2, 0}});
  BorsukPartition good{{PointSet({{0, 0}, {1, 0}}), PointSet({{2, 0}})}, {}};
  BorsukPartition bad{{PointSet({{0, 0}, {2, 0}}), PointSet({{1, 0}})}, {}};
  BorsukPartition missing{{PointSet({{0, 0}})}, {}};
  EXPECT_TRUE(is_valid_borsuk_partition(s, good));
  EXPECT_FALSE(is_valid_borsuk_partition(s, bad));
  EXPECT_FALSE(is_valid_borsuk_partition(s, missing));
}

TEST(Partition, GreedyWithinBound) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const std::size_t d = 2 + i % 2;
    auto s = latdiam::testing::random_point_set(rng, d, 2 + i % 20, 8);
    if (s.size() < 2) continue;
    auto p = greedy_partition(s);
    EXPECT_LE(p.parts.size(), std::size_t{1} << d);
    EXPECT_TRUE(is_valid_borsuk_partition(s, p));
    EXPECT_EQ(p.labels.size(), s.size());
  }
}

TEST(Chromatic, CubesNeedAllParts) {
  for (std::size_t d = 1; d <= 3; ++d) EXPECT_EQ(exact_borsuk_number(cube01(d)), std::size_t{1} << d);
  EXPECT_TRUE(is_axis_cube(cube01(3)));
}

TEST(Chromatic, BracketedByCliqueAndGreedy) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    auto s = latdiam::testing::random_point_set(rng, 2, 3 + i % 15, 6);
    if (s.size() < 2) continue;
    auto g = build_borsuk_graph(s);
    const std::size_t chi = exact_borsuk_number(s);
    EXPECT_LE(clique_number(g), chi);
    EXPECT_LE(chi, greedy_partition(s).parts.size());
    EXPECT_LE(chi, g.max_degree() + 1);
  }
}

TEST(Chromatic, BudgetExceeded) {
  std::mt19937_64 rng(7);
  auto s = latdiam::testing::random_point_set(rng, 3, 40, 3);
  auto g = build_borsuk_graph(s);
  if (clique_number(g) != greedy_partition(s).parts.size()) {
    EXPECT_THROW(exact_borsuk_number(s, 1), BudgetExceeded);
  }
}

TEST(Brooks, CompleteGraph) {
  auto b = classify_brooks(build_borsuk_graph(cube01(2)));
  EXPECT_EQ(b.complete_components, 1u);
  EXPECT_TRUE(b.delta_plus_one_tight);
  EXPECT_EQ(b.max_degree, 3u);
}

TEST(AxisCube, Recognition) {
  std::vector<LatticePoint> box;
  for (long long x = 2; x <= 4; ++x)
    for (long long y = -1; y <= 1; ++y) box.push_back({x, y});
  EXPECT_TRUE(is_axis_cube(PointSet(box)));
  box.pop_back();
  EXPECT_FALSE(is_axis_cube(PointSet(box)));
  EXPECT_FALSE(is_axis_cube(PointSet({{0, 0}, {2, 0}, {0, 1}, {2, 1}})));
}
