#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "latdiam/latdiam.hpp"

namespace latdiam::testing {

inline std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto turn = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return cross(a - o, b - o);
  };
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

/// Convex lattice polygon with 3..max_vertices vertices in [-range, range]^2.
inline Polygon2 random_polygon(std::mt19937_64& rng, long long range, std::size_t max_vertices = 10) {
  std::uniform_int_distribution<long long> coord(-range, range);
  std::uniform_int_distribution<std::size_t> count(3, max_vertices + 2);
  while (true) {
    std::vector<LatticePoint> pts;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    auto hull = convex_hull(std::move(pts));
    if (hull.size() >= 3 && hull.size() <= max_vertices) return Polygon2(std::move(hull));
  }
}

inline PointSet random_point_set(std::mt19937_64& rng, std::size_t d, std::size_t n, long long hi,
                                 long long lo = 0) {
  std::uniform_int_distribution<long long> coord(lo, hi);
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint p;
    for (std::size_t j = 0; j < d; ++j) p.coords.emplace_back(coord(rng));
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline PointSet cube01(std::size_t d) {
  std::vector<LatticePoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint p;
    for (std::size_t j = 0; j < d; ++j) p.coords.emplace_back((mask >> j) & 1);
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts));
}

inline Polygon2 period3_quad() { return Polygon2({{0, 0}, {5, 1}, {6, 4}, {1, 3}}); }

}  // namespace latdiam::testing
