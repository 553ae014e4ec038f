#pragma once

// Brute-force lattice diameter of a finite point set in any dimension.
//
// Ground truth for every other module: an exhaustive scan of all unordered
// pairs. Pairs that cannot reach the running maximum are skipped (the gcd of
// a difference vector never exceeds any of its nonzero entries), which keeps
// the scan quadratic but cheap. Coordinates that fit in 32 bits are scanned
// with machine integers; larger inputs fall back to arbitrary precision.

#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "latdiam/core.hpp"

namespace latdiam {

/// Default cap on |S| for the quadratic scans.
inline constexpr std::size_t kDefaultOraclePointBudget = 200000;

struct OracleReport {
  Integer ldiam;
  /// Every diameter segment once, smaller endpoint first, sorted.
  std::vector<std::pair<LatticePoint, LatticePoint>> segments;
  std::vector<Direction> directions;
  /// Number of diameter segments ending at each point (points of degree 0
  /// are omitted).
  std::map<LatticePoint, std::size_t> per_point_degree;

  std::size_t max_degree() const {
    std::size_t m = 0;
    for (const auto& [p, d] : per_point_degree) m = std::max(m, d);
    return m;
  }
};

namespace detail {

inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}
inline Integer gcd_abs(const Integer& a, const Integer& b) { return gcd(a, b); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }
inline Integer abs_value(const Integer& a) { return abs(a); }

/// Indices (i, j), i < j, of all pairs attaining the maximal gcd, plus that
/// maximum. `rows` holds the points flattened row-major, sorted
/// lexicographically.
template <class Int>
std::pair<Int, std::vector<std::pair<std::size_t, std::size_t>>> max_pairs(
    const std::vector<Int>& rows, std::size_t n, std::size_t d) {
  Int best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  auto at = [&](std::size_t i, std::size_t c) -> const Int& {
    return rows[i * d + c];
  };
  auto consider = [&](std::size_t i, std::size_t j) {
    Int g = 0;
    for (std::size_t c = 0; c < d; ++c) {
      Int diff = abs_value(Int(at(j, c) - at(i, c)));
      if (diff == 0) continue;
      if (diff < best) return;
      g = gcd_abs(g, diff);
      if (g < best) return;
    }
    if (g > best) {
      best = g;
      hits.clear();
    }
    if (g == best) hits.emplace_back(i, j);
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Same first coordinate: a contiguous block after i.
    std::size_t j = i + 1;
    for (; j < n && at(j, 0) == at(i, 0); ++j) consider(i, j);
    // Larger first coordinate: skip everything closer than the running best.
    std::size_t lo = j, hi = n;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (Int(at(mid, 0) - at(i, 0)) < best)
        lo = mid + 1;
      else
        hi = mid;
    }
    for (j = lo; j < n; ++j) consider(i, j);
  }
  return {best, std::move(hits)};
}

inline bool fits_small(const PointSet& s) {
  const Integer limit = Integer(1) << 30;
  for (const auto& p : s)
    for (const auto& c : p.coords)
      if (abs(c) >= limit) return false;
  return true;
}

inline std::pair<Integer, std::vector<std::pair<std::size_t, std::size_t>>>
diameter_pairs(const PointSet& s, std::size_t budget) {
  if (s.empty()) throw ValidationError("lattice diameter of an empty set");
  if (s.size() > budget)
    throw BudgetExceeded("oracle refuses " + std::to_string(s.size()) +
                         " points (budget " + std::to_string(budget) + ")");
  const std::size_t n = s.size(), d = s.dim();
  if (fits_small(s)) {
    std::vector<std::int64_t> rows;
    rows.reserve(n * d);
    for (const auto& p : s)
      for (const auto& c : p.coords) rows.push_back(c.convert_to<std::int64_t>());
    auto [best, hits] = max_pairs(rows, n, d);
    return {Integer(best), std::move(hits)};
  }
  std::vector<Integer> rows;
  rows.reserve(n * d);
  for (const auto& p : s)
    for (const auto& c : p.coords) rows.push_back(c);
  return max_pairs(rows, n, d);
}

}  // namespace detail

/// ldiam(S) = max over pairs of |[x, y] ∩ Z^d| - 1, with every diameter
/// segment, direction and endpoint degree. A single point has ldiam 0.
inline OracleReport brute_force_diameter(
    const PointSet& s, std::size_t budget = kDefaultOraclePointBudget) {
  auto [best, hits] = detail::diameter_pairs(s, budget);
  OracleReport r;
  r.ldiam = best;
  if (best == 0) return r;
  std::set<Direction> dirs;
  r.segments.reserve(hits.size());
  for (auto [i, j] : hits) {
    r.segments.emplace_back(s[i], s[j]);
    dirs.insert(Direction(s[j] - s[i]));
    ++r.per_point_degree[s[i]];
    ++r.per_point_degree[s[j]];
  }
  std::sort(r.segments.begin(), r.segments.end());
  r.directions.assign(dirs.begin(), dirs.end());
  return r;
}

inline Integer oracle_ldiam(const PointSet& s,
                            std::size_t budget = kDefaultOraclePointBudget) {
  return detail::diameter_pairs(s, budget).first;
}

/// Normalized directions of all diameter segments.
inline std::vector<Direction> diameter_directions(
    const PointSet& s, std::size_t budget = kDefaultOraclePointBudget) {
  if (s.size() < 2)
    throw ValidationError("diameter directions need at least 2 points");
  return brute_force_diameter(s, budget).directions;
}

/// Whether "ldiam(S) < m implies |S| <= m^d" holds for this S and m.
inline bool check_rabinowitz(const PointSet& s, const Integer& m,
                             std::size_t budget = kDefaultOraclePointBudget) {
  if (m <= 0) throw ValidationError("m must be positive");
  if (s.empty()) return true;
  if (oracle_ldiam(s, budget) >= m) return true;
  Integer bound = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) bound *= m;
  return Integer(s.size()) <= bound;
}

}  // namespace latdiam
