#pragma once

// Explicit constructions: a 3D polytope whose diameter avoids the boundary,
// the semi-algebraic hardness gadget, slope-packed triangles and the
// polytopes with the maximal number of diameter directions, and a rational
// parallelogram chamber.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "latdiam/core.hpp"
#include "latdiam/dilation_count.hpp"
#include "latdiam/oracle.hpp"

namespace latdiam {

// ---------------------------------------------------------------------------
// Polytopes given by vertices

/// <normal, x> <= offset, normal primitive.
struct Facet {
  LatticePoint normal;
  Integer offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset < b.offset   ? std::strong_ordering::less
           : b.offset < a.offset ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }
};

struct LatticePolytope {
  std::vector<LatticePoint> vertices;
  std::vector<Facet> facets;
  PointSet points;

  bool contains(const LatticePoint& x) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
      return dot(f.normal, x) <= f.offset;
    });
  }
  bool on_boundary(const LatticePoint& x) const {
    return contains(x) &&
           std::any_of(facets.begin(), facets.end(), [&](const Facet& f) {
             return dot(f.normal, x) == f.offset;
           });
  }
};

namespace detail {

// Fraction-free Gaussian elimination.
inline Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Normal to d-1 vectors in Z^d by cofactor expansion; zero if dependent.
inline LatticePoint cofactor_normal(const std::vector<LatticePoint>& rows) {
  const std::size_t d = rows.size() + 1;
  LatticePoint n(std::vector<Integer>(d, 0));
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (const auto& r : rows) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < d; ++j)
        if (j != c) row.push_back(r[j]);
      minor.push_back(std::move(row));
    }
    Integer det = determinant(std::move(minor));
    n[c] = (c % 2 == 0) ? det : Integer(-det);
  }
  return n;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Facet inequalities of conv(vertices) for a full-dimensional polytope, from
/// every affinely independent d-subset whose hyperplane supports all vertices.
inline std::vector<Facet> facets_of(const std::vector<LatticePoint>& vertices) {
  if (vertices.empty()) throw ValidationError("polytope needs vertices");
  const std::size_t d = vertices.front().dim();
  if (d < 2) throw ValidationError("polytope needs dimension >= 2");
  std::set<Facet> found;
  detail::for_each_subset(vertices.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> rows;
    for (std::size_t i = 1; i < d; ++i) rows.push_back(vertices[idx[i]] - vertices[idx[0]]);
    LatticePoint n = detail::cofactor_normal(rows);
    if (is_zero(n)) return;
    Integer g = content(n);
    for (auto& c : n.coords) c /= g;
    const Integer level = dot(n, vertices[idx[0]]);
    bool above = false, below = false;
    for (const auto& v : vertices) {
      Integer x = dot(n, v);
      above = above || x > level;
      below = below || x < level;
    }
    if (above && below) return;
    if (above) {
      for (auto& c : n.coords) c = -c;
      found.insert(Facet{n, -level});
    } else {
      found.insert(Facet{n, level});
    }
  });
  if (found.size() < d + 1) throw ValidationError("polytope is not full-dimensional");
  return {found.begin(), found.end()};
}

/// Lattice points of the bounding box satisfying every facet inequality.
inline PointSet lattice_points_in(const std::vector<LatticePoint>& vertices,
                                  const std::vector<Facet>& facets,
                                  std::size_t budget = kDefaultOraclePointBudget) {
  const std::size_t d = vertices.front().dim();
  std::vector<Integer> lo(vertices.front().coords), hi(lo);
  for (const auto& v : vertices)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  Integer box = 1;
  for (std::size_t i = 0; i < d; ++i) box *= hi[i] - lo[i] + 1;
  if (box > Integer(budget) * 64)
    throw BudgetExceeded("bounding box of " + to_string(box) + " points");
  std::vector<LatticePoint> pts;
  LatticePoint x(lo);
  while (true) {
    if (std::all_of(facets.begin(), facets.end(),
                    [&](const Facet& f) { return dot(f.normal, x) <= f.offset; }))
      pts.push_back(x);
    std::size_t i = d;
    while (i > 0 && x[i - 1] == hi[i - 1]) {
      x[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++x[i - 1];
  }
  return PointSet(std::move(pts));
}

inline LatticePolytope lattice_polytope(std::vector<LatticePoint> vertices,
                                        std::size_t budget = kDefaultOraclePointBudget) {
  LatticePolytope p;
  p.facets = facets_of(vertices);
  p.points = lattice_points_in(vertices, p.facets, budget);
  p.vertices = std::move(vertices);
  return p;
}

// ---------------------------------------------------------------------------
// Diameter avoiding the boundary in dimension three

inline LatticePolytope interior_diameter_polytope(const Integer& m) {
  if (m < 2) throw ValidationError("m must be >= 2");
  const Integer one = 1;
  auto pt = [](Integer a, Integer b, Integer c) {
    return LatticePoint(std::vector<Integer>{std::move(a), std::move(b), std::move(c)});
  };
  return lattice_polytope({pt(-m, -1, 0), pt(-m, 0, -1), pt(-m + one, 1, 1),
                           pt(m, 1, 0), pt(m, 0, 1), pt(m - one, -1, -1)});
}

// ---------------------------------------------------------------------------
// Hardness gadget

struct HardnessInstance {
  Integer a, b, c;
  std::size_t d = 3;
  LatticePoint p;
  Integer Z;
  Integer x_min, x_max;
  Rational y_min, y_max;
  /// Defining inequalities, human readable.
  std::vector<std::string> description;

  Integer f(const Integer& x, const Integer& y) const {
    Integer t = x * x - a - b * y;
    return t * t;
  }
};

inline HardnessInstance hardness_instance(const Integer& a, const Integer& b,
                                          const Integer& c, std::size_t d = 3) {
  if (a <= 0 || b <= 0 || c <= 0) throw ValidationError("a, b, c must be positive");
  if (c <= std::max(Integer(2), b)) throw ValidationError("need c > max{2, b}");
  if (d < 3) throw ValidationError("dimension must be >= 3");
  HardnessInstance h;
  h.a = a;
  h.b = b;
  h.c = c;
  h.d = d;
  h.x_min = 1;
  h.x_max = c - 1;
  h.y_min = ratio(1 - a, b);
  h.y_max = ratio((c - 1) * (c - 1) - a, b);
  h.p = LatticePoint(std::vector<Integer>{1, ceil(h.y_min)});
  h.Z = h.f(h.p[0], h.p[1]) + std::max(Integer(floor_div(c * c - 2 * c, b) + 1), Integer(c - 1));
  const std::string A = to_string(a), B = to_string(b), C = to_string(c);
  h.description = {
      "1 <= x",
      "x <= " + to_string(Integer(c - 1)),
      "1 - " + A + " <= " + B + "*y",
      B + "*y <= " + to_string(Integer((c - 1) * (c - 1) - a)),
      "(x^2 - " + A + " - " + B + "*y)^2 <= z",
      "z <= " + to_string(h.Z),
  };
  for (std::size_t i = 0; i + 3 < d; ++i) {
    h.description.push_back("0 <= w" + std::to_string(i + 1));
    h.description.push_back("w" + std::to_string(i + 1) + " <= 1");
  }
  return h;
}

/// min f over R ∩ Z^2.
inline Integer hardness_min_f(const HardnessInstance& h) {
  std::optional<Integer> best;
  for (Integer x = h.x_min; x <= h.x_max; ++x)
    for (Integer y = ceil(h.y_min); y <= floor(h.y_max); ++y) {
      Integer v = h.f(x, y);
      if (!best || v < *best) best = v;
    }
  return *best;
}

/// K_d ∩ Z^d column by column: z from f(x, y) to Z over each (x, y) in R,
/// with the {0,1}^{d-3} factor in front.
inline PointSet hardness_points(const HardnessInstance& h,
                                std::size_t budget = kDefaultOraclePointBudget) {
  std::vector<LatticePoint> base;
  for (Integer x = h.x_min; x <= h.x_max; ++x)
    for (Integer y = ceil(h.y_min); y <= floor(h.y_max); ++y)
      for (Integer z = h.f(x, y); z <= h.Z; ++z) {
        base.push_back(LatticePoint(std::vector<Integer>{x, y, z}));
        if (base.size() > budget)
          throw BudgetExceeded("hardness instance exceeds the point budget");
      }
  const std::size_t extra = h.d - 3;
  if (extra >= 20 || (base.size() << extra) > budget)
    throw BudgetExceeded("hardness instance exceeds the point budget");
  std::vector<LatticePoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << extra); ++mask)
    for (const auto& q : base) {
      std::vector<Integer> c;
      for (std::size_t i = 0; i < extra; ++i) c.emplace_back((mask >> i) & 1);
      c.insert(c.end(), q.coords.begin(), q.coords.end());
      pts.emplace_back(std::move(c));
    }
  return PointSet(std::move(pts));
}

struct HardnessVerification {
  Integer ldiam;
  Integer min_f;
  Integer Z;
  std::size_t points = 0;
  std::vector<Direction> directions;
  /// Every diameter direction is the last unit vector.
  bool direction_ok = false;
  /// ldiam = Z - min f, so ldiam reaches Z exactly when f has a lattice zero.
  bool equivalence_ok = false;
};

inline HardnessVerification verify_hardness_instance(
    const HardnessInstance& h, std::size_t budget = kDefaultOraclePointBudget) {
  const PointSet s = hardness_points(h, budget);
  const OracleReport r = brute_force_diameter(s, budget);
  HardnessVerification v;
  v.ldiam = r.ldiam;
  v.min_f = hardness_min_f(h);
  v.Z = h.Z;
  v.points = s.size();
  v.directions = r.directions;
  std::vector<Integer> up(h.d, 0);
  up.back() = 1;
  const Direction vertical(up);
  v.direction_ok = !r.directions.empty() &&
                   std::all_of(r.directions.begin(), r.directions.end(),
                               [&](const Direction& u) { return u == vertical; });
  v.equivalence_ok = r.ldiam == h.Z - v.min_f && ((r.ldiam == h.Z) == (v.min_f == 0));
  return v;
}

// ---------------------------------------------------------------------------
// Many diameter directions

/// T_{t,x} = conv{(1, t), (x, tx + 1), (-x - 1, -tx - t - 1)}.
inline Polygon2 slope_triangle(const Integer& t, const Integer& x) {
  if (t < 1) throw ValidationError("t must be >= 1");
  if (x < 3) throw ValidationError("x must be >= 3");
  auto pt = [](Integer a, Integer b) {
    return LatticePoint(std::vector<Integer>{std::move(a), std::move(b)});
  };
  return Polygon2({pt(1, t), pt(x, t * x + 1), pt(-x - 1, -t * x - t - 1)});
}

/// t, t + 2/(2x+1), t + 1/(x+2), t + 1/(x+1), t + 1/x, t + 1/(x-1).
inline std::vector<Rational> slope_triangle_slopes(const Integer& t, const Integer& x) {
  const Rational rt(t);
  std::vector<Rational> s{rt,
                          rt + ratio(2, 2 * x + 1),
                          rt + ratio(1, x + 2),
                          rt + ratio(1, x + 1),
                          rt + ratio(1, x),
                          rt + ratio(1, x - 1)};
  std::sort(s.begin(), s.end());
  return s;
}

/// All directions x - y over distinct points of X (normalized, sorted).
inline std::vector<Direction> directions_of(const std::vector<LatticePoint>& xs) {
  std::set<Direction> out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] != xs[j]) out.insert(Direction(xs[j] - xs[i]));
  return {out.begin(), out.end()};
}

/// Directions y - x for x in X × {0}, y in Y × {1}, one entry per pair.
inline std::vector<Direction> cross_directions(const std::vector<LatticePoint>& xs,
                                               const std::vector<LatticePoint>& ys) {
  std::vector<Direction> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      LatticePoint d = y - x;
      d.coords.push_back(1);
      out.emplace_back(d);
    }
  return out;
}

namespace detail {

inline std::vector<LatticePoint> lift(const std::vector<LatticePoint>& xs, long long h) {
  std::vector<LatticePoint> out;
  for (auto p : xs) {
    p.coords.emplace_back(h);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace detail

/// A lattice d-polytope with 2^d lattice points, lattice diameter 1 and
/// binom(2^d, 2) diameter directions: start from T_{i,3}, i = 1..2^{d-2}, and
/// repeatedly stack consecutive pairs at heights 0 and 1.
///
/// With `separate` set, the upper layer of the j-th pair in each round is
/// shifted by j*B along the first axis, B exceeding four times every first
/// coordinate. Every T_{i,3} contains the origin, so without the shift the
/// pairs of one round share the cross direction e_{k+1}, among others.
inline LatticePolytope direction_maximal_polytope(
    std::size_t d, bool separate = true,
    std::size_t budget = kDefaultOraclePointBudget) {
  if (d < 2) throw ValidationError("dimension must be >= 2");
  if (d > 12) throw BudgetExceeded("dimension too large for enumeration");
  std::vector<std::vector<LatticePoint>> level;
  for (std::size_t i = 1; i <= (std::size_t{1} << (d - 2)); ++i)
    level.push_back(slope_triangle(Integer(i), 3).vertices());
  while (level.size() > 1) {
    Integer reach = 0;
    for (const auto& layer : level)
      for (const auto& v : layer) reach = std::max(reach, abs(v[0]));
    const Integer stride = 4 * reach + 1;
    std::vector<std::vector<LatticePoint>> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      auto lower = detail::lift(level[i], 0);
      auto upper = detail::lift(level[i + 1], 1);
      if (separate)
        for (auto& v : upper) v[0] += Integer(i / 2) * stride;
      lower.insert(lower.end(), upper.begin(), upper.end());
      next.push_back(std::move(lower));
    }
    level = std::move(next);
  }
  return lattice_polytope(std::move(level.front()), budget);
}

// ---------------------------------------------------------------------------
// Chamber

struct Chamber {
  RationalParallelogram region;
  Direction u;
};

/// conv{(1/3, 1), (5, 1), (17/3, 3), (1, 3)}, u = (1, 0). The fourth vertex
/// (5, 1) closes the parallelogram through the other three.
inline Chamber reference_chamber() {
  auto pt = [](Rational x, Rational y) {
    return RationalPoint(std::vector<Rational>{std::move(x), std::move(y)});
  };
  return Chamber{RationalParallelogram{{pt(Rational(1, 3), 1), pt(5, 1),
                                        pt(Rational(17, 3), 3), pt(1, 3)}},
                 Direction({1, 0})};
}

}  // namespace latdiam
