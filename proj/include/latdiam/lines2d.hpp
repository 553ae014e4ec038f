#pragma once

// Lattice lines and exact line/polygon clipping.

#include <optional>
#include <string>
#include <vector>

#include "latdiam/core.hpp"

namespace latdiam {

/// The lattice line {base + t*dir}. Its lattice points are exactly
/// base + k*dir for integer k since dir is primitive.
///
/// The base point is canonical: with i the first nonzero coordinate of dir
/// (positive by Direction's sign convention), 0 <= base[i] < dir[i]. Two
/// LatticeLine values describe the same geometric line iff they compare equal.
class LatticeLine {
 public:
  LatticeLine(const LatticePoint& point, Direction dir)
      : base_(point), dir_(std::move(dir)) {
    if (base_.dim() != dir_.dim())
      throw ValidationError("line base and direction differ in dimension");
    std::size_t i = 0;
    while (dir_[i] == 0) ++i;
    Integer k = floor_div(base_[i], dir_[i]);
    for (std::size_t j = 0; j < base_.dim(); ++j) base_[j] -= k * dir_[j];
  }

  static LatticeLine through(const LatticePoint& p, const LatticePoint& q) {
    if (p == q) throw ValidationError("a line needs two distinct points");
    return LatticeLine(p, Direction(q - p));
  }

  const LatticePoint& base() const { return base_; }
  const Direction& dir() const { return dir_; }
  std::size_t dim() const { return base_.dim(); }

  LatticePoint point_at(const Integer& k) const {
    return base_ + k * dir_.as_point();
  }

  bool contains(const LatticePoint& p) const {
    require_same_dim(p, base_);
    LatticePoint d = p - base_;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (d[i] * dir_[j] != d[j] * dir_[i]) return false;
    return true;
  }

  /// Parameter k of a lattice point on the line.
  Integer parameter_of(const LatticePoint& p) const {
    std::size_t i = 0;
    while (dir_[i] == 0) ++i;
    return (p[i] - base_[i]) / dir_[i];
  }

  /// Planar lines only: the level <a, x> of the line for a = (-u2, u1).
  Integer level() const { return dot(transverse_normal(dir_), base_); }

  /// The k-fold dilate kL (k >= 1). Its lattice points contain k*(L's points)
  /// but also the points in between.
  LatticeLine dilate(const Integer& k) const {
    return LatticeLine(k * base_, dir_);
  }

  friend bool operator==(const LatticeLine&, const LatticeLine&) = default;
  friend std::strong_ordering operator<=>(const LatticeLine& a,
                                          const LatticeLine& b) {
    if (auto c = a.dir_ <=> b.dir_; c != 0) return c;
    return a.base_ <=> b.base_;
  }

 private:
  LatticePoint base_;
  Direction dir_;
};

inline std::string to_string(const LatticeLine& l) {
  return to_string(l.base()) + "+t" + to_string(l.dir());
}

/// L ∩ P as the parameter interval [t1, t2] of L = {base + t*dir}.
struct ClippedSegment {
  RationalPoint a, b;
  LatticeLine line;
  Rational t1, t2;
};

inline RationalPoint point_at(const LatticeLine& l, const Rational& t) {
  RationalPoint r;
  r.coords.reserve(l.dim());
  for (std::size_t i = 0; i < l.dim(); ++i)
    r.coords.push_back(Rational(l.base()[i]) + t * Rational(l.dir()[i]));
  return r;
}

/// Exact L ∩ region; nullopt when the line misses. Tangency at a vertex gives
/// t1 == t2.
inline std::optional<ClippedSegment> clip_line(const ConvexRegion2& region,
                                               const LatticeLine& line) {
  if (line.dim() != 2) throw ValidationError("clip_line needs a planar line");
  std::optional<Rational> lo, hi;
  const auto& base = line.base();
  const auto& u = line.dir();
  for (const auto& h : region.planes()) {
    Integer slope = h.nx * u[0] + h.ny * u[1];
    Integer rhs = h.offset - (h.nx * base[0] + h.ny * base[1]);
    if (slope == 0) {
      if (rhs < 0) return std::nullopt;
      continue;
    }
    Rational b = ratio(rhs, slope);
    if (slope > 0) {
      if (!hi || b < *hi) hi = b;
    } else {
      if (!lo || b > *lo) lo = b;
    }
  }
  if (!lo || !hi) throw ValidationError("region is unbounded along the line");
  if (*lo > *hi) return std::nullopt;
  return ClippedSegment{point_at(line, *lo), point_at(line, *hi), line, *lo,
                        *hi};
}

inline std::optional<ClippedSegment> clip_line(const Polygon2& p,
                                               const LatticeLine& line) {
  return clip_line(ConvexRegion2::from_polygon(p), line);
}

/// Normalized length vol(L ∩ P) / |dir| = t2 - t1.
inline Rational nvol(const ClippedSegment& seg) { return seg.t2 - seg.t1; }

/// |L ∩ P ∩ Z²| = floor(t2) - ceil(t1) + 1, clamped at 0.
inline Integer lattice_count_on_clip(const ClippedSegment& seg) {
  Integer n = floor(seg.t2) - ceil(seg.t1) + 1;
  return n < 0 ? Integer(0) : n;
}

/// Lattice points of the clipped segment in increasing parameter order.
inline std::vector<LatticePoint> lattice_points_on_clip(
    const ClippedSegment& seg) {
  std::vector<LatticePoint> pts;
  for (Integer k = ceil(seg.t1); k <= floor(seg.t2); ++k)
    pts.push_back(seg.line.point_at(k));
  return pts;
}

/// |L ∩ region ∩ Z²| using integer arithmetic only.
inline Integer lattice_count(const ConvexRegion2& region,
                             const LatticeLine& line) {
  auto r = lattice_parameter_range(region, line.base(), line.dir().as_point());
  return r ? r->count() : Integer(0);
}

/// The planar lattice line at level <a, x> = level, where a = (-u2, u1).
inline LatticeLine line_at_level(const Direction& u, const Integer& level) {
  LatticePoint a = transverse_normal(u);
  auto [g, s, t] = extended_gcd(a[0], a[1]);
  // a is primitive, so g == 1 and (s, t) * level hits the level exactly.
  return LatticeLine(LatticePoint(std::vector<Integer>{s * level, t * level}),
                     u);
}

}  // namespace latdiam
